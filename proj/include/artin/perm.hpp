#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace artin {

// Permutation of {0..n-1}. Text forms are 1-based cycle notation.
// Products compose left to right: (p * q)[x] == q[p[x]].
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  explicit Perm(std::vector<std::uint32_t> images);

  // "(1 2 3)(4 5)"; "()" or "" is the identity.
  static Perm from_cycles(std::size_t degree, std::string_view text);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Perm operator*(const Perm& other) const;
  Perm inverse() const;
  Perm pow(long long k) const;
  bool is_identity() const;
  // Smallest moved point, or degree() for the identity.
  std::size_t first_moved() const;
  std::size_t order() const;
  std::string to_cycles() const;

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace artin
