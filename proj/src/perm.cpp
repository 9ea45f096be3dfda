#include "artin/perm.hpp"

#include <cctype>
#include <numeric>

#include "artin/errors.hpp"

namespace artin {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw InputError("permutation images are not a bijection");
    seen[x] = 1;
  }
}

Perm Perm::from_cycles(std::size_t degree, std::string_view text) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw InputError("expected '(' in cycle text: " + std::string(text));
    ++i;
    std::vector<std::uint32_t> cyc;
    for (;;) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
      if (i >= text.size()) throw InputError("unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw InputError("bad character in cycle text: " + std::string(text));
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        if (v > 1000000) throw InputError("point out of range");
        ++i;
      }
      if (v < 1 || v > degree) throw InputError("point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      if (used[v - 1]) throw InputError("point " + std::to_string(v) + " repeated in cycle text");
      used[v - 1] = 1;
      cyc.push_back(static_cast<std::uint32_t>(v - 1));
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& other) const {
  if (other.degree() != degree()) throw InputError("degree mismatch in permutation product");
  std::vector<std::uint32_t> r(images_.size());
  for (std::size_t x = 0; x < r.size(); ++x) r[x] = other.images_[images_[x]];
  Perm p;
  p.images_ = std::move(r);
  return p;
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> r(images_.size());
  for (std::size_t x = 0; x < r.size(); ++x) r[images_[x]] = static_cast<std::uint32_t>(x);
  Perm p;
  p.images_ = std::move(r);
  return p;
}

Perm Perm::pow(long long k) const {
  Perm base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Perm acc(degree());
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::size_t Perm::first_moved() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return x;
  return images_.size();
}

std::size_t Perm::order() const {
  std::vector<char> seen(images_.size(), 0);
  std::size_t ord = 1;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Perm::to_cycles() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out += '(';
    bool first = true;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = 1;
      if (!first) out += ' ';
      out += std::to_string(y + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace artin
