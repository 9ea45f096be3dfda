#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "artin/bigint.hpp"
#include "artin/perm.hpp"

namespace artin {

struct Limits {
  std::size_t element_bound = 10000;   // full element enumeration
  std::size_t subgroup_bound = 2000;   // subgroup lattice up to conjugacy
  std::size_t table_bound = 2000;      // precomputed Cayley table
};

struct ConjugacyClass {
  int rep = 0;                 // element index of the minimal member
  std::size_t size = 0;
  std::vector<int> members;    // sorted element indices
  std::size_t element_order = 1;
  std::size_t centralizer_order = 1;
};

class PermGroup;
using GroupPtr = std::shared_ptr<const PermGroup>;

// Permutation group with a base and strong generating set. Groups within
// Limits::element_bound are also enumerated: elements sorted by image
// arrays (identity is index 0), inverses, orders and conjugacy classes
// ordered by (size, representative).
class PermGroup {
 public:
  static GroupPtr create(std::size_t degree, std::vector<Perm> generators, Limits limits = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const BigInt& order() const { return order_; }
  const Limits& limits() const { return limits_; }
  bool contains(const Perm& g) const;
  const std::vector<std::uint32_t>& base() const { return base_; }

  bool enumerated() const { return !elems_.empty(); }
  // Everything below requires enumerated(); otherwise CapacityError.
  std::size_t size() const;
  const Perm& element(int i) const;
  int index_of(const Perm& g) const;  // -1 when g is not in the group
  int mul(int a, int b) const;
  int inv(int a) const;
  int power(int a, long long k) const;
  int conj(int a, int g) const;  // g^-1 a g
  int commutator(int a, int b) const;  // a^-1 b^-1 a b
  std::size_t element_order(int a) const;
  const std::vector<int>& generator_indices() const;

  std::size_t num_classes() const;
  const std::vector<ConjugacyClass>& classes() const;
  int class_of(int a) const;
  // Class of the inverse of class c's elements.
  int inverse_class(int c) const;
  // Class containing rep(c)^k.
  int power_class(int c, long long k) const;
  std::uint64_t exponent() const;

 private:
  PermGroup() = default;
  void schreier_sims();
  void enumerate();
  void require_enumerated() const;

  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  Limits limits_;
  BigInt order_ = 1;

  struct Level {
    std::uint32_t point = 0;
    std::vector<Perm> gens;
    std::vector<int> orbit;
    std::vector<int> trans_index;  // point -> index into transversal, -1 if not in orbit
    std::vector<Perm> transversal;
  };
  std::vector<std::uint32_t> base_;
  std::vector<Level> levels_;
  void rebuild_level(std::size_t l);
  // Sift g starting at level `from`; returns residue and the level where it stopped.
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const;

  std::vector<Perm> elems_;
  std::unordered_map<Perm, int, PermHash> index_;
  std::vector<int> table_;  // row-major Cayley table when small
  std::vector<int> inv_;
  std::vector<std::size_t> order_of_;
  std::vector<int> gen_idx_;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
  std::vector<int> inverse_class_;
  std::uint64_t exponent_ = 1;
};

// A subgroup of an enumerated parent, carried with its own group object.
// members[i] is the parent index of group->element(i) (both sorted).
struct Subgroup {
  GroupPtr parent;
  GroupPtr group;
  std::vector<int> members;
  std::vector<char> mask;  // indexed by parent element

  std::size_t order() const { return members.size(); }
  bool contains(int parent_index) const { return mask[static_cast<std::size_t>(parent_index)] != 0; }
  bool operator==(const Subgroup& o) const { return parent == o.parent && members == o.members; }
};

// Subgroup generated by parent elements.
Subgroup subgroup_generated(const GroupPtr& parent, const std::vector<int>& gens);
// Subgroup from an explicit member set (must be closed; checked).
Subgroup subgroup_from_members(const GroupPtr& parent, std::vector<int> members);
Subgroup whole_group(const GroupPtr& g);
Subgroup trivial_subgroup(const GroupPtr& g);
// Subgroup given by permutation generators; each must lie in the parent.
Subgroup subgroup_from_perms(const GroupPtr& parent, const std::vector<Perm>& gens);

// Closure of a set of parent indices under multiplication.
std::vector<int> closure_members(const PermGroup& g, const std::vector<int>& gens);

}  // namespace artin
