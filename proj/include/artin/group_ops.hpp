#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artin/perm_group.hpp"

namespace artin {

Subgroup center(const GroupPtr& g);
Subgroup derived_subgroup(const GroupPtr& g);
Subgroup centralizer(const GroupPtr& g, int x);
Subgroup normalizer(const GroupPtr& g, const Subgroup& h);
Subgroup core(const GroupPtr& g, const Subgroup& h);
Subgroup normal_closure(const GroupPtr& g, const std::vector<int>& gens);
Subgroup sylow(const GroupPtr& g, unsigned long p);
Subgroup p_core(const GroupPtr& g, unsigned long p);
Subgroup fitting(const GroupPtr& g);
std::vector<Subgroup> normal_subgroups(const GroupPtr& g);  // sorted by (order, members)
std::vector<Subgroup> minimal_normals(const GroupPtr& g);
Subgroup socle(const GroupPtr& g);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup conjugate(const Subgroup& h, int g);  // g^-1 H g
bool is_normal(const GroupPtr& g, const Subgroup& h);
bool is_subset(const Subgroup& a, const Subgroup& b);

std::vector<unsigned long> prime_divisors(unsigned long n);

// Nilpotency by uniqueness of Sylow subgroups, and by the lower central series.
bool is_nilpotent_by_sylows(const GroupPtr& h);
bool is_nilpotent_by_central_series(const GroupPtr& h);
bool is_cyclic(const GroupPtr& h);
// Minimal number of generators of a p-group (rank of P / Phi(P)).
unsigned p_group_rank(const GroupPtr& p_group, unsigned long p);
bool is_elementary(const GroupPtr& h);
bool is_elementary_rank_le_2(const GroupPtr& h);

enum class SubgroupFilter { all, nilpotent, cyclic, elementary, elementary_rank_le_2 };
std::string to_string(SubgroupFilter f);
SubgroupFilter parse_filter(const std::string& s);
bool passes(const GroupPtr& h, SubgroupFilter f);

// One representative per conjugacy class of subgroups passing the filter,
// ordered by (order, canonical member list). The representative is the
// conjugate whose sorted member list is lexicographically smallest.
std::vector<Subgroup> subgroups_up_to_conjugacy(const GroupPtr& g, SubgroupFilter filter);

struct AbelianInvariants {
  std::vector<unsigned long> factors;  // d1 | d2 | ... , all > 1
  // coords[i] = exponent vector of element i of the group (same length as factors)
  std::vector<std::vector<unsigned long>> coords;
  GroupPtr group;
  std::size_t order() const;
  std::vector<unsigned long> project(const Perm& x) const;
};
AbelianInvariants abelianization(const GroupPtr& h);

struct Quotient {
  GroupPtr group;                 // action on right cosets of N
  std::vector<int> coset_of;      // parent element -> coset label
  std::vector<int> image;         // parent element -> element index in `group`
  Perm project(const GroupPtr& parent, const Perm& x) const;
};
Quotient quotient_group(const GroupPtr& g, const Subgroup& n);

}  // namespace artin
