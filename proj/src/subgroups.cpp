#include <algorithm>
#include <set>

#include "artin/errors.hpp"
#include "artin/group_ops.hpp"

namespace artin {

namespace {

// Lexicographically smallest sorted member list over all conjugates.
std::vector<int> canonical_members(const PermGroup& g, const std::vector<int>& members) {
  std::vector<int> best = members;
  std::vector<int> cur(members.size());
  for (std::size_t x = 1; x < g.size(); ++x) {
    for (std::size_t i = 0; i < members.size(); ++i) cur[i] = g.conj(members[i], static_cast<int>(x));
    std::sort(cur.begin(), cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

}  // namespace

std::vector<Subgroup> subgroups_up_to_conjugacy(const GroupPtr& g, SubgroupFilter filter) {
  if (g->order() > BigInt(static_cast<unsigned long>(g->limits().subgroup_bound)))
    throw CapacityError("group of order " + g->order().get_str() + " exceeds the subgroup enumeration bound " +
                        std::to_string(g->limits().subgroup_bound));
  std::size_t n = g->size();
  // Every subgroup V > 1 is <U, x> for a maximal subgroup U of V, and U is
  // conjugate to an earlier representative, so extending representatives by
  // single elements reaches every class.
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> reps;
  reps.push_back(trivial_subgroup(g));
  seen.insert(reps[0].members);
  for (std::size_t q = 0; q < reps.size(); ++q) {
    std::vector<int> base_gens;
    for (const auto& p : reps[q].group->generators()) base_gens.push_back(g->index_of(p));
    std::set<std::vector<int>> local;
    for (std::size_t x = 0; x < n; ++x) {
      if (reps[q].contains(static_cast<int>(x))) continue;
      std::vector<int> gens = base_gens;
      gens.push_back(static_cast<int>(x));
      std::vector<int> v = closure_members(*g, gens);
      if (!local.insert(v).second) continue;
      std::vector<int> c = canonical_members(*g, v);
      if (!seen.insert(c).second) continue;
      reps.push_back(subgroup_from_members(g, std::move(c)));
    }
  }
  std::vector<Subgroup> out;
  for (auto& r : reps)
    if (passes(r.group, filter)) out.push_back(std::move(r));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  return out;
}

}  // namespace artin
