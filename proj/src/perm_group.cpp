#include "artin/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "artin/errors.hpp"

namespace artin {

GroupPtr PermGroup::create(std::size_t degree, std::vector<Perm> generators, Limits limits) {
  std::shared_ptr<PermGroup> g(new PermGroup());
  g->degree_ = degree;
  g->limits_ = limits;
  for (auto& p : generators) {
    if (p.degree() != degree) throw InputError("generator degree does not match group degree");
    if (!p.is_identity() && std::find(g->gens_.begin(), g->gens_.end(), p) == g->gens_.end())
      g->gens_.push_back(std::move(p));
  }
  g->schreier_sims();
  if (g->order_ <= BigInt(static_cast<unsigned long>(limits.element_bound))) g->enumerate();
  return g;
}

void PermGroup::rebuild_level(std::size_t l) {
  Level& lv = levels_[l];
  lv.orbit.assign(1, static_cast<int>(lv.point));
  lv.trans_index.assign(degree_, -1);
  lv.transversal.assign(1, Perm(degree_));
  lv.trans_index[lv.point] = 0;
  for (std::size_t q = 0; q < lv.orbit.size(); ++q) {
    int b = lv.orbit[q];
    for (const auto& s : lv.gens) {
      int c = static_cast<int>(s[static_cast<std::size_t>(b)]);
      if (lv.trans_index[static_cast<std::size_t>(c)] >= 0) continue;
      lv.trans_index[static_cast<std::size_t>(c)] = static_cast<int>(lv.transversal.size());
      lv.transversal.push_back(lv.transversal[static_cast<std::size_t>(lv.trans_index[static_cast<std::size_t>(b)])] * s);
      lv.orbit.push_back(c);
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::sift(Perm g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    int t = lv.trans_index[g[lv.point]];
    if (t < 0) return {std::move(g), l};
    g = g * lv.transversal[static_cast<std::size_t>(t)].inverse();
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::schreier_sims() {
  base_.clear();
  levels_.clear();
  if (gens_.empty()) {
    order_ = 1;
    return;
  }
  auto fixes_base_prefix = [&](const Perm& p, std::size_t upto) {
    for (std::size_t b = 0; b < upto; ++b)
      if (p[base_[b]] != base_[b]) return false;
    return true;
  };
  for (const auto& s : gens_) {
    if (fixes_base_prefix(s, base_.size())) base_.push_back(static_cast<std::uint32_t>(s.first_moved()));
  }
  levels_.resize(base_.size());
  for (std::size_t l = 0; l < base_.size(); ++l) {
    levels_[l].point = base_[l];
    for (const auto& s : gens_)
      if (fixes_base_prefix(s, l)) levels_[l].gens.push_back(s);
    rebuild_level(l);
  }
  long i = static_cast<long>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    Level& lv = levels_[static_cast<std::size_t>(i)];
    for (std::size_t q = 0; q < lv.orbit.size() && !restarted; ++q) {
      int b = lv.orbit[q];
      const Perm& ub = lv.transversal[static_cast<std::size_t>(lv.trans_index[static_cast<std::size_t>(b)])];
      for (std::size_t si = 0; si < lv.gens.size() && !restarted; ++si) {
        const Perm& s = lv.gens[si];
        Perm us = ub * s;
        int c = static_cast<int>(s[static_cast<std::size_t>(b)]);
        const Perm& uc = lv.transversal[static_cast<std::size_t>(lv.trans_index[static_cast<std::size_t>(c)])];
        if (us == uc) continue;
        Perm h = us * uc.inverse();
        auto [res, j] = sift(std::move(h), static_cast<std::size_t>(i) + 1);
        if (res.is_identity()) continue;
        if (j == levels_.size()) {
          base_.push_back(static_cast<std::uint32_t>(res.first_moved()));
          Level nl;
          nl.point = base_.back();
          levels_.push_back(std::move(nl));
        }
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          levels_[l].gens.push_back(res);
          rebuild_level(l);
        }
        i = static_cast<long>(j);
        restarted = true;
      }
    }
    if (!restarted) --i;
  }
  order_ = 1;
  for (const auto& lv : levels_) order_ *= static_cast<unsigned long>(lv.orbit.size());
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  return sift(g, 0).first.is_identity();
}

void PermGroup::enumerate() {
  std::size_t n = order_.get_ui();
  std::vector<Perm> found;
  found.reserve(n);
  std::unordered_map<Perm, int, PermHash> seen;
  seen.reserve(n * 2);
  Perm id(degree_);
  seen.emplace(id, 0);
  found.push_back(id);
  for (std::size_t q = 0; q < found.size(); ++q) {
    for (const auto& s : gens_) {
      Perm x = found[q] * s;
      if (seen.emplace(x, 0).second) found.push_back(std::move(x));
    }
  }
  if (found.size() != n) throw std::logic_error("enumeration disagrees with Schreier-Sims order");
  std::sort(found.begin(), found.end());
  elems_ = std::move(found);
  index_.clear();
  index_.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) index_.emplace(elems_[i], static_cast<int>(i));

  gen_idx_.clear();
  for (const auto& s : gens_) gen_idx_.push_back(index_.at(s));
  if (n <= limits_.table_bound) {
    table_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = index_.at(elems_[a] * elems_[b]);
  }
  inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a) inv_[a] = index_.at(elems_[a].inverse());
  order_of_.resize(n);
  exponent_ = 1;
  for (std::size_t a = 0; a < n; ++a) {
    order_of_[a] = elems_[a].order();
    exponent_ = std::lcm(exponent_, static_cast<std::uint64_t>(order_of_[a]));
  }

  // Conjugacy classes by orbits of generator conjugation.
  class_of_.assign(n, -1);
  std::vector<ConjugacyClass> cls;
  for (std::size_t a = 0; a < n; ++a) {
    if (class_of_[a] >= 0) continue;
    ConjugacyClass c;
    c.rep = static_cast<int>(a);
    int id_c = static_cast<int>(cls.size());
    class_of_[a] = id_c;
    c.members.push_back(static_cast<int>(a));
    for (std::size_t q = 0; q < c.members.size(); ++q) {
      for (int s : gen_idx_) {
        int y = conj(c.members[q], s);
        if (class_of_[static_cast<std::size_t>(y)] < 0) {
          class_of_[static_cast<std::size_t>(y)] = id_c;
          c.members.push_back(y);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.size = c.members.size();
    c.element_order = order_of_[a];
    c.centralizer_order = n / c.size;
    cls.push_back(std::move(c));
  }
  std::vector<int> perm(cls.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int x, int y) {
    const auto& cx = cls[static_cast<std::size_t>(x)];
    const auto& cy = cls[static_cast<std::size_t>(y)];
    if (cx.size != cy.size) return cx.size < cy.size;
    return cx.rep < cy.rep;
  });
  classes_.clear();
  std::vector<int> rename(cls.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    rename[static_cast<std::size_t>(perm[k])] = static_cast<int>(k);
    classes_.push_back(std::move(cls[static_cast<std::size_t>(perm[k])]));
  }
  for (auto& c : class_of_) c = rename[static_cast<std::size_t>(c)];
  inverse_class_.resize(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c)
    inverse_class_[c] = class_of_[static_cast<std::size_t>(inv_[static_cast<std::size_t>(classes_[c].rep)])];
}

void PermGroup::require_enumerated() const {
  if (elems_.empty())
    throw CapacityError("group of order " + order_.get_str() + " exceeds the enumeration bound " +
                        std::to_string(limits_.element_bound));
}

std::size_t PermGroup::size() const {
  require_enumerated();
  return elems_.size();
}

const Perm& PermGroup::element(int i) const {
  require_enumerated();
  return elems_.at(static_cast<std::size_t>(i));
}

int PermGroup::index_of(const Perm& g) const {
  require_enumerated();
  auto it = index_.find(g);
  return it == index_.end() ? -1 : it->second;
}

int PermGroup::mul(int a, int b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elems_.size() + static_cast<std::size_t>(b)];
  require_enumerated();
  return index_.at(elems_[static_cast<std::size_t>(a)] * elems_[static_cast<std::size_t>(b)]);
}

int PermGroup::inv(int a) const {
  require_enumerated();
  return inv_[static_cast<std::size_t>(a)];
}

int PermGroup::power(int a, long long k) const {
  require_enumerated();
  int base = k < 0 ? inv(a) : a;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  e %= order_of_[static_cast<std::size_t>(a)];
  int acc = 0;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int PermGroup::conj(int a, int g) const { return mul(mul(inv(g), a), g); }

int PermGroup::commutator(int a, int b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

std::size_t PermGroup::element_order(int a) const {
  require_enumerated();
  return order_of_[static_cast<std::size_t>(a)];
}

const std::vector<int>& PermGroup::generator_indices() const {
  require_enumerated();
  return gen_idx_;
}

std::size_t PermGroup::num_classes() const {
  require_enumerated();
  return classes_.size();
}

const std::vector<ConjugacyClass>& PermGroup::classes() const {
  require_enumerated();
  return classes_;
}

int PermGroup::class_of(int a) const {
  require_enumerated();
  return class_of_[static_cast<std::size_t>(a)];
}

int PermGroup::inverse_class(int c) const {
  require_enumerated();
  return inverse_class_[static_cast<std::size_t>(c)];
}

int PermGroup::power_class(int c, long long k) const {
  return class_of(power(classes().at(static_cast<std::size_t>(c)).rep, k));
}

std::uint64_t PermGroup::exponent() const {
  require_enumerated();
  return exponent_;
}

// ---- subgroups ----

std::vector<int> closure_members(const PermGroup& g, const std::vector<int>& gens) {
  std::size_t n = g.size();
  std::vector<char> in(n, 0);
  std::vector<int> out{0};
  in[0] = 1;
  for (std::size_t q = 0; q < out.size(); ++q) {
    for (int s : gens) {
      int y = g.mul(out[q], s);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Subgroup build(const GroupPtr& parent, std::vector<int> members, const std::vector<int>& gens) {
  Subgroup s;
  s.parent = parent;
  s.members = std::move(members);
  s.mask.assign(parent->size(), 0);
  for (int m : s.members) s.mask[static_cast<std::size_t>(m)] = 1;
  std::vector<Perm> pg;
  for (int x : gens) pg.push_back(parent->element(x));
  s.group = PermGroup::create(parent->degree(), std::move(pg), parent->limits());
  if (s.group->size() != s.members.size()) throw std::logic_error("subgroup construction mismatch");
  return s;
}

}  // namespace

Subgroup subgroup_generated(const GroupPtr& parent, const std::vector<int>& gens) {
  // Drop redundant generators so that the stored generating set stays small.
  std::vector<int> kept;
  std::vector<int> span{0};
  std::vector<char> in(parent->size(), 0);
  in[0] = 1;
  for (int x : gens) {
    if (in[static_cast<std::size_t>(x)]) continue;
    kept.push_back(x);
    span = closure_members(*parent, kept);
    std::fill(in.begin(), in.end(), 0);
    for (int m : span) in[static_cast<std::size_t>(m)] = 1;
  }
  return build(parent, span, kept);
}

Subgroup subgroup_from_members(const GroupPtr& parent, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup s = subgroup_generated(parent, members);
  if (s.members != members) throw PreconditionError("member set is not a subgroup");
  return s;
}

Subgroup whole_group(const GroupPtr& g) {
  std::vector<int> all(g->size());
  std::iota(all.begin(), all.end(), 0);
  return build(g, all, g->generator_indices());
}

Subgroup trivial_subgroup(const GroupPtr& g) { return build(g, {0}, {}); }

Subgroup subgroup_from_perms(const GroupPtr& parent, const std::vector<Perm>& gens) {
  std::vector<int> idx;
  for (const auto& p : gens) {
    int i = parent->index_of(p);
    if (i < 0) throw InputError("generator " + p.to_cycles() + " is not in the parent group");
    idx.push_back(i);
  }
  return subgroup_generated(parent, idx);
}

}  // namespace artin
