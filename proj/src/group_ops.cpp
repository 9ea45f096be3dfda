#include "artin/group_ops.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "artin/errors.hpp"
#include "artin/integer_matrix.hpp"

namespace artin {

namespace {

std::vector<int> all_indices(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

std::vector<unsigned long> prime_divisors(unsigned long n) {
  std::vector<unsigned long> ps;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

Subgroup center(const GroupPtr& g) {
  std::vector<int> z;
  const auto& gens = g->generator_indices();
  for (std::size_t x = 0; x < g->size(); ++x) {
    bool central = true;
    for (int s : gens)
      if (g->mul(static_cast<int>(x), s) != g->mul(s, static_cast<int>(x))) {
        central = false;
        break;
      }
    if (central) z.push_back(static_cast<int>(x));
  }
  return subgroup_from_members(g, z);
}

Subgroup centralizer(const GroupPtr& g, int x) {
  std::vector<int> c;
  for (std::size_t y = 0; y < g->size(); ++y)
    if (g->mul(static_cast<int>(y), x) == g->mul(x, static_cast<int>(y))) c.push_back(static_cast<int>(y));
  return subgroup_from_members(g, c);
}

Subgroup normal_closure(const GroupPtr& g, const std::vector<int>& gens) {
  std::vector<char> in(g->size(), 0);
  std::vector<int> members = closure_members(*g, gens);
  for (;;) {
    std::fill(in.begin(), in.end(), 0);
    for (int m : members) in[static_cast<std::size_t>(m)] = 1;
    std::vector<int> extra;
    for (int m : members)
      for (int s : g->generator_indices()) {
        int y = g->conj(m, s);
        if (!in[static_cast<std::size_t>(y)]) {
          in[static_cast<std::size_t>(y)] = 1;
          extra.push_back(y);
        }
      }
    if (extra.empty()) break;
    std::vector<int> gs = members;
    gs.insert(gs.end(), extra.begin(), extra.end());
    members = closure_members(*g, gs);
  }
  return subgroup_from_members(g, members);
}

Subgroup derived_subgroup(const GroupPtr& g) {
  std::vector<int> comms;
  const auto& gens = g->generator_indices();
  for (int a : gens)
    for (int b : gens) comms.push_back(g->commutator(a, b));
  return normal_closure(g, comms);
}

bool is_subset(const Subgroup& a, const Subgroup& b) {
  for (int m : a.members)
    if (!b.contains(m)) return false;
  return true;
}

Subgroup normalizer(const GroupPtr& g, const Subgroup& h) {
  std::vector<int> hg;
  for (const auto& p : h.group->generators()) hg.push_back(g->index_of(p));
  std::vector<int> n;
  for (std::size_t x = 0; x < g->size(); ++x) {
    bool ok = true;
    for (int s : hg)
      if (!h.contains(g->conj(s, static_cast<int>(x)))) {
        ok = false;
        break;
      }
    if (ok) n.push_back(static_cast<int>(x));
  }
  return subgroup_from_members(g, n);
}

Subgroup conjugate(const Subgroup& h, int x) {
  const auto& g = h.parent;
  std::vector<int> m;
  m.reserve(h.members.size());
  for (int y : h.members) m.push_back(g->conj(y, x));
  return subgroup_from_members(g, m);
}

bool is_normal(const GroupPtr& g, const Subgroup& h) {
  for (const auto& p : h.group->generators()) {
    int y = g->index_of(p);
    for (int s : g->generator_indices())
      if (!h.contains(g->conj(y, s))) return false;
  }
  return true;
}

Subgroup core(const GroupPtr& g, const Subgroup& h) {
  std::vector<int> c;
  for (int y : h.members) {
    bool ok = true;
    for (std::size_t x = 0; x < g->size() && ok; ++x)
      if (!h.contains(g->conj(y, static_cast<int>(x)))) ok = false;
    if (ok) c.push_back(y);
  }
  return subgroup_from_members(g, c);
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<int> m;
  for (int x : a.members)
    if (b.contains(x)) m.push_back(x);
  return subgroup_from_members(a.parent, m);
}

Subgroup sylow(const GroupPtr& g, unsigned long p) {
  std::size_t n = g->size();
  if (p < 2 || n % p != 0) throw PreconditionError("prime " + std::to_string(p) + " does not divide the group order");
  std::size_t target = 1;
  while (n % (target * p) == 0) target *= p;
  auto is_p_power = [p](std::size_t k) {
    while (k % p == 0) k /= p;
    return k == 1;
  };
  Subgroup cur = trivial_subgroup(g);
  while (cur.order() < target) {
    Subgroup nrm = normalizer(g, cur);
    int pick = -1;
    for (int x : nrm.members) {
      if (cur.contains(x)) continue;
      if (is_p_power(g->element_order(x))) {
        pick = x;
        break;
      }
    }
    if (pick < 0) throw std::logic_error("Sylow search stalled");
    std::vector<int> gens;
    for (const auto& q : cur.group->generators()) gens.push_back(g->index_of(q));
    gens.push_back(pick);
    cur = subgroup_generated(g, gens);
  }
  return cur;
}

Subgroup p_core(const GroupPtr& g, unsigned long p) {
  if (g->size() % p != 0) return trivial_subgroup(g);
  return core(g, sylow(g, p));
}

Subgroup fitting(const GroupPtr& g) {
  std::vector<int> gens;
  for (auto p : prime_divisors(g->size())) {
    Subgroup o = p_core(g, p);
    for (const auto& q : o.group->generators()) gens.push_back(g->index_of(q));
  }
  return subgroup_generated(g, gens);
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g) {
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  auto add = [&](Subgroup s) {
    if (seen.insert(s.members).second) out.push_back(std::move(s));
  };
  add(trivial_subgroup(g));
  std::vector<Subgroup> closures;
  for (const auto& c : g->classes()) {
    Subgroup s = normal_closure(g, {c.rep});
    if (seen.insert(s.members).second) {
      out.push_back(s);
    }
    closures.push_back(std::move(s));
  }
  // Joins of normal closures of classes give every normal subgroup.
  for (std::size_t q = 0; q < out.size(); ++q) {
    for (const auto& c : closures) {
      if (is_subset(c, out[q])) continue;
      std::vector<int> gens;
      for (const auto& p : out[q].group->generators()) gens.push_back(g->index_of(p));
      for (const auto& p : c.group->generators()) gens.push_back(g->index_of(p));
      add(subgroup_generated(g, gens));
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  return out;
}

std::vector<Subgroup> minimal_normals(const GroupPtr& g) {
  auto all = normal_subgroups(g);
  std::vector<Subgroup> out;
  for (std::size_t i = 1; i < all.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 1; j < all.size() && minimal; ++j)
      if (j != i && all[j].order() < all[i].order() && is_subset(all[j], all[i])) minimal = false;
    if (minimal) out.push_back(all[i]);
  }
  return out;
}

Subgroup socle(const GroupPtr& g) {
  std::vector<int> gens;
  for (const auto& m : minimal_normals(g))
    for (const auto& p : m.group->generators()) gens.push_back(g->index_of(p));
  return subgroup_generated(g, gens);
}

bool is_nilpotent_by_sylows(const GroupPtr& h) {
  std::size_t n = h->size();
  for (auto p : prime_divisors(n)) {
    std::size_t pp = 1;
    while (n % (pp * p) == 0) pp *= p;
    std::size_t count = 0;
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t o = h->element_order(static_cast<int>(x));
      while (o % p == 0) o /= p;
      if (o == 1) ++count;
    }
    // A unique Sylow p-subgroup holds exactly the p-elements.
    if (count != pp) return false;
  }
  return true;
}

bool is_nilpotent_by_central_series(const GroupPtr& h) {
  // Lower central series: gamma_{i+1} = [gamma_i, H].
  std::vector<int> cur = all_indices(h->size());
  for (;;) {
    if (cur.size() == 1) return true;
    std::vector<int> comms;
    std::vector<int> cg;
    Subgroup cs = subgroup_from_members(h, cur);
    for (const auto& p : cs.group->generators()) cg.push_back(h->index_of(p));
    for (int a : cg)
      for (int b : h->generator_indices()) comms.push_back(h->commutator(a, b));
    std::vector<int> next = normal_closure(h, comms).members;
    if (next.size() == cur.size()) return false;
    cur = std::move(next);
  }
}

bool is_cyclic(const GroupPtr& h) {
  std::size_t n = h->size();
  for (std::size_t x = 0; x < n; ++x)
    if (h->element_order(static_cast<int>(x)) == n) return true;
  return false;
}

unsigned p_group_rank(const GroupPtr& pg, unsigned long p) {
  std::size_t n = pg->size();
  if (n == 1) return 0;
  // Frattini subgroup of a p-group: generated by commutators and p-th powers.
  std::vector<int> gens;
  for (int a : pg->generator_indices()) {
    gens.push_back(pg->power(a, static_cast<long long>(p)));
    for (int b : pg->generator_indices()) gens.push_back(pg->commutator(a, b));
  }
  std::size_t phi = normal_closure(pg, gens).order();
  std::size_t idx = n / phi;
  unsigned r = 0;
  while (idx > 1) {
    idx /= p;
    ++r;
  }
  return r;
}

namespace {

// Sylow subgroups of a nilpotent group, as standalone groups.
std::vector<std::pair<unsigned long, GroupPtr>> sylow_factors(const GroupPtr& h) {
  std::vector<std::pair<unsigned long, GroupPtr>> out;
  for (auto p : prime_divisors(h->size())) out.emplace_back(p, sylow(h, p).group);
  return out;
}

}  // namespace

bool is_elementary(const GroupPtr& h) {
  if (!is_nilpotent_by_sylows(h)) return false;
  auto fs = sylow_factors(h);
  if (fs.size() <= 1) return true;
  // Some prime p such that all other Sylow subgroups are cyclic.
  std::size_t noncyclic = 0;
  for (auto& f : fs)
    if (!is_cyclic(f.second)) ++noncyclic;
  return noncyclic <= 1;
}

bool is_elementary_rank_le_2(const GroupPtr& h) {
  if (!is_elementary(h)) return false;
  for (auto& f : sylow_factors(h))
    if (p_group_rank(f.second, f.first) > 2) return false;
  return true;
}

std::string to_string(SubgroupFilter f) {
  switch (f) {
    case SubgroupFilter::all: return "all";
    case SubgroupFilter::nilpotent: return "nilpotent";
    case SubgroupFilter::cyclic: return "cyclic";
    case SubgroupFilter::elementary: return "elementary";
    case SubgroupFilter::elementary_rank_le_2: return "rank2";
  }
  return "?";
}

SubgroupFilter parse_filter(const std::string& s) {
  if (s == "all") return SubgroupFilter::all;
  if (s == "nilpotent") return SubgroupFilter::nilpotent;
  if (s == "cyclic") return SubgroupFilter::cyclic;
  if (s == "elementary") return SubgroupFilter::elementary;
  if (s == "rank2" || s == "elementary_rank_le_2") return SubgroupFilter::elementary_rank_le_2;
  throw InputError("unknown subgroup family: " + s);
}

bool passes(const GroupPtr& h, SubgroupFilter f) {
  switch (f) {
    case SubgroupFilter::all: return true;
    case SubgroupFilter::nilpotent: return is_nilpotent_by_sylows(h);
    case SubgroupFilter::cyclic: return is_cyclic(h);
    case SubgroupFilter::elementary: return is_elementary(h);
    case SubgroupFilter::elementary_rank_le_2: return is_elementary_rank_le_2(h);
  }
  return false;
}

std::size_t AbelianInvariants::order() const {
  std::size_t n = 1;
  for (auto d : factors) n *= d;
  return n;
}

std::vector<unsigned long> AbelianInvariants::project(const Perm& x) const {
  int i = group->index_of(x);
  if (i < 0) throw InputError("element not in group");
  return coords[static_cast<std::size_t>(i)];
}

AbelianInvariants abelianization(const GroupPtr& h) {
  AbelianInvariants out;
  out.group = h;
  std::size_t n = h->size();
  Subgroup d = derived_subgroup(h);
  // Cosets of the derived subgroup, labelled in order of first element.
  std::vector<int> coset(n, -1);
  std::vector<int> coset_rep;
  for (std::size_t x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    int id = static_cast<int>(coset_rep.size());
    coset_rep.push_back(static_cast<int>(x));
    for (int m : d.members) coset[static_cast<std::size_t>(h->mul(m, static_cast<int>(x)))] = id;
  }
  const auto& gens = h->generator_indices();
  std::size_t k = gens.size();
  std::size_t nc = coset_rep.size();
  // Spanning tree words on the Cayley graph of the quotient.
  std::vector<std::vector<BigInt>> word(nc);
  std::vector<char> done(nc, 0);
  word[0].assign(k, 0);
  done[0] = 1;
  std::vector<int> queue{0};
  RowLattice rel(k);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int c = queue[q];
    for (std::size_t s = 0; s < k; ++s) {
      int c2 = coset[static_cast<std::size_t>(h->mul(coset_rep[static_cast<std::size_t>(c)], gens[s]))];
      std::vector<BigInt> w = word[static_cast<std::size_t>(c)];
      w[s] += 1;
      if (!done[static_cast<std::size_t>(c2)]) {
        done[static_cast<std::size_t>(c2)] = 1;
        word[static_cast<std::size_t>(c2)] = std::move(w);
        queue.push_back(c2);
      } else {
        for (std::size_t j = 0; j < k; ++j) w[j] -= word[static_cast<std::size_t>(c2)][j];
        rel.add(std::move(w));
      }
    }
  }
  auto snf = smith_columns(rel.rows(), k);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < k; ++i) {
    if (snf.diag[i] == 0) throw std::logic_error("abelianization of a finite group is infinite");
    if (snf.diag[i] != 1) {
      keep.push_back(i);
      out.factors.push_back(snf.diag[i].get_ui());
    }
  }
  std::vector<std::vector<unsigned long>> coset_coords(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    for (std::size_t idx = 0; idx < keep.size(); ++idx) {
      std::size_t col = keep[idx];
      BigInt y = 0;
      for (std::size_t j = 0; j < k; ++j) y += word[c][j] * snf.q[j][col];
      BigInt r;
      mpz_fdiv_r_ui(r.get_mpz_t(), y.get_mpz_t(), out.factors[idx]);
      coset_coords[c].push_back(r.get_ui());
    }
  }
  out.coords.resize(n);
  for (std::size_t x = 0; x < n; ++x) out.coords[x] = coset_coords[static_cast<std::size_t>(coset[x])];
  return out;
}

Perm Quotient::project(const GroupPtr& parent, const Perm& x) const {
  int i = parent->index_of(x);
  if (i < 0) throw InputError("element not in group");
  return group->element(image[static_cast<std::size_t>(i)]);
}

Quotient quotient_group(const GroupPtr& g, const Subgroup& nsub) {
  if (!is_normal(g, nsub)) throw PreconditionError("subgroup is not normal");
  std::size_t n = g->size();
  Quotient q;
  q.coset_of.assign(n, -1);
  std::vector<int> reps;
  // Right cosets N x.
  for (std::size_t x = 0; x < n; ++x) {
    if (q.coset_of[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(x));
    for (int m : nsub.members) q.coset_of[static_cast<std::size_t>(g->mul(m, static_cast<int>(x)))] = id;
  }
  std::size_t deg = reps.size();
  auto action = [&](int s) {
    std::vector<std::uint32_t> img(deg);
    for (std::size_t c = 0; c < deg; ++c)
      img[c] = static_cast<std::uint32_t>(q.coset_of[static_cast<std::size_t>(g->mul(reps[c], s))]);
    return Perm(std::move(img));
  };
  std::vector<Perm> gens;
  for (int s : g->generator_indices()) gens.push_back(action(s));
  q.group = PermGroup::create(deg, gens, g->limits());
  q.image.resize(n);
  for (std::size_t x = 0; x < n; ++x) q.image[x] = q.group->index_of(action(static_cast<int>(x)));
  return q;
}

}  // namespace artin
