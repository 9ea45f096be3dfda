#include "artin/induction.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "artin/errors.hpp"
#include "artin/integer_matrix.hpp"

namespace artin {

namespace {

std::size_t family_slot(SubgroupFilter f) { return static_cast<std::size_t>(f); }

// in_R[i]: no constraint subgroup lies in ker chi_i.
std::vector<char> r_membership(const CharacterTable& t, const std::vector<Subgroup>& normals) {
  const auto& g = *t.group;
  std::vector<char> in(t.size(), 1);
  for (const auto& n : normals) {
    std::vector<char> cls(g.num_classes(), 0);
    for (int x : n.members) cls[static_cast<std::size_t>(g.class_of(x))] = 1;
    for (std::size_t i = 0; i < t.size(); ++i) {
      bool contains = true;
      for (std::size_t c = 0; c < cls.size() && contains; ++c)
        if (cls[c] && t.irr[i][c] != t.irr[i].at_identity()) contains = false;
      if (contains) in[i] = 0;
    }
  }
  return in;
}

IntMatrix flattened_rows(const MonomialCatalog& cat, const std::vector<std::size_t>& mons, std::uint64_t e) {
  IntMatrix rows;
  for (std::size_t m : mons) {
    auto flat = flatten(cat.monomial(m).induced, e);
    std::vector<BigInt> r(flat.size());
    for (std::size_t i = 0; i < flat.size(); ++i) {
      if (flat[i].get_den() != 1) throw std::logic_error("induced character with non-integral coordinates");
      r[i] = flat[i].get_num();
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

IntMatrix transpose(const IntMatrix& a, std::size_t cols) {
  IntMatrix t(cols, std::vector<BigInt>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
  return t;
}

// Columns ordered by (distinct constituents, constituents with multiplicity,
// canonical index).
std::vector<std::size_t> sparse_first(const MonomialCatalog& cat, const std::vector<std::size_t>& mons) {
  std::vector<std::size_t> order(mons.size());
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](std::size_t i) {
    const auto& m = cat.monomial(mons[i]);
    long total = std::accumulate(m.mult.begin(), m.mult.end(), 0L);
    return std::make_pair(m.constituents, total);
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  return order;
}

std::string describe(const ClassFunction& f) {
  std::string s = "(";
  for (std::size_t c = 0; c < f.size(); ++c) s += (c ? ", " : "") + f[c].pretty();
  return s + ")";
}

}  // namespace

MonomialCatalog::MonomialCatalog(GroupPtr g, std::shared_ptr<const CharacterTable> table)
    : g_(std::move(g)), table_(std::move(table)) {
  if (table_->group != g_) throw InputError("character table belongs to a different group");
  subs_ = subgroups_up_to_conjugacy(g_, SubgroupFilter::all);
  minimal_ = minimal_normals(g_);
  auto faithful = faithful_irreducibles(*table_);
  for (std::size_t s = 0; s < subs_.size(); ++s) {
    const auto& h = subs_[s];
    std::array<bool, 5> fl{};
    for (auto f : {SubgroupFilter::all, SubgroupFilter::nilpotent, SubgroupFilter::cyclic, SubgroupFilter::elementary,
                   SubgroupFilter::elementary_rank_le_2})
      fl[family_slot(f)] = passes(h.group, f);
    fam_.push_back(fl);
    auto lc = linear_character_exponents(h.group);
    for (std::size_t j = 0; j < lc.exps.size(); ++j) {
      MonomialCharacter m;
      m.subgroup = s;
      m.psi = j;
      m.e = lc.e;
      m.exps = lc.exps[j];
      m.induced = induce(h, linear_from_exponents(h.group, m.e, m.exps));
      m.mult = character_multiplicities(m.induced, *table_);
      m.faithful = true;
      for (std::size_t i = 0; i < m.mult.size(); ++i) {
        if (!m.mult[i]) continue;
        ++m.constituents;
        if (!std::binary_search(faithful.begin(), faithful.end(), i)) m.faithful = false;
      }
      mons_.push_back(std::move(m));
    }
  }
}

bool MonomialCatalog::in_family(std::size_t subgroup, SubgroupFilter f) const { return fam_[subgroup][family_slot(f)]; }

ClassFunction MonomialCatalog::psi_function(const MonomialCharacter& m) const {
  return linear_from_exponents(subs_[m.subgroup].group, m.e, m.exps);
}

std::uint32_t MonomialCatalog::psi_exponent(const MonomialCharacter& m, int x) const {
  const auto& h = subs_[m.subgroup];
  auto it = std::lower_bound(h.members.begin(), h.members.end(), x);
  if (it == h.members.end() || *it != x) throw InputError("element is not in the subgroup");
  int idx = static_cast<int>(it - h.members.begin());
  return m.exps[static_cast<std::size_t>(h.group->class_of(idx))];
}

bool MonomialCatalog::avoids_kernel(const MonomialCharacter& m, const Subgroup& n) const {
  const auto& h = subs_[m.subgroup];
  for (int x : n.members)
    if (h.contains(x) && psi_exponent(m, x) != 0) return true;
  return false;
}

bool MonomialCatalog::kernel_condition(const MonomialCharacter& m, const std::vector<Subgroup>& normals) const {
  for (const auto& n : normals)
    if (!avoids_kernel(m, n)) return false;
  return true;
}

std::vector<std::size_t> MonomialCatalog::qualifying(SubgroupFilter f, const std::vector<Subgroup>& normals) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mons_.size(); ++i)
    if (in_family(mons_[i].subgroup, f) && kernel_condition(mons_[i], normals)) out.push_back(i);
  return out;
}

std::vector<std::size_t> faithful_monomials(const MonomialCatalog& cat) {
  std::vector<std::size_t> out;
  for (std::size_t i : cat.qualifying(SubgroupFilter::nilpotent, cat.minimal_normal_subgroups())) {
    bool dup = false;
    for (std::size_t j : out)
      if (cat.monomial(j).induced == cat.monomial(i).induced) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(i);
  }
  return out;
}

InductionCertificate certificate_solve(const MonomialCatalog& cat, const ClassFunction& target, SubgroupFilter family,
                                       const std::vector<Subgroup>& normals) {
  const auto& t = cat.table();
  if (target.group != cat.group()) throw InputError("target lives on a different group");
  auto in_r = r_membership(t, normals);
  for (auto& [i, m] : decompose(target, t))
    if (!in_r[i]) throw PreconditionError("target has a constituent whose kernel contains a constraint subgroup");

  InductionCertificate cert;
  cert.target = target;
  cert.family = family;
  cert.normals = normals;
  auto mons = cat.qualifying(family, normals);
  std::uint64_t e = cat.group()->exponent();
  auto flat_t = flatten(target, e);
  BigInt den = 1;
  for (const auto& q : flat_t) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<BigInt> b(flat_t.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    BigRational v = flat_t[i] * den;
    b[i] = v.get_num();
  }
  if (target.is_zero()) {
    cert.verified = true;
    return cert;
  }
  IntMatrix a = mons.empty() ? IntMatrix(b.size()) : transpose(flattened_rows(cat, mons, e), b.size());
  auto sol = solve_preferring(a, b, sparse_first(cat, mons));
  if (!sol) {
    std::ostringstream os;
    os << "no " << to_string(family) << " certificate for " << describe(target) << " on a group of order "
       << cat.group()->size() << " with " << normals.size() << " kernel constraints; " << mons.size()
       << " qualifying monomials";
    throw FalsificationError(os.str());
  }
  for (std::size_t j = 0; j < mons.size(); ++j)
    if (sol->x[j] != 0) cert.terms.push_back({mons[j], BigRational(sol->x[j] / den)});
  cert.verified = verify_certificate(cat, cert);
  if (!cert.verified) throw std::logic_error("certificate failed pointwise re-verification");
  return cert;
}

bool verify_certificate(const MonomialCatalog& cat, const InductionCertificate& c) {
  ClassFunction s = zero_function(cat.group());
  for (const auto& term : c.terms) {
    const auto& m = cat.monomial(term.monomial);
    // recompute the induced character rather than trusting the cache
    ClassFunction ind = induce(cat.subgroups()[m.subgroup], cat.psi_function(m));
    s = add(s, scale(ind, term.coeff));
  }
  return s == c.target;
}

SpaceReport verify_spaces(const MonomialCatalog& cat, const std::vector<Subgroup>& normals, SubgroupFilter family) {
  const auto& t = cat.table();
  const auto& g = *cat.group();
  SpaceReport rep;
  auto in_r = r_membership(t, normals);
  for (std::size_t i = 0; i < t.size(); ++i)
    if (in_r[i]) rep.r_basis.push_back(i);
  rep.generators = cat.qualifying(family, normals);
  IntMatrix mult;
  for (std::size_t m : rep.generators) {
    const auto& mc = cat.monomial(m);
    std::vector<BigInt> row(mc.mult.begin(), mc.mult.end());
    for (std::size_t i = 0; i < mc.mult.size(); ++i)
      if (mc.mult[i] && !in_r[i]) rep.contained = false;
    mult.push_back(std::move(row));
  }
  rep.i_rank = bareiss_rank(mult);
  rep.flat_rank = bareiss_rank(flattened_rows(cat, rep.generators, g.exponent()));

  const auto& cls = g.classes();
  for (const auto& n : normals) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      const auto& chi = t.irr[i];
      bool kernel_has_n = true;
      for (int x : n.members)
        if (chi[static_cast<std::size_t>(g.class_of(x))] != chi.at_identity()) {
          kernel_has_n = false;
          break;
        }
      for (std::size_t c = 0; c < cls.size(); ++c) {
        std::vector<long> count(cls.size(), 0);
        for (int x : n.members) ++count[static_cast<std::size_t>(g.class_of(g.mul(cls[c].rep, x)))];
        if (in_r[i]) {
          // sum over the coset gN vanishes
          Cyclotomic s;
          for (std::size_t d = 0; d < cls.size(); ++d)
            if (count[d]) s += chi[d] * BigRational(count[d]);
          if (!s.is_zero()) rep.pushforward_ok = false;
        } else if (kernel_has_n) {
          for (std::size_t d = 0; d < cls.size(); ++d)
            if (count[d] && chi[d] != chi[c]) rep.dual_ok = false;
        }
      }
    }
  }
  return rep;
}

std::string ZSearchResult::verdict() const {
  switch (status) {
    case Status::found: return "integral certificate found";
    case Status::no_integral_solution: return "no integral solution with nilpotent subgroups";
    case Status::height_exceeded: return "integral solutions exist but none found within the height bound";
  }
  return "?";
}

ZSearchResult z_certificate_search(const MonomialCatalog& cat, std::size_t chi, const BigInt& height_bound) {
  const auto& t = cat.table();
  auto faithful = faithful_irreducibles(t);
  if (!std::binary_search(faithful.begin(), faithful.end(), chi))
    throw PreconditionError("integral search needs a faithful irreducible character");
  ZSearchResult out;
  out.monomials = faithful_monomials(cat);
  IntMatrix a(faithful.size(), std::vector<BigInt>(out.monomials.size()));
  std::vector<BigInt> b(faithful.size(), 0);
  for (std::size_t r = 0; r < faithful.size(); ++r) {
    for (std::size_t j = 0; j < out.monomials.size(); ++j) a[r][j] = cat.monomial(out.monomials[j]).mult[faithful[r]];
    if (faithful[r] == chi) b[r] = 1;
  }
  auto sol = solve_integer(a, b);
  if (!sol) {
    out.status = ZSearchResult::Status::no_integral_solution;
    return out;
  }
  // Size reduction against the kernel lattice.
  std::vector<BigInt> x = sol->x;
  for (int pass = 0; pass < 8; ++pass) {
    bool changed = false;
    for (const auto& k : sol->kernel) {
      BigInt kk = 0, xk = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        kk += k[i] * k[i];
        xk += x[i] * k[i];
      }
      if (kk == 0) continue;
      BigRational q(xk, kk);
      q.canonicalize();
      BigInt r;
      mpz_class num = 2 * q.get_num() + q.get_den(), den2 = 2 * q.get_den();
      mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den2.get_mpz_t());  // round(q)
      if (r == 0) continue;
      for (std::size_t i = 0; i < x.size(); ++i) x[i] -= r * k[i];
      changed = true;
    }
    if (!changed) break;
  }
  out.coeffs = x;
  for (const auto& v : x) {
    BigInt av = abs(v);
    if (av > out.height) out.height = av;
  }
  ClassFunction s = zero_function(cat.group());
  for (std::size_t j = 0; j < x.size(); ++j)
    if (x[j] != 0) s = add(s, scale(cat.monomial(out.monomials[j]).induced, BigRational(x[j])));
  if (s != t.irr[chi]) throw std::logic_error("integral certificate failed re-verification");
  out.status = out.height <= height_bound ? ZSearchResult::Status::found : ZSearchResult::Status::height_exceeded;
  return out;
}

Lemma61Report lemma61_certificate(const MonomialCatalog& cat) {
  const auto& t = cat.table();
  const auto& g = *cat.group();
  if (g.size() == 1) throw PreconditionError("the certificate bound needs a nontrivial group");
  Lemma61Report rep;
  rep.d = g.size();
  rep.faithful = faithful_irreducibles(t);
  std::size_t m = rep.faithful.size();
  auto fm = faithful_monomials(cat);
  IntMatrix cols(m, std::vector<BigInt>(fm.size()));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j < fm.size(); ++j) cols[r][j] = cat.monomial(fm[j]).mult[rep.faithful[r]];
  auto pick = m ? independent_columns(cols, sparse_first(cat, fm)) : std::vector<std::size_t>{};
  if (pick.size() != m)
    throw FalsificationError("faithful monomials span rank " + std::to_string(pick.size()) + " < " + std::to_string(m) +
                             " faithful irreducibles");
  std::sort(pick.begin(), pick.end());
  for (std::size_t p : pick) rep.selected.push_back(fm[p]);
  rep.a.assign(m, std::vector<BigInt>(m));
  RatMatrix aq(m, std::vector<BigRational>(m));
  rep.entries_ok = true;
  rep.degrees_ok = true;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& phi = cat.monomial(rep.selected[i]);
    for (std::size_t j = 0; j < m; ++j) {
      rep.a[i][j] = phi.mult[rep.faithful[j]];
      aq[i][j] = rep.a[i][j];
      if (rep.a[i][j] * rep.a[i][j] > BigInt(static_cast<unsigned long>(rep.d))) rep.entries_ok = false;
    }
    std::size_t index = g.size() / cat.subgroups()[phi.subgroup].order();
    if (2 * index > rep.d) rep.degrees_ok = false;
  }
  rep.m_ok = m <= rep.d;
  auto inv = inverse(aq);
  if (!inv) throw FalsificationError("selection matrix is singular");
  rep.inverse = *inv;
  BigInt bound;  // d^{3(d-1)} bounds coeff^2
  mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(rep.d), static_cast<unsigned long>(3 * (rep.d - 1)));
  rep.coeffs_ok = true;
  for (std::size_t j = 0; j < m; ++j) {
    InductionCertificate c;
    c.target = t.irr[rep.faithful[j]];
    c.family = SubgroupFilter::nilpotent;
    c.normals = cat.minimal_normal_subgroups();
    for (std::size_t i = 0; i < m; ++i) {
      const BigRational& q = rep.inverse[j][i];
      if (q == 0) continue;
      if (q * q > BigRational(bound)) rep.coeffs_ok = false;
      c.terms.push_back({rep.selected[i], q});
    }
    c.verified = verify_certificate(cat, c);
    if (!c.verified) throw std::logic_error("inverse-matrix certificate failed re-verification");
    rep.certificates.push_back(std::move(c));
  }
  return rep;
}

MackeyResult mackey_decompose(const MonomialCatalog& cat, std::size_t i1, std::size_t i2) {
  const auto& gp = cat.group();
  const auto& g = *gp;
  const auto& m1 = cat.monomial(i1);
  const auto& m2 = cat.monomial(i2);
  const auto& h1 = cat.subgroups()[m1.subgroup];
  const auto& h2 = cat.subgroups()[m2.subgroup];
  std::uint64_t e = g.exponent();
  MackeyResult out;
  std::vector<char> seen(g.size(), 0);
  std::map<std::pair<std::vector<int>, std::vector<std::uint32_t>>, std::size_t> where;
  std::size_t degree_sum = 0;
  for (std::size_t tau = 0; tau < g.size(); ++tau) {
    if (seen[tau]) continue;
    int t = static_cast<int>(tau);
    for (int a : h2.members)
      for (int b : h1.members) seen[static_cast<std::size_t>(g.mul(g.mul(a, t), b))] = 1;
    int tinv = g.inv(t);
    std::vector<int> mem;
    for (int x : h1.members)
      if (h2.contains(g.conj(x, tinv))) mem.push_back(x);
    Subgroup ht = subgroup_from_members(gp, mem);
    std::uint64_t eh = ht.group->exponent();
    std::vector<std::uint32_t> exps;
    for (const auto& k : ht.group->classes()) {
      int x = ht.members[static_cast<std::size_t>(k.rep)];
      std::uint64_t v = (cat.psi_exponent(m1, x) * (e / m1.e) + cat.psi_exponent(m2, g.conj(x, tinv)) * (e / m2.e)) % e;
      if (v % (e / eh)) throw std::logic_error("linear character value outside the subgroup exponent");
      exps.push_back(static_cast<std::uint32_t>(v / (e / eh)));
    }
    degree_sum += g.size() / ht.order();
    auto key = std::make_pair(ht.members, exps);
    auto it = where.find(key);
    if (it != where.end()) {
      ++out.terms[it->second].multiplicity;
      continue;
    }
    where.emplace(key, out.terms.size());
    ClassFunction psi = linear_from_exponents(ht.group, eh, exps);
    out.terms.push_back({std::move(ht), std::move(psi), 1});
  }
  out.sum = zero_function(gp);
  for (const auto& term : out.terms)
    out.sum = add(out.sum, scale(induce(term.h, term.psi), BigRational(static_cast<unsigned long>(term.multiplicity))));
  out.product = product(m1.induced, m2.induced);
  out.pointwise_ok = out.sum == out.product;
  out.degree_ok = degree_sum == (g.size() / h1.order()) * (g.size() / h2.order());
  return out;
}

IndicatorDecomposition class_indicator_decomposition(const CharacterTable& t, std::size_t c) {
  const auto& g = *t.group;
  if (c >= g.num_classes()) throw InputError("class index out of range");
  IndicatorDecomposition out;
  BigRational w(static_cast<unsigned long>(g.classes()[c].size), static_cast<unsigned long>(g.size()));
  w.canonicalize();
  ClassFunction s = zero_function(t.group);
  for (const auto& chi : t.irr) {
    Cyclotomic a = chi[c].conjugate() * w;
    std::vector<Cyclotomic> v(chi.size());
    for (std::size_t d = 0; d < chi.size(); ++d) v[d] = chi[d] * a;
    s = add(s, ClassFunction(t.group, std::move(v)));
    out.coeffs.push_back(std::move(a));
  }
  out.exact_ok = true;
  for (std::size_t d = 0; d < s.size(); ++d)
    if (s[d] != Cyclotomic(d == c ? 1L : 0L)) out.exact_ok = false;
  mpfr_t acc, term;
  mpfr_init2(acc, 64);
  mpfr_init2(term, 64);
  mpfr_set_ui(acc, 0, MPFR_RNDU);
  for (const auto& a : out.coeffs) {
    mpfr_set_d(term, a.to_complex(30).abs_upper(), MPFR_RNDU);
    mpfr_add(acc, acc, term, MPFR_RNDU);
  }
  out.l1_upper = mpfr_get_d(acc, MPFR_RNDU);
  BigRational limit = BigRational(1) + BigRational(1, 1000000000000UL);
  mpq_t lim;
  mpq_init(lim);
  mpq_set(lim, limit.get_mpq_t());
  out.certified = mpfr_cmp_q(acc, lim) <= 0;
  mpq_clear(lim);
  mpfr_clear(acc);
  mpfr_clear(term);
  return out;
}

}  // namespace artin
