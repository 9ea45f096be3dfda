#include "artin/class_function.hpp"

#include <numeric>

#include "artin/errors.hpp"
#include "artin/group_ops.hpp"

namespace artin {

namespace {

void same_group(const ClassFunction& a, const ClassFunction& b) {
  if (a.group != b.group) throw InputError("class functions live on different groups");
}

// Values are kept at the group exponent so equal functions compare by coefficients.
Cyclotomic normalize(const Cyclotomic& v, std::uint64_t e) {
  if (e % v.conductor() == 0) return v.promote(e);
  return v;
}

}  // namespace

ClassFunction::ClassFunction(GroupPtr g, std::vector<Cyclotomic> v) : group(std::move(g)), values(std::move(v)) {
  if (!group) throw InputError("class function without a group");
  if (values.size() != group->num_classes()) throw InputError("class function has the wrong length");
  std::uint64_t e = group->exponent();
  for (auto& x : values) x = normalize(x, e);
}

bool ClassFunction::is_zero() const {
  for (const auto& v : values)
    if (!v.is_zero()) return false;
  return true;
}

bool ClassFunction::operator==(const ClassFunction& o) const { return group == o.group && values == o.values; }

ClassFunction zero_function(const GroupPtr& g) {
  return ClassFunction(g, std::vector<Cyclotomic>(g->num_classes(), Cyclotomic(0L)));
}

ClassFunction trivial_character(const GroupPtr& g) {
  return ClassFunction(g, std::vector<Cyclotomic>(g->num_classes(), Cyclotomic(1L)));
}

ClassFunction regular_character(const GroupPtr& g) {
  std::vector<Cyclotomic> v(g->num_classes(), Cyclotomic(0L));
  v[0] = Cyclotomic(static_cast<long>(g->size()));
  return ClassFunction(g, std::move(v));
}

Cyclotomic inner_product(const ClassFunction& f1, const ClassFunction& f2) {
  same_group(f1, f2);
  const auto& cls = f1.group->classes();
  Cyclotomic s;
  for (std::size_t c = 0; c < cls.size(); ++c) {
    if (f1[c].is_zero() || f2[c].is_zero()) continue;
    Cyclotomic t = f1[c] * f2[c].conjugate();
    t *= BigRational(static_cast<long>(cls[c].size));
    s += t;
  }
  s *= BigRational(1, static_cast<unsigned long>(f1.group->size()));
  return s;
}

ClassFunction induce(const Subgroup& h, const ClassFunction& psi) {
  if (psi.group != h.group) throw InputError("character is not defined on the subgroup");
  const auto& g = h.parent;
  const auto& hcls = h.group->classes();
  const auto& gcls = g->classes();
  // count[k][c] = |class k of H inside class c of G|
  std::vector<Cyclotomic> sums(gcls.size(), Cyclotomic(0L));
  for (std::size_t k = 0; k < hcls.size(); ++k) {
    if (psi[k].is_zero()) continue;
    std::vector<long> count(gcls.size(), 0);
    for (int m : hcls[k].members) ++count[static_cast<std::size_t>(g->class_of(h.members[static_cast<std::size_t>(m)]))];
    for (std::size_t c = 0; c < gcls.size(); ++c)
      if (count[c]) sums[c] += psi[k] * BigRational(count[c]);
  }
  for (std::size_t c = 0; c < gcls.size(); ++c) {
    if (sums[c].is_zero()) continue;
    BigRational w(static_cast<unsigned long>(g->size()), static_cast<unsigned long>(gcls[c].size * h.order()));
    w.canonicalize();
    sums[c] *= w;
  }
  return ClassFunction(g, std::move(sums));
}

ClassFunction restrict_to(const ClassFunction& f, const Subgroup& h) {
  if (f.group != h.parent) throw InputError("subgroup of a different group");
  const auto& hcls = h.group->classes();
  std::vector<Cyclotomic> v;
  v.reserve(hcls.size());
  for (const auto& k : hcls)
    v.push_back(f[static_cast<std::size_t>(f.group->class_of(h.members[static_cast<std::size_t>(k.rep)]))]);
  return ClassFunction(h.group, std::move(v));
}

ClassFunction product(const ClassFunction& a, const ClassFunction& b) {
  same_group(a, b);
  std::vector<Cyclotomic> v(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) v[c] = a[c] * b[c];
  return ClassFunction(a.group, std::move(v));
}

ClassFunction add(const ClassFunction& a, const ClassFunction& b) {
  same_group(a, b);
  std::vector<Cyclotomic> v(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) v[c] = a[c] + b[c];
  return ClassFunction(a.group, std::move(v));
}

ClassFunction scale(const ClassFunction& a, const BigRational& q) {
  std::vector<Cyclotomic> v(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) v[c] = a[c] * q;
  return ClassFunction(a.group, std::move(v));
}

ClassFunction conjugate(const ClassFunction& a) {
  std::vector<Cyclotomic> v(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) v[c] = a[c].conjugate();
  return ClassFunction(a.group, std::move(v));
}

LinearCharacters linear_character_exponents(const GroupPtr& h) {
  LinearCharacters out;
  out.e = h->exponent();
  AbelianInvariants ab = abelianization(h);
  const auto& cls = h->classes();
  std::size_t r = ab.factors.size();
  std::vector<unsigned long> k(r, 0);
  for (;;) {
    std::vector<std::uint32_t> row(cls.size());
    for (std::size_t c = 0; c < cls.size(); ++c) {
      const auto& x = ab.coords[static_cast<std::size_t>(cls[c].rep)];
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < r; ++i) s += k[i] * x[i] * (out.e / ab.factors[i]);
      row[c] = static_cast<std::uint32_t>(s % out.e);
    }
    out.exps.push_back(std::move(row));
    // odometer, last coordinate fastest
    std::size_t i = r;
    while (i > 0) {
      --i;
      if (++k[i] < ab.factors[i]) break;
      k[i] = 0;
      if (i == 0) return out;
    }
    if (r == 0) return out;
  }
}

ClassFunction linear_from_exponents(const GroupPtr& h, std::uint64_t e, const std::vector<std::uint32_t>& exps) {
  std::vector<Cyclotomic> v;
  v.reserve(exps.size());
  for (auto x : exps) v.push_back(Cyclotomic::zeta(e, x));
  return ClassFunction(h, std::move(v));
}

std::vector<ClassFunction> linear_characters(const GroupPtr& h) {
  auto lc = linear_character_exponents(h);
  std::vector<ClassFunction> out;
  for (const auto& row : lc.exps) out.push_back(linear_from_exponents(h, lc.e, row));
  return out;
}

std::vector<BigRational> flatten(const ClassFunction& f, std::uint64_t e) {
  std::size_t phi = euler_phi(e);
  std::vector<BigRational> out;
  out.reserve(f.size() * phi);
  for (const auto& v : f.values) {
    Cyclotomic p = v.promote(e);
    out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
  }
  return out;
}

}  // namespace artin
