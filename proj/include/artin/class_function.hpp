#pragma once

#include <vector>

#include "artin/cyclotomic.hpp"
#include "artin/perm_group.hpp"

namespace artin {

// Values per conjugacy class of `group`, in the group's class order.
// Class 0 is always the identity class.
struct ClassFunction {
  GroupPtr group;
  std::vector<Cyclotomic> values;

  ClassFunction() = default;
  ClassFunction(GroupPtr g, std::vector<Cyclotomic> v);

  std::size_t size() const { return values.size(); }
  const Cyclotomic& operator[](std::size_t c) const { return values[c]; }
  const Cyclotomic& at_identity() const { return values[0]; }
  bool is_zero() const;
  bool operator==(const ClassFunction& o) const;
  bool operator!=(const ClassFunction& o) const { return !(*this == o); }
};

ClassFunction zero_function(const GroupPtr& g);
ClassFunction trivial_character(const GroupPtr& g);
ClassFunction regular_character(const GroupPtr& g);

// <f1, f2> = 1/|G| sum_g f1(g) conj(f2(g)).
Cyclotomic inner_product(const ClassFunction& f1, const ClassFunction& f2);

// psi is a class function on h.group; result lives on h.parent.
ClassFunction induce(const Subgroup& h, const ClassFunction& psi);
ClassFunction restrict_to(const ClassFunction& f, const Subgroup& h);

ClassFunction product(const ClassFunction& a, const ClassFunction& b);
ClassFunction add(const ClassFunction& a, const ClassFunction& b);
ClassFunction scale(const ClassFunction& a, const BigRational& q);
ClassFunction conjugate(const ClassFunction& a);

// Linear characters of h as exponents of zeta_E, E = exponent of h:
// result[j][c] = k means psi_j(class c) = zeta_E^k. Ordered by the dual
// coordinates of the abelianization, trivial character first.
struct LinearCharacters {
  std::uint64_t e = 1;
  std::vector<std::vector<std::uint32_t>> exps;
};
LinearCharacters linear_character_exponents(const GroupPtr& h);
std::vector<ClassFunction> linear_characters(const GroupPtr& h);
ClassFunction linear_from_exponents(const GroupPtr& h, std::uint64_t e, const std::vector<std::uint32_t>& exps);

// Flattened rational coordinates over the power basis of Q(zeta_e), e a
// multiple of every value's conductor. Length = classes * phi(e).
std::vector<BigRational> flatten(const ClassFunction& f, std::uint64_t e);

}  // namespace artin
