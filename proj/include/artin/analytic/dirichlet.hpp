#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "artin/cyclotomic.hpp"
#include "artin/interval.hpp"

namespace artin {

// Kronecker symbol (a/n) for n >= 1.
int kronecker_symbol(std::int64_t a, std::int64_t n);

class DirichletCharacter {
 public:
  static DirichletCharacter trivial(std::uint64_t q = 1);
  // (D/.) as a character mod |D|; D must be 0 or 1 mod 4.
  static DirichletCharacter kronecker(std::int64_t D);
  // All phi(q) characters mod q, principal first, deterministic order.
  static std::vector<DirichletCharacter> all(std::uint64_t q);
  static std::vector<DirichletCharacter> primitive(std::uint64_t q);

  std::uint64_t modulus() const { return q_; }
  std::uint64_t order() const { return order_; }
  std::uint64_t conductor() const { return conductor_; }
  bool is_primitive() const { return conductor_ == q_; }
  bool is_principal() const { return order_ == 1; }
  // -1 when gcd(a, q) > 1, else k with chi(a) = zeta_order^k.
  int exponent(std::uint64_t a) const { return table_[a % q_]; }
  Cyclotomic value(std::uint64_t a) const;
  // exponent values for residues 0..q-1, e.g. "4:[-1,0,-1,1]"
  std::string label() const;
  bool operator==(const DirichletCharacter& o) const { return q_ == o.q_ && order_ == o.order_ && table_ == o.table_; }

 private:
  DirichletCharacter(std::uint64_t q, std::vector<long> exps, std::uint64_t L);
  std::uint64_t q_ = 1, order_ = 1, conductor_ = 1;
  std::vector<int> table_;
};

// <chi_i, chi_j> over (Z/lcm)^x, exactly.
Cyclotomic dirichlet_inner_product(const DirichletCharacter& a, const DirichletCharacter& b);

struct CharSum {
  Cyclotomic exact;
  ComplexBall enclosure;
};
// sum over primes p <= H of chi(p)
CharSum char_sum(const DirichletCharacter& chi, std::uint64_t H);
// |z| enclosure from a complex ball
Interval abs_enclosure(const ComplexBall& z);

struct FrobeniusKind {
  enum Type { cyclotomic, kronecker } type = cyclotomic;
  std::int64_t param = 1;  // m for Q(zeta_m), D for Q(sqrt D)
  std::uint64_t group_order() const;
  std::string str() const;
};

struct FrobeniusClass {
  bool ramified = false;
  std::int64_t label = 0;  // residue mod m, or the symbol +-1
};
FrobeniusClass frobenius_oracle(const FrobeniusKind& kind, std::uint64_t p);

struct PiCParams {
  double eps = 0.5;
  double Delta_K = 4;
  double deg_KF = 2;
  double deg_KQ = 2;
};

struct PiCReport {
  std::uint64_t count = 0;
  std::uint64_t pi = 0;
  BigRational expected;   // |C|/|G| * pi(H)
  BigRational deviation;  // count - expected
  Interval bound;         // (H/log H) exp(-c(eps) sqrt(log H))
  double gate = 0;        // (log Delta_K)^(2 + [K:F]/(2 eps))
  bool applicable = false;  // H >= 100 and H >= gate
  bool pass = false;        // applicable and |deviation| <= bound, certified
};
PiCReport pi_C(const FrobeniusKind& kind, std::int64_t cls, std::uint64_t H, const PiCParams& params = {});

}  // namespace artin
