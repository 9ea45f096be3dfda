#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "artin/bigint.hpp"

namespace artin {

// Enclosure of a complex number: exact rational midpoint, radius bound on
// the distance in each coordinate.
struct ComplexBall {
  BigRational re, im, radius;
  bool contains(double x, double y) const;
  // Rigorous upper bound on |z|.
  double abs_upper() const;
};

// Element of Q(zeta_e) in the power basis modulo the e-th cyclotomic polynomial.
class Cyclotomic {
 public:
  Cyclotomic();  // zero in Q
  Cyclotomic(long v);
  Cyclotomic(const BigRational& v);
  static Cyclotomic zeta(std::uint64_t e, std::int64_t k = 1);  // zeta_e^k
  // sum_k counts[k] zeta_e^k
  static Cyclotomic from_exponent_counts(std::uint64_t e, const std::vector<long>& counts);
  static Cyclotomic from_coeffs(std::uint64_t e, std::vector<BigRational> coeffs);
  // Parses "cyclo(e; c0, c1, ...)".
  static Cyclotomic parse(const std::string& text);

  std::uint64_t conductor() const { return e_; }
  const std::vector<BigRational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  BigRational rational_value() const;  // requires is_rational()
  bool has_integer_coeffs() const;

  Cyclotomic promote(std::uint64_t e) const;  // e must be a multiple of conductor()
  Cyclotomic reduced() const;                 // smallest conductor holding the value
  Cyclotomic galois(std::int64_t k) const;    // zeta -> zeta^k, gcd(k, e) = 1
  Cyclotomic conjugate() const { return galois(-1); }

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const BigRational& q);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const BigRational& q) { return a *= q; }
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Enclosure of the embedding zeta_e -> exp(2 pi i / e), width <= 10^-digits.
  ComplexBall to_complex(unsigned digits = 30) const;
  std::string to_string() const;  // "cyclo(e; c0, c1, ...)" at minimal conductor
  std::string pretty() const;     // human readable, e.g. "-1 - 2*z3"

 private:
  std::uint64_t e_;
  std::vector<BigRational> c_;
};

std::uint64_t euler_phi(std::uint64_t n);
// Coefficients of the e-th cyclotomic polynomial, low degree first.
std::vector<long long> cyclotomic_polynomial(std::uint64_t e);

}  // namespace artin
