#pragma once

#include <string>

#include "artin/bigint.hpp"

namespace artin {

// Closed real interval with double endpoints. Basic operations widen the
// rounded result by one ulp outward; transcendental functions are evaluated
// with MPFR using directed rounding at each endpoint.
struct Interval {
  double lo = 0, hi = 0;

  Interval() = default;
  Interval(double x) : lo(x), hi(x) {}  // NOLINT: implicit on purpose
  Interval(double l, double h);
  static Interval from_rational(const BigRational& q);
  static Interval hull(const Interval& a, const Interval& b);

  double mid() const { return lo + (hi - lo) / 2; }
  double radius() const;
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool certainly_le(const Interval& o) const { return hi <= o.lo; }
  bool certainly_lt(const Interval& o) const { return hi < o.lo; }
  bool certainly_positive() const { return lo > 0; }
  std::string str(int digits = 10) const;  // "mid +/- radius"

  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  Interval& operator/=(const Interval& o);
  Interval operator-() const { return {-hi, -lo}; }
  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }
};

Interval sqrt(const Interval& x);
Interval exp(const Interval& x);
Interval log(const Interval& x);
Interval log1p(const Interval& x);
Interval erf(const Interval& x);
Interval erfc(const Interval& x);
Interval sqr(const Interval& x);
Interval abs(const Interval& x);
Interval max(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);
Interval pow(const Interval& x, const Interval& y);  // x > 0
Interval pi_interval();
Interval e_interval();
// log(e^a + e^b)
Interval log_add(const Interval& a, const Interval& b);

// Rational midpoint and radius from an exact ball.
Interval interval_from_ball(const BigRational& mid, const BigRational& radius);

}  // namespace artin
