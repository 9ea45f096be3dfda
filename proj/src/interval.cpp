#include "artin/interval.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace artin {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double x) { return std::isfinite(x) ? std::nextafter(x, -kInf) : x; }
double up(double x) { return std::isfinite(x) ? std::nextafter(x, kInf) : x; }
// A floating-point sum that comes out as exactly zero is exact.
double down_sum(double x) { return x == 0 ? 0.0 : down(x); }
double up_sum(double x) { return x == 0 ? 0.0 : up(x); }

using MpfrUnary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

// f(x) rounded in the given direction, x exact.
double directed(MpfrUnary f, double x, mpfr_rnd_t rnd) {
  mpfr_t a;
  mpfr_init2(a, 53);
  mpfr_set_d(a, x, MPFR_RNDN);
  f(a, a, rnd);
  double r = mpfr_get_d(a, rnd);
  mpfr_clear(a);
  return r;
}

Interval increasing(MpfrUnary f, const Interval& x) {
  return {directed(f, x.lo, MPFR_RNDD), directed(f, x.hi, MPFR_RNDU)};
}

Interval decreasing(MpfrUnary f, const Interval& x) {
  return {directed(f, x.hi, MPFR_RNDD), directed(f, x.lo, MPFR_RNDU)};
}

double q_to_d(const BigRational& q, mpfr_rnd_t rnd) {
  mpfr_t a;
  mpfr_init2(a, 53);
  mpfr_set_q(a, q.get_mpq_t(), rnd);
  double r = mpfr_get_d(a, rnd);
  mpfr_clear(a);
  return r;
}

}  // namespace

Interval::Interval(double l, double h) : lo(l), hi(h) {
  if (std::isnan(l) || std::isnan(h) || l > h) throw std::invalid_argument("malformed interval");
}

Interval Interval::from_rational(const BigRational& q) { return {q_to_d(q, MPFR_RNDD), q_to_d(q, MPFR_RNDU)}; }

Interval Interval::hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

double Interval::radius() const {
  double m = mid();
  return up(std::max(m - lo, hi - m));
}

std::string Interval::str(int digits) const {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.*g +/- %.2g", digits, mid(), radius());
  return buf;
}

Interval& Interval::operator+=(const Interval& o) {
  *this = {down_sum(lo + o.lo), up_sum(hi + o.hi)};
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  *this = {down_sum(lo - o.hi), up_sum(hi - o.lo)};
  return *this;
}

Interval& Interval::operator*=(const Interval& o) {
  double a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
  // 0 * inf only arises for unbounded operands; treat it as 0.
  auto fix = [](double v) { return std::isnan(v) ? 0.0 : v; };
  a = fix(a), b = fix(b), c = fix(c), d = fix(d);
  *this = {down(std::min(std::min(a, b), std::min(c, d))), up(std::max(std::max(a, b), std::max(c, d)))};
  return *this;
}

Interval& Interval::operator/=(const Interval& o) {
  if (o.lo <= 0 && o.hi >= 0) throw std::domain_error("interval division by an interval containing zero");
  double a = lo / o.lo, b = lo / o.hi, c = hi / o.lo, d = hi / o.hi;
  *this = {down(std::min(std::min(a, b), std::min(c, d))), up(std::max(std::max(a, b), std::max(c, d)))};
  return *this;
}

Interval sqrt(const Interval& x) {
  if (x.lo < 0) throw std::domain_error("sqrt of a negative interval");
  return increasing(mpfr_sqrt, x);
}

Interval exp(const Interval& x) { return increasing(mpfr_exp, x); }

Interval log(const Interval& x) {
  if (x.lo <= 0) throw std::domain_error("log of a nonpositive interval");
  return increasing(mpfr_log, x);
}

Interval log1p(const Interval& x) {
  if (x.lo <= -1) throw std::domain_error("log1p below -1");
  return increasing(mpfr_log1p, x);
}

Interval erf(const Interval& x) { return increasing(mpfr_erf, x); }
Interval erfc(const Interval& x) { return decreasing(mpfr_erfc, x); }

Interval sqr(const Interval& x) {
  Interval a = abs(x);
  Interval r = a * a;
  r.lo = std::max(r.lo, 0.0);
  return r;
}

Interval abs(const Interval& x) {
  if (x.lo >= 0) return x;
  if (x.hi <= 0) return -x;
  return {0, std::max(-x.lo, x.hi)};
}

Interval max(const Interval& a, const Interval& b) { return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)}; }
Interval min(const Interval& a, const Interval& b) { return {std::min(a.lo, b.lo), std::min(a.hi, b.hi)}; }

Interval pow(const Interval& x, const Interval& y) { return exp(y * log(x)); }

Interval pi_interval() {
  mpfr_t a;
  mpfr_init2(a, 53);
  mpfr_const_pi(a, MPFR_RNDD);
  double lo = mpfr_get_d(a, MPFR_RNDD);
  mpfr_const_pi(a, MPFR_RNDU);
  double hi = mpfr_get_d(a, MPFR_RNDU);
  mpfr_clear(a);
  return {lo, hi};
}

Interval e_interval() { return exp(Interval(1.0)); }

Interval log_add(const Interval& a, const Interval& b) {
  Interval m = max(a, b);
  Interval lo = min(a, b);
  Interval diff = lo - m;
  if (diff.hi > 0) diff.hi = 0;
  if (diff.lo > diff.hi) diff.lo = diff.hi;
  return m + log1p(exp(diff));
}

Interval interval_from_ball(const BigRational& mid, const BigRational& radius) {
  return {q_to_d(mid - radius, MPFR_RNDD), q_to_d(mid + radius, MPFR_RNDU)};
}

}  // namespace artin
