#include "artin/analytic/smoothing.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <algorithm>
#include <cmath>

#include "artin/errors.hpp"

namespace artin {

namespace {

void check_H(double H) {
  if (!(H >= std::exp(1.0))) throw RangeError("H>=e", "smoothing kernel needs log H >= 1");
}

using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

}  // namespace

double eta(double H, double x) {
  check_H(H);
  double L = std::log(H);
  auto f = [x](double t) { return std::exp(1 - (x - t) * (x - t)); };
  // The integrand is a unit-width bump; split at its peak so the rule sees it.
  double c = std::clamp(x, -L, L);
  double a = GK::integrate(f, -L, c, 12, 1e-13);
  double b = GK::integrate(f, c, L, 12, 1e-13);
  return a + b;
}

Interval eta_enclosure(double H, double x) { return eta_enclosure(H, Interval(x)); }

Interval eta_enclosure(double H, const Interval& x) {
  check_H(H);
  Interval L = log(Interval(H));
  Interval ax = abs(x);
  // e * sqrt(pi)/2 * (erfc(|x| - L) - erfc(|x| + L))
  Interval diff = erfc(ax - L) - erfc(ax + L);
  return e_interval() * sqrt(pi_interval()) / Interval(2.0) * diff;
}

std::complex<double> eta_hat(double H, std::complex<double> s) {
  check_H(H);
  double L = std::log(H);
  const double k = 2 * std::exp(1.0) * std::sqrt(M_PI);
  if (std::abs(s) < 1e-8) {
    // sin(sL)/s = L - s^2 L^3/6 + ...
    return k * (L - s * s * L * L * L / 6.0) * std::exp(-s * s / 4.0);
  }
  return k * std::sin(s * L) / s * std::exp(-s * s / 4.0);
}

double eta_hat_quadrature(double H, double s) {
  check_H(H);
  double L = std::log(H);
  // eta_H is even and below e^{-60} beyond L + 8.
  double R = L + 8;
  auto f = [H, s](double x) { return eta(H, x) * std::cos(s * x); };
  double total = 0;
  int pieces = static_cast<int>(std::ceil(R));
  for (int i = 0; i < pieces; ++i) {
    double a = R * i / pieces, b = R * (i + 1) / pieces;
    total += GK::integrate(f, a, b, 10, 1e-12);
  }
  return 2 * total;
}

}  // namespace artin
