#pragma once

#include <complex>

#include "artin/interval.hpp"

namespace artin {

// H >= e throughout.
// eta_H(x) = int_{-log H}^{log H} e^{1-(x-t)^2} dt, by adaptive quadrature.
double eta(double H, double x);
// Same value through erfc; rigorous enclosure.
Interval eta_enclosure(double H, double x);
Interval eta_enclosure(double H, const Interval& x);
// Fourier transform int eta_H(x) e^{-isx} dx in closed form.
std::complex<double> eta_hat(double H, std::complex<double> s);
// Direct quadrature of the Fourier integral for real s; cross-check only.
double eta_hat_quadrature(double H, double s);

}  // namespace artin
