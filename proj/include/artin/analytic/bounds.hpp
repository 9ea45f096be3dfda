#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artin/interval.hpp"

namespace artin {

enum class BoundKind {
  convexity_42,
  lfs_44,
  line_45,
  circle_45,
  smoothed_47,
  bilinear_52,
  trivial_53,
  holder_54,
  thm62_c,
  thm62_cH,
  sparse_16,
};

const char* bound_name(BoundKind k);
BoundKind parse_bound_kind(const std::string& s);  // InputError on unknown names
std::vector<BoundKind> all_bound_kinds();

// Symbols shared by the bound formulas. Each formula reads only what it needs.
struct BoundParams {
  double n = 1;        // [F:Q]
  double d = 1;        // character degree
  double Q = 100;      // conductor bound Q (Q_chi where a single character is meant)
  double eps = 0.5;
  double H = 100;
  std::optional<double> log_H;  // overrides H when H itself overflows
  double M = 100;
  long t = 1;          // Hoelder exponent
  long r = 0;          // pole order / max pairing
  long S = 0;          // #S
  double Delta = 3;    // discriminant for sparse_16
  double Delta_F = 1;
  double F_degree = 1;  // [F:Q] in C(F,d)
  double delta = 0.25;
  double sigma = 1;
  double sigma0 = 0.75;
  double t_imag = 0;    // Im s
  double sum_abs = 1;   // sum |a_i|
  double sum_E = 1;     // sum over E of |a_i a_j|
  double num_E = 1;     // #E
  double a0t = -1;      // A_0t; negative means use the prime-support bound
};

// Positive value carried as log, since several bounds overflow a double.
struct BoundValue {
  BoundKind which{};
  Interval log_value;
  double value() const;     // exp(midpoint), may be +inf
  Interval enclosure() const;  // exp(log_value), may be [x, inf]
  std::string str() const;  // decimal "m +/- r" or "exp(...)"
};

double c_epsilon(double eps, double deg_KQ);
Interval c_epsilon_interval(double eps, double deg_KQ);

BoundValue rhs_bound(BoundKind which, const BoundParams& p);

struct HolderParams {
  long t = 0;
  Interval log_M0;
  Interval a0t;  // value used in the bound
  BoundValue bound;
};
// t and log M0 of the Hoelder bound; available even when M0 <= 1.
long holder_t(const BoundParams& p);
Interval holder_log_M0(const BoundParams& p);
HolderParams holder_params(const BoundParams& p);  // RangeError "M0>1" otherwise

}  // namespace artin
