#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artin/analytic/bounds.hpp"
#include "artin/analytic/dirichlet.hpp"

namespace artin {

constexpr std::uint64_t kDefaultBudget = 10'000'000;

// Squarefree-supported multiplicative f with f(p) = chi(p) off S and the
// given override values on S.
struct AcceptableMultFn {
  DirichletCharacter chi = DirichletCharacter::trivial(1);
  std::map<std::uint64_t, Cyclotomic> overrides;
  double d = 1;

  void validate() const;  // InputError unless S holds primes with |f(p)| <= d
  Cyclotomic at(std::uint64_t a) const;  // exact, slow; for tests and small a
};

struct SmoothedParams {
  double Q = 0;  // 0 means take the smallest admissible Q
  double n = 1;
  std::uint64_t budget = kDefaultBudget;
};

struct SmoothedReport {
  double H = 0, Q = 0;
  long r = 0;
  std::uint64_t cutoff = 0;  // summed over squarefree a <= cutoff
  Interval re, im;           // includes interpolation error and tail
  Interval tail;             // bound on the discarded a > cutoff, already added
  Interval lhs_abs;
  BoundValue rhs;
  bool pass = false;
};

// Smallest Q with Q >= max(2^n, exp(4 d^(1/2)), exp(d^(1/2)|S|/2)) for this f.
double smoothed_min_Q(const AcceptableMultFn& f, double n = 1);
// Smallest H with 16nd^2 <= log(Q^(-1/2) H).
double smoothed_min_H(double Q, double d, double n = 1);
// sup over u >= X of the tail sum_{a > X} max|f| eta_H(log a), via a Gaussian tail integral.
Interval smoothed_tail_bound(double H, double X, double max_abs_f);
SmoothedReport smoothed_sum_check(const AcceptableMultFn& f, double H, const SmoothedParams& params = {});

struct BilinearReport {
  std::uint64_t H = 0;
  Interval lhs;
  std::vector<std::pair<std::size_t, std::size_t>> E;
  long r = 0;
  double sum_abs = 0, sum_E = 0;
  BoundValue trivial;
  bool trivial_pass = false;
  std::optional<BoundValue> thm52;
  std::string thm52_gate;  // failing gate when thm52 is absent
  bool thm52_pass = false;
};
BilinearReport bilinear_check(const std::vector<DirichletCharacter>& family, const std::vector<double>& a,
                              std::uint64_t H, std::uint64_t budget = kDefaultBudget);

struct SquarefullReport {
  std::uint64_t H = 0;
  std::vector<std::uint64_t> list;  // sorted, 1 included
  Interval sum_inv_sqrt, sum_inv;
  bool log_bound_ok = true;   // partial sums <= 81 log H' for every H' in [100, H]
  bool zeta_bound_ok = true;  // sum r^-1 <= 2
  double worst_ratio = 0;     // max partial / (81 log H')
};
SquarefullReport squarefull_sums(std::uint64_t H);

struct A0tData {
  std::map<std::uint64_t, double> b;  // squarefree a <= H
  std::uint64_t H = 0;
  long t = 1;
  double d = 1;
  double n = 1;
};
enum class A0tMode { exact_bruteforce, prime_support_bound };
Interval a0t_eval(const A0tData& data, A0tMode mode, std::uint64_t budget = kDefaultBudget);

// |sum_{p <= H} chi(p)| enclosure
using CharSumOracle = std::function<Interval(std::uint64_t)>;
CharSumOracle character_sum_oracle(const DirichletCharacter& chi, std::uint64_t H_max);
CharSumOracle prime_count_oracle(std::uint64_t H_max);

struct EpsBadRow {
  std::uint64_t H = 0;
  Interval lhs, rhs;
  double ratio = 0;
  std::string verdict;  // "clear", "flagged", "undecided"
};
struct EpsBadReport {
  double gate = 0;
  std::vector<EpsBadRow> rows;
  double max_ratio = 0;
  bool flagged = false;
  std::uint64_t first_flagged = 0;
};
EpsBadReport eps_bad_scan(const CharSumOracle& oracle, double Delta_K, double deg_KF, double deg_KQ, double eps,
                          const std::vector<std::uint64_t>& grid);
// smallest admissible H for the scan
double eps_bad_gate(double Delta_K, double deg_KF, double eps);

}  // namespace artin
