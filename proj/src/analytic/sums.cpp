#include "artin/analytic/sums.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>
#include <unordered_map>

#include "artin/analytic/primes.hpp"
#include "artin/analytic/smoothing.hpp"
#include "artin/errors.hpp"

namespace artin {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_prime_small(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

bool is_squarefree_small(std::uint64_t a) {
  for (auto [p, k] : factor_small(a))
    if (k > 1) return false;
  return a > 0;
}

struct ComplexInterval {
  Interval re, im;
};

ComplexInterval embed(const Cyclotomic& z) {
  ComplexBall b = z.to_complex(20);
  return {interval_from_ball(b.re, b.radius), interval_from_ball(b.im, b.radius)};
}

// lhs <= exp(log_value), certified
bool certified_le(const Interval& lhs, const BoundValue& rhs) {
  if (lhs.hi <= 0) return true;
  if (rhs.log_value.hi == -kInf) return false;
  return log(Interval(lhs.hi)).hi <= rhs.log_value.lo;
}

}  // namespace

void AcceptableMultFn::validate() const {
  if (!(d >= 1)) throw InputError("acceptable function needs d >= 1");
  for (const auto& [p, v] : overrides) {
    if (!is_prime_small(p)) throw InputError("exception set must contain primes, got " + std::to_string(p));
    if (v.to_complex(20).abs_upper() > d) throw InputError("override at " + std::to_string(p) + " exceeds d");
  }
}

Cyclotomic AcceptableMultFn::at(std::uint64_t a) const {
  if (a == 0) throw InputError("f is defined on positive integers");
  Cyclotomic out(1);
  for (auto [p, k] : factor_small(a)) {
    if (k > 1) return Cyclotomic(0);
    auto it = overrides.find(p);
    out *= it != overrides.end() ? it->second : chi.value(p);
  }
  return out;
}

double smoothed_min_Q(const AcceptableMultFn& f, double n) {
  double S = static_cast<double>(f.overrides.size());
  double qmin = std::max({std::pow(2.0, n), std::exp(4 * std::sqrt(f.d)), std::exp(0.5 * std::sqrt(f.d) * S)});
  return std::max(qmin, static_cast<double>(f.chi.conductor()));
}

double smoothed_min_H(double Q, double d, double n) {
  return std::exp(16 * n * d * d + 0.5 * std::log(Q)) * (1 + 1e-12);
}

Interval smoothed_tail_bound(double H, double X, double max_abs_f) {
  Interval u0 = log(Interval(X)) - log(Interval(H));
  if (!(u0.lo > 0.5)) throw PreconditionError("tail bound needs log X - log H > 1/2");
  Interval s0 = u0 - Interval(0.5);
  Interval num = Interval(max_abs_f) * e_interval() * Interval(H) * exp(Interval(0.25) - sqr(s0));
  return num / (Interval(4.0) * u0 * s0);
}

SmoothedReport smoothed_sum_check(const AcceptableMultFn& f, double H, const SmoothedParams& params) {
  f.validate();
  SmoothedReport rep;
  rep.H = H;
  rep.Q = params.Q > 0 ? params.Q : smoothed_min_Q(f, params.n);
  if (static_cast<double>(f.chi.conductor()) > rep.Q)
    throw RangeError("Q_chi<=Q", "conductor " + std::to_string(f.chi.conductor()) + " exceeds Q");
  rep.r = f.chi.is_principal() ? 1 : 0;
  BoundParams bp;
  bp.n = params.n;
  bp.d = f.d;
  bp.Q = rep.Q;
  bp.H = H;
  bp.S = static_cast<long>(f.overrides.size());
  bp.r = rep.r;
  rep.rhs = rhs_bound(BoundKind::smoothed_47, bp);

  double Xd = std::floor(H * std::exp(2.0));
  if (Xd > static_cast<double>(params.budget))
    throw CapacityError("smoothed sum needs " + std::to_string(static_cast<std::uint64_t>(Xd)) +
                        " terms, budget is " + std::to_string(params.budget));
  std::uint64_t X = static_cast<std::uint64_t>(Xd);
  rep.cutoff = X;

  // value classes: (subset of S dividing a) x (exponent of chi on the rest)
  std::vector<std::uint64_t> sp;
  std::vector<Cyclotomic> sv;
  for (const auto& [p, v] : f.overrides) sp.push_back(p), sv.push_back(v);
  std::uint64_t o = f.chi.order();
  std::size_t nmask = std::size_t{1} << sp.size();
  std::size_t ncls = nmask * o;
  std::vector<ComplexInterval> val(ncls);
  double max_abs = 1;
  for (const Cyclotomic& v : sv) max_abs *= std::max(1.0, v.to_complex(20).abs_upper());
  for (std::size_t m = 0; m < nmask; ++m) {
    Cyclotomic base(1);
    for (std::size_t j = 0; j < sp.size(); ++j)
      if (m >> j & 1) base *= sv[j];
    for (std::uint64_t k = 0; k < o; ++k) val[m * o + k] = embed(base * Cyclotomic::zeta(o, static_cast<std::int64_t>(k)));
  }
  auto classify = [&](std::uint64_t a) -> long {
    std::size_t mask = 0;
    std::uint64_t b = a;
    for (std::size_t j = 0; j < sp.size(); ++j)
      if (b % sp[j] == 0) mask |= std::size_t{1} << j, b /= sp[j];
    int k = f.chi.exponent(b);
    return k < 0 ? -1 : static_cast<long>(mask * o + static_cast<std::size_t>(k));
  };

  auto primes = sieve(static_cast<std::uint64_t>(std::sqrt(static_cast<double>(X))) + 2);
  Interval re(0.0), im(0.0);
  std::vector<std::uint8_t> flags;

  // exact weights for small a
  std::uint64_t A0 = std::min<std::uint64_t>(X + 1, std::uint64_t{1} << 17);
  std::vector<Interval> wsum(ncls, Interval(0.0));
  squarefree_segment(1, A0, primes, flags);
  for (std::uint64_t a = 1; a < A0; ++a) {
    if (!flags[a - 1]) continue;
    long c = classify(a);
    if (c < 0) continue;
    wsum[c] += eta_enclosure(H, log(Interval(static_cast<double>(a))));
  }
  for (std::size_t c = 0; c < ncls; ++c) re += wsum[c] * val[c].re, im += wsum[c] * val[c].im;

  // blocks [A, A+w): eta(log u) replaced by its chord, |g''(u)| <= 7.4/u^2
  std::vector<std::int64_t> cnt0(ncls), cnt1(ncls);
  Interval err(0.0);
  for (std::uint64_t A = A0; A <= X;) {
    std::uint64_t w = 1;
    while (w * 2 * 1024 <= A) w *= 2;
    std::uint64_t B = A + w, end = std::min(B, X + 1);
    squarefree_segment(A, end, primes, flags);
    std::fill(cnt0.begin(), cnt0.end(), 0);
    std::fill(cnt1.begin(), cnt1.end(), 0);
    std::int64_t total = 0;
    for (std::uint64_t a = A; a < end; ++a) {
      if (!flags[a - A]) continue;
      long c = classify(a);
      if (c < 0) continue;
      ++cnt0[c];
      cnt1[c] += static_cast<std::int64_t>(a - A);
      ++total;
    }
    Interval gA = eta_enclosure(H, log(Interval(static_cast<double>(A))));
    Interval gB = eta_enclosure(H, log(Interval(static_cast<double>(B))));
    Interval slope = (gB - gA) / Interval(static_cast<double>(w));
    for (std::size_t c = 0; c < ncls; ++c) {
      if (!cnt0[c]) continue;
      Interval s = Interval(static_cast<double>(cnt0[c])) * gA + Interval(static_cast<double>(cnt1[c])) * slope;
      re += s * val[c].re;
      im += s * val[c].im;
    }
    Interval wa = Interval(static_cast<double>(w)) / Interval(static_cast<double>(A));
    err += Interval(static_cast<double>(total)) * Interval(max_abs) * sqr(wa) * Interval(7.4 / 8);
    A = end;
  }
  rep.tail = smoothed_tail_bound(H, static_cast<double>(X), max_abs);
  Interval slack = err + rep.tail;
  re += Interval(-slack.hi, slack.hi);
  im += Interval(-slack.hi, slack.hi);
  rep.re = re;
  rep.im = im;
  rep.lhs_abs = sqrt(sqr(re) + sqr(im));
  rep.pass = certified_le(rep.lhs_abs, rep.rhs);
  return rep;
}

BilinearReport bilinear_check(const std::vector<DirichletCharacter>& family, const std::vector<double>& a,
                              std::uint64_t H, std::uint64_t budget) {
  if (family.empty()) throw InputError("bilinear_check needs a nonempty family");
  if (a.size() != family.size()) throw InputError("one coefficient per character is required");
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!family[i].is_primitive()) throw InputError("family member " + std::to_string(i) + " is not primitive");
    for (std::size_t j = 0; j < i; ++j)
      if (family[i] == family[j]) throw InputError("family members must be pairwise distinct");
  }
  if (H < 1) throw InputError("bilinear_check needs H >= 1");
  if (H > budget) throw CapacityError("H = " + std::to_string(H) + " exceeds budget " + std::to_string(budget));

  BilinearReport rep;
  rep.H = H;
  std::size_t M = family.size();
  for (double x : a) rep.sum_abs += std::fabs(x);
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j < M; ++j) {
      Cyclotomic ip = dirichlet_inner_product(family[i], family[j]);
      if (ip.is_zero()) continue;
      rep.E.emplace_back(i, j);
      rep.sum_E += std::fabs(a[i] * a[j]);
      if (ip.is_rational()) {
        BigRational q = ip.rational_value();
        rep.r = std::max(rep.r, static_cast<long>(std::floor(q.get_d())));
      }
    }

  std::vector<std::vector<ComplexInterval>> z(M);
  std::uint64_t L = 1;
  for (std::size_t i = 0; i < M; ++i) {
    for (std::uint64_t k = 0; k < family[i].order(); ++k)
      z[i].push_back(embed(Cyclotomic::zeta(family[i].order(), static_cast<std::int64_t>(k)) *
                           BigRational(a[i])));
    L = L > 4'000'000 ? L : std::lcm(L, family[i].modulus());
  }
  auto term = [&](std::uint64_t x) {
    Interval re(0.0), im(0.0);
    for (std::size_t i = 0; i < M; ++i) {
      int k = family[i].exponent(x);
      if (k < 0) continue;
      re += z[i][k].re;
      im += z[i][k].im;
    }
    return sqr(re) + sqr(im);
  };

  auto primes = sieve(static_cast<std::uint64_t>(std::sqrt(static_cast<double>(H))) + 2);
  std::vector<std::uint8_t> flags;
  squarefree_segment(1, H + 1, primes, flags);
  Interval lhs(0.0);
  if (L <= 2'000'000 && L <= H) {
    std::vector<std::uint64_t> counts(L, 0);
    for (std::uint64_t x = 1; x <= H; ++x)
      if (flags[x - 1]) ++counts[x % L];
    for (std::uint64_t res = 0; res < L; ++res)
      if (counts[res]) lhs += Interval(static_cast<double>(counts[res])) * term(res);
  } else {
    for (std::uint64_t x = 1; x <= H; ++x)
      if (flags[x - 1]) lhs += term(x);
  }
  if (lhs.lo < 0) lhs.lo = 0;
  rep.lhs = lhs;

  BoundParams tp;
  tp.H = static_cast<double>(H);
  tp.sum_abs = rep.sum_abs;
  rep.trivial = rhs_bound(BoundKind::trivial_53, tp);
  rep.trivial_pass = certified_le(lhs, rep.trivial);

  BoundParams bp = tp;
  bp.Q = 0;
  for (const auto& c : family) bp.Q = std::max(bp.Q, static_cast<double>(c.conductor()));
  bp.M = static_cast<double>(M);
  bp.r = rep.r;
  bp.sum_E = rep.sum_E;
  try {
    rep.thm52 = rhs_bound(BoundKind::bilinear_52, bp);
    rep.thm52_pass = certified_le(lhs, *rep.thm52);
  } catch (const RangeError& e) {
    rep.thm52_gate = e.gate();
  }
  return rep;
}

SquarefullReport squarefull_sums(std::uint64_t H) {
  if (H < 1) throw InputError("squarefull_sums needs H >= 1");
  SquarefullReport rep;
  rep.H = H;
  // r = a^2 b^3 with b squarefree, uniquely
  for (std::uint64_t b = 1; b * b * b <= H; ++b) {
    if (!is_squarefree_small(b)) continue;
    for (std::uint64_t x = 1; x * x * b * b * b <= H; ++x) rep.list.push_back(x * x * b * b * b);
  }
  std::sort(rep.list.begin(), rep.list.end());
  Interval s_half(0.0), s_one(0.0);
  auto check = [&](std::uint64_t h) {
    Interval rhs = Interval(81.0) * log(Interval(static_cast<double>(h)));
    rep.worst_ratio = std::max(rep.worst_ratio, s_half.hi / rhs.lo);
    if (s_half.hi > rhs.lo) rep.log_bound_ok = false;
  };
  bool checked100 = false;
  for (std::uint64_t r : rep.list) {
    if (H >= 100 && !checked100 && r > 100) {
      check(100);
      checked100 = true;
    }
    Interval x(static_cast<double>(r));
    s_half += Interval(1.0) / sqrt(x);
    s_one += Interval(1.0) / x;
    if (r >= 100) {
      check(r);
      checked100 = true;
    }
  }
  if (H >= 100 && !checked100) check(100);
  rep.sum_inv_sqrt = s_half;
  rep.sum_inv = s_one;
  rep.zeta_bound_ok = s_one.hi <= 2;
  return rep;
}

namespace {

struct U128Hash {
  std::size_t operator()(unsigned __int128 x) const {
    auto lo = static_cast<std::uint64_t>(x), hi = static_cast<std::uint64_t>(x >> 64);
    return std::hash<std::uint64_t>()(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
  }
};

}  // namespace

Interval a0t_eval(const A0tData& data, A0tMode mode, std::uint64_t budget) {
  if (data.t < 1) throw InputError("t must be positive");
  if (data.H < 1) throw InputError("H must be positive");
  if (mode == A0tMode::prime_support_bound) {
    for (const auto& [p, v] : data.b)
      if (v != 0 && (!is_prime_small(p) || std::fabs(v) > 1))
        throw InputError("prime-support bound needs b supported on primes with |b_p| <= 1");
    if (data.H < 100) throw RangeError("H>=100", "prime-support bound needs H >= 100");
    Interval lh = log(Interval(static_cast<double>(data.H)));
    return Interval(3.0) * Interval(data.d) * sqrt(Interval(static_cast<double>(data.t))) * sqrt(Interval(data.n)) /
           sqrt(lh);
  }
  std::vector<std::uint64_t> keys;
  std::vector<double> vals;
  for (const auto& [x, v] : data.b) {
    if (v == 0) continue;
    if (x > data.H || !is_squarefree_small(x)) throw InputError("b must be supported on squarefree a <= H");
    keys.push_back(x);
    vals.push_back(std::fabs(v));
  }
  if (keys.empty()) return Interval(0.0);
  double log_prod = data.t * std::log(static_cast<double>(data.H));
  if (log_prod > 126 * std::log(2.0)) throw CapacityError("H^t exceeds 128-bit products");
  double tuples = std::pow(static_cast<double>(keys.size()), static_cast<double>(data.t));
  if (tuples > static_cast<double>(budget)) throw CapacityError("A_0t enumeration exceeds budget");

  std::unordered_map<unsigned __int128, Interval, U128Hash> weight;
  std::vector<std::size_t> idx(data.t, 0);
  for (;;) {
    unsigned __int128 prod = 1;
    Interval w(1.0);
    for (std::size_t i : idx) prod *= keys[i], w *= Interval(vals[i]);
    auto [it, fresh] = weight.emplace(prod, w);
    if (!fresh) it->second += w;
    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == keys.size()) idx[j++] = 0;
    if (j == idx.size()) break;
  }
  std::vector<std::uint64_t> support_primes;
  for (std::uint64_t x : keys)
    for (auto [p, k] : factor_small(x)) support_primes.push_back(p);
  std::sort(support_primes.begin(), support_primes.end());
  support_primes.erase(std::unique(support_primes.begin(), support_primes.end()), support_primes.end());

  Interval total(0.0);
  for (const auto& [prod, w] : weight) {
    // f(r) = d^Omega(r) over the squarefull part r; f((1)) = 1
    unsigned __int128 x = prod;
    long omega_r = 0;
    for (std::uint64_t p : support_primes) {
      long e = 0;
      while (x % p == 0) x /= p, ++e;
      if (e >= 2) omega_r += e;
    }
    Interval G = w * exp(Interval(static_cast<double>(omega_r)) * log(Interval(data.d)));
    total += sqr(G);
  }
  Interval t(static_cast<double>(data.t));
  return exp((log(total) - t * log(Interval(static_cast<double>(data.H)))) / (Interval(2.0) * t));
}

CharSumOracle character_sum_oracle(const DirichletCharacter& chi, std::uint64_t H_max) {
  auto primes = std::make_shared<std::vector<std::uint64_t>>(sieve(H_max));
  std::uint64_t o = chi.order();
  auto cum = std::make_shared<std::vector<std::vector<long>>>(o, std::vector<long>(primes->size() + 1, 0));
  for (std::size_t i = 0; i < primes->size(); ++i) {
    int e = chi.exponent((*primes)[i]);
    for (std::uint64_t k = 0; k < o; ++k) (*cum)[k][i + 1] = (*cum)[k][i] + (e == static_cast<int>(k));
  }
  return [primes, cum, o, H_max](std::uint64_t H) {
    if (H > H_max) throw CapacityError("oracle built for H <= " + std::to_string(H_max));
    std::size_t i = static_cast<std::size_t>(std::upper_bound(primes->begin(), primes->end(), H) - primes->begin());
    std::vector<long> counts(o);
    for (std::uint64_t k = 0; k < o; ++k) counts[k] = (*cum)[k][i];
    if (o <= 2) {
      double v = static_cast<double>(counts[0] - (o == 2 ? counts[1] : 0));
      return Interval(std::fabs(v));
    }
    return abs_enclosure(Cyclotomic::from_exponent_counts(o, counts).to_complex(20));
  };
}

CharSumOracle prime_count_oracle(std::uint64_t H_max) {
  auto primes = std::make_shared<std::vector<std::uint64_t>>(sieve(H_max));
  return [primes, H_max](std::uint64_t H) {
    if (H > H_max) throw CapacityError("oracle built for H <= " + std::to_string(H_max));
    auto n = std::upper_bound(primes->begin(), primes->end(), H) - primes->begin();
    return Interval(static_cast<double>(n));
  };
}

double eps_bad_gate(double Delta_K, double deg_KF, double eps) {
  if (!(Delta_K > 1)) throw InputError("Delta_K must exceed 1");
  if (!(eps > 0)) throw InputError("eps must be positive");
  Interval ex = Interval(2.0) + Interval(deg_KF) / (Interval(2.0) * Interval(eps));
  return exp(ex * log(log(Interval(Delta_K)))).hi;
}

EpsBadReport eps_bad_scan(const CharSumOracle& oracle, double Delta_K, double deg_KF, double deg_KQ, double eps,
                          const std::vector<std::uint64_t>& grid) {
  if (!(deg_KF >= 2)) throw InputError("eps-bad scan needs a nontrivial extension ([K:F] >= 2)");
  if (grid.empty()) throw InputError("empty H grid");
  EpsBadReport rep;
  rep.gate = eps_bad_gate(Delta_K, deg_KF, eps);
  for (std::uint64_t H : grid)
    if (H < 2 || static_cast<double>(H) < rep.gate)
      throw RangeError("H>=(log Delta_K)^(2+[K:F]/(2eps))",
                       "grid point " + std::to_string(H) + " below gate " + std::to_string(rep.gate));
  Interval c = c_epsilon_interval(eps, deg_KQ);
  for (std::uint64_t H : grid) {
    EpsBadRow row;
    row.H = H;
    row.lhs = oracle(H);
    Interval lh = log(Interval(static_cast<double>(H)));
    row.rhs = Interval(static_cast<double>(H)) / lh * exp(-(c * sqrt(lh)));
    row.ratio = row.lhs.mid() / row.rhs.mid();
    if (row.lhs.lo >= row.rhs.hi)
      row.verdict = "flagged";
    else if (row.lhs.hi < row.rhs.lo)
      row.verdict = "clear";
    else
      row.verdict = "undecided";
    rep.max_ratio = std::max(rep.max_ratio, row.ratio);
    if (row.verdict == "flagged" && !rep.flagged) rep.flagged = true, rep.first_flagged = H;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace artin
