#include "artin/analytic/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <map>

#include "artin/errors.hpp"

namespace artin {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const Interval kZeroLog{-kInf, -kInf};

void gate(bool ok, const char* name, const std::string& detail) {
  if (!ok) throw RangeError(name, detail);
}

bool is_zero_log(const Interval& x) { return x.hi == -kInf; }

// log of a sum of positive terms given by their logs; -inf entries are zeros.
Interval log_sum(std::initializer_list<Interval> terms) {
  Interval acc = kZeroLog;
  for (const Interval& t : terms) {
    if (is_zero_log(t)) continue;
    acc = is_zero_log(acc) ? t : log_add(acc, t);
  }
  return acc;
}

Interval log_or_zero(double x) { return x > 0 ? log(Interval(x)) : kZeroLog; }

Interval log_h(const BoundParams& p) {
  if (p.log_H) return Interval(*p.log_H);
  gate(p.H > 0, "params positive", "H must be positive");
  return log(Interval(p.H));
}

bool h_at_least(const BoundParams& p, double x) { return p.log_H ? *p.log_H >= std::log(x) : p.H >= x; }

std::string h_str(const BoundParams& p) {
  return p.log_H ? "log H = " + std::to_string(*p.log_H) : "H = " + std::to_string(p.H);
}

void positive_core(const BoundParams& p) {
  gate(p.n >= 1 && p.d >= 1, "params positive", "need n >= 1 and d >= 1");
}

// log Q_chi(t) = log Q + nd log(1 + |t|)
Interval log_qchi(const BoundParams& p) {
  gate(p.Q >= 1, "Q>=1", "conductor bound must be at least 1");
  return log(Interval(p.Q)) + Interval(p.n * p.d) * log(Interval(1.0) + Interval(std::fabs(p.t_imag)));
}

Interval log_e3_delta_f(const BoundParams& p) {
  gate(p.Delta_F >= 1, "Delta_F>=1", "base discriminant must be at least 1");
  return log(Interval(3.0) + log(Interval(p.Delta_F)));
}

Interval convexity_42(const BoundParams& p) {
  positive_core(p);
  gate(p.delta > 0 && p.delta < 0.5, "0<delta<1/2", "delta = " + std::to_string(p.delta));
  gate(p.sigma >= -p.delta && p.sigma <= 1 + p.delta, "-delta<=sigma<=1+delta", "sigma = " + std::to_string(p.sigma));
  gate(p.Delta_F >= 1, "Delta_F>=1", "base discriminant must be at least 1");
  Interval n(p.n), d(p.d), delta(p.delta);
  Interval lq = log_qchi(p);
  Interval out = Interval(2.0) * d * log(Interval(3.0)) + n * d - d * log(delta);
  out += (Interval(1.0) + delta - Interval(p.sigma)) / Interval(2.0) * lq;
  out += n * d * log(Interval(3.0) + log(Interval(p.Delta_F)) / (Interval(2.0) * n));
  return out;
}

Interval lfs_44(const BoundParams& p) {
  positive_core(p);
  gate(p.sigma0 > 0.5 && p.sigma0 < 1, "1/2<sigma0<1", "sigma0 = " + std::to_string(p.sigma0));
  gate(p.sigma >= p.sigma0, "sigma>=sigma0", "sigma = " + std::to_string(p.sigma));
  gate(p.S >= 0, "#S>=0", "exception set size must be nonnegative");
  Interval n(p.n), d(p.d), s(p.sigma), s0(p.sigma0);
  Interval first = Interval(3.0) * n * exp((Interval(4.0) - Interval(4.0) * s) * log(d)) / (Interval(2.0) * s - Interval(1.0));
  Interval base = Interval(2.0) * d * d + Interval(static_cast<double>(p.S));
  Interval second = Interval(2.0) * d * n * (pow(base, Interval(1.0) - s0) - Interval(1.0)) / (Interval(1.0) - s0);
  return log(first + second);
}

Interval line_45(const BoundParams& p) {
  positive_core(p);
  gate(p.delta > 0 && p.delta <= 0.25, "0<delta<=1/4", "delta = " + std::to_string(p.delta));
  gate(p.S >= 0, "#S>=0", "exception set size must be nonnegative");
  Interval n(p.n), d(p.d), delta(p.delta);
  Interval lq = log_qchi(p);
  Interval out = d * log(Interval(3.0) + lq) + n * d * log_e3_delta_f(p);
  out += (Interval(1.0) - Interval(2.0) * delta) / Interval(4.0) * lq;
  out += Interval(6.0) * n * d + Interval(3.0) * n * d * d / delta;
  out += Interval(4.0) * d * n * sqrt(Interval(static_cast<double>(p.S)));
  return out;
}

Interval circle_45(const BoundParams& p) {
  positive_core(p);
  gate(p.delta > 0 && p.delta <= 0.25, "0<delta<=1/4", "delta = " + std::to_string(p.delta));
  gate(p.r >= 0 && p.r <= p.d, "0<=r<=d", "r = " + std::to_string(p.r));
  gate(p.S >= 0, "#S>=0", "exception set size must be nonnegative");
  gate(p.Q >= 1, "Q>=1", "conductor bound must be at least 1");
  Interval n(p.n), d(p.d), delta(p.delta);
  Interval out = -((d + Interval(static_cast<double>(p.r))) * log(delta));
  out += delta * log(Interval(p.Q)) + n * d * log_e3_delta_f(p) + Interval(11.0) * n * d;
  Interval base = Interval(2.0) * d * d + Interval(static_cast<double>(p.S));
  out += Interval(2.0) * d * n * (pow(base, delta) - Interval(1.0)) / delta;
  return out;
}

Interval smoothed_47(const BoundParams& p) {
  positive_core(p);
  gate(p.S >= 0 && p.r >= 0, "#S>=0", "exception set size and r must be nonnegative");
  Interval n(p.n), d(p.d);
  double qmin = std::max({std::pow(2.0, p.n), std::exp(4 * std::sqrt(p.d)), std::exp(0.5 * std::sqrt(p.d) * p.S)});
  gate(p.Q >= qmin, "Q>=max(2^n,exp(4d^(1/2)),exp(d^(1/2)|S|/2))", "Q = " + std::to_string(p.Q));
  Interval lq = log(Interval(p.Q)), lh = log_h(p);
  gate((lh - lq / Interval(2.0)).lo >= 0, "H>=Q^(1/2)", h_str(p));
  Interval u = lh - lq / Interval(2.0);
  gate((Interval(16.0) * n * d * d).hi <= u.lo, "16nd^2<=log(Q^(-1/2)H)", "log(Q^(-1/2)H) = " + std::to_string(u.mid()));
  Interval term2 = lh - u / Interval(2.0) + Interval(26.0) * n * d * log(lq);
  term2 += Interval(4.0) * sqrt(n) * d * sqrt(u);
  term2 += Interval(4.0) * sqrt(Interval(2.0)) * n * pow(d, Interval(0.75)) * sqrt(lq);
  Interval term1 = kZeroLog;
  if (p.r > 0)
    term1 = lh + Interval(static_cast<double>(p.r - 1)) * log(lh) + Interval(50.0) * n * d * log(lq);
  return log_sum({term1, term2});
}

Interval bilinear_52(const BoundParams& p) {
  positive_core(p);
  gate(p.Q > 100, "Q>100", "Q = " + std::to_string(p.Q));
  gate(p.M > 100, "M>100", "M = " + std::to_string(p.M));
  gate(p.sum_abs >= 0 && p.sum_E >= 0 && p.r >= 0, "coefficient sums nonnegative", "sum |a_i| and sum_E must be >= 0");
  Interval n(p.n), d(p.d);
  Interval lq = log(Interval(p.Q)), lh = log_h(p);
  Interval excess = lh - d * lq;
  gate(excess.lo >= (Interval(16.0) * n * pow(d, Interval(4.0))).hi, "H>=Q^d*e^(16nd^4)",
       h_str(p));
  Interval ell = log(Interval(2.0) * d * lq);
  Interval logA = Interval(26.0) * d * d * n * ell + Interval(4.0) * sqrt(n) * d * d * sqrt(excess) +
                  Interval(8.0) * n * d * d * sqrt(lq);
  Interval term1 = kZeroLog, term2 = kZeroLog;
  if (p.sum_E > 0)
    term1 = lh + Interval(static_cast<double>(p.r - 1)) * log(lh) + Interval(50.0) * d * d * n * ell + log(Interval(p.sum_E));
  if (p.sum_abs > 0) term2 = logA + lh - excess / Interval(2.0) + Interval(2.0) * log(Interval(p.sum_abs));
  return log_sum({term1, term2});
}

Interval trivial_53(const BoundParams& p) {
  positive_core(p);
  gate(h_at_least(p, 1), "H>=1", h_str(p));
  gate(p.sum_abs >= 0, "coefficient sums nonnegative", "sum |a_i| must be >= 0");
  if (p.sum_abs == 0) return kZeroLog;
  Interval n(p.n), d(p.d), lh = log_h(p);
  return (n * d * d + Interval(1.0)) * log(Interval(4.0) + lh) + lh + Interval(2.0) * log(Interval(p.sum_abs));
}

Interval a0t_prime_bound_log(const BoundParams& p) {
  gate(h_at_least(p, 100), "H>=100", "prime-support bound for A_0t needs H >= 100");
  Interval lh = log_h(p);
  return log(Interval(3.0) * Interval(p.d) * sqrt(Interval(static_cast<double>(p.t))) * sqrt(Interval(p.n)) / sqrt(lh));
}

Interval holder_54(const BoundParams& p) {
  positive_core(p);
  gate(p.t >= 1, "t>=1", "t = " + std::to_string(p.t));
  gate(p.Q > 100, "Q>100", "Q = " + std::to_string(p.Q));
  gate(p.M > 100, "M>100", "M = " + std::to_string(p.M));
  gate(h_at_least(p, 100), "H>=100", h_str(p));
  gate(p.num_E >= 0 && p.r >= 0, "coefficient sums nonnegative", "#E and r must be >= 0");
  Interval n(p.n), d(p.d), t(static_cast<double>(p.t));
  Interval lq = log(Interval(p.Q)), lh = log_h(p), lm = log(Interval(p.M));
  Interval excess = t * lh - d * lq;
  gate(excess.lo >= (Interval(16.0) * n * pow(d, Interval(4.0))).hi, "H^t>=Q^d*e^(16nd^4)",
       h_str(p) + ", t = " + std::to_string(p.t));
  Interval la0t = p.a0t >= 0 ? log_or_zero(p.a0t) : a0t_prime_bound_log(p);
  if (is_zero_log(la0t)) return kZeroLog;
  Interval two_t = Interval(2.0) * t;
  Interval logA = Interval(4.0) * sqrt(n) * d * d * sqrt(excess) + Interval(8.0) * n * d * d * sqrt(lq);
  double expo = std::max<double>(static_cast<double>(p.r - 1), 1.0);
  Interval out = la0t + Interval(expo) / two_t * log(t * lh);
  out += Interval(26.0) * d * d * n / t * log(Interval(2.0) * d * lq);
  out += lh + lm;
  Interval inner1 = p.num_E > 0 ? (log(Interval(p.num_E)) - Interval(2.0) * lm) / two_t : kZeroLog;
  Interval inner2 = -(lh / Interval(4.0)) + logA / two_t + d * lq / (Interval(4.0) * t);
  return out + log_sum({inner1, inner2});
}

void thm62_gates(const BoundParams& p) {
  positive_core(p);
  gate(p.Q >= 100, "Q>=100", "Q = " + std::to_string(p.Q));
  gate(p.M >= 100, "M>=100", "M = " + std::to_string(p.M));
  gate(h_at_least(p, 100), "H>=100", h_str(p));
}

Interval thm62_denominator(const BoundParams& p) {
  Interval n(p.n), d(p.d);
  Interval lq = log(Interval(p.Q)), lh = log_h(p), lm = log(Interval(p.M));
  return d * lq + Interval(4.0) * lm + Interval(2.0) * lh + Interval(13.0) * n * pow(d, Interval(4.0)) * sqrt(lq + lm);
}

Interval thm62_c(const BoundParams& p) {
  thm62_gates(p);
  Interval n(p.n), d(p.d);
  Interval lq = log(Interval(p.Q)), lh = log_h(p), lm = log(Interval(p.M));
  Interval loglog = log(d * lq + lm + lh);
  Interval out = log(Interval(10.0) * n) + Interval(1.5) * (d + Interval(2.0)) * log(d) + log(lq + lm + lh) / Interval(2.0);
  out += (-lm + Interval(15.0) * n * d * d * loglog) * lh / thm62_denominator(p);
  return out;
}

Interval thm62_cH(const BoundParams& p) {
  thm62_gates(p);
  Interval n(p.n), d(p.d);
  Interval lq = log(Interval(p.Q)), lh = log_h(p), lm = log(Interval(p.M));
  Interval loglog = log(d * lq + lm + lh);
  Interval out = log(Interval(11.0) * n) + Interval(1.5) * (d + Interval(2.0)) * log(d) + log(lq + lm + lh) / Interval(2.0);
  Interval shrink = Interval(1.0) - lh / (d * lq + Interval(4.0) * lm + Interval(3.0) * lh);
  out -= (lm - Interval(27.0) * n * d * d * loglog) * lh * shrink / thm62_denominator(p);
  return out;
}

Interval sparse_16(const BoundParams& p) {
  gate(p.d >= 2, "d>=2", "d = " + std::to_string(p.d));
  gate(p.eps > 0 && p.eps < 1, "0<eps<1", "eps = " + std::to_string(p.eps));
  gate(p.Delta >= 3, "Delta>=3", "Delta = " + std::to_string(p.Delta));
  gate(p.F_degree >= 1, "params positive", "[F:Q] must be >= 1");
  Interval C = Interval(400.0) * Interval(p.d) * Interval(p.d) * Interval(p.F_degree);
  Interval ld = log(Interval(p.Delta));
  Interval lld = log(ld);
  Interval delta = C / sqrt(lld);
  return Interval(p.eps) * (Interval(1.0) + delta) * ld + C * lld;
}

}  // namespace

const char* bound_name(BoundKind k) {
  switch (k) {
    case BoundKind::convexity_42: return "convexity_42";
    case BoundKind::lfs_44: return "lfs_44";
    case BoundKind::line_45: return "line_45";
    case BoundKind::circle_45: return "circle_45";
    case BoundKind::smoothed_47: return "smoothed_47";
    case BoundKind::bilinear_52: return "bilinear_52";
    case BoundKind::trivial_53: return "trivial_53";
    case BoundKind::holder_54: return "holder_54";
    case BoundKind::thm62_c: return "thm62_c";
    case BoundKind::thm62_cH: return "thm62_cH";
    case BoundKind::sparse_16: return "sparse_16";
  }
  return "?";
}

std::vector<BoundKind> all_bound_kinds() {
  return {BoundKind::convexity_42, BoundKind::lfs_44,     BoundKind::line_45,   BoundKind::circle_45,
          BoundKind::smoothed_47,  BoundKind::bilinear_52, BoundKind::trivial_53, BoundKind::holder_54,
          BoundKind::thm62_c,      BoundKind::thm62_cH,   BoundKind::sparse_16};
}

BoundKind parse_bound_kind(const std::string& s) {
  static const std::map<std::string, BoundKind> aliases = {
      {"lemma42", BoundKind::convexity_42}, {"lfs44", BoundKind::lfs_44},     {"line45", BoundKind::line_45},
      {"circle45", BoundKind::circle_45},   {"prop47", BoundKind::smoothed_47}, {"thm52", BoundKind::bilinear_52},
      {"rem53", BoundKind::trivial_53},     {"thm54", BoundKind::holder_54},  {"thm62c", BoundKind::thm62_c},
      {"thm62cH", BoundKind::thm62_cH},     {"thm16", BoundKind::sparse_16}};
  for (BoundKind k : all_bound_kinds())
    if (s == bound_name(k)) return k;
  auto it = aliases.find(s);
  if (it != aliases.end()) return it->second;
  throw InputError("unknown bound: " + s);
}

double BoundValue::value() const { return std::exp(log_value.mid()); }

Interval BoundValue::enclosure() const { return exp(log_value); }

std::string BoundValue::str() const {
  char buf[128];
  if (log_value.hi == -kInf) return "0";
  if (log_value.hi < 700 && log_value.lo > -700) {
    Interval v = enclosure();
    std::snprintf(buf, sizeof buf, "%.10g +/- %.2g", v.mid(), v.radius());
  } else {
    std::snprintf(buf, sizeof buf, "exp(%.10g +/- %.2g)", log_value.mid(), log_value.radius());
  }
  return buf;
}

double c_epsilon(double eps, double deg_KQ) {
  if (!(eps > 0)) throw InputError("c_epsilon needs eps > 0");
  if (!(deg_KQ >= 1)) throw InputError("c_epsilon needs [K:Q] >= 1");
  return std::min(std::sqrt(eps) / 18, 1 / (29 * std::sqrt(deg_KQ)));
}

Interval c_epsilon_interval(double eps, double deg_KQ) {
  c_epsilon(eps, deg_KQ);
  return min(sqrt(Interval(eps)) / Interval(18.0), Interval(1.0) / (Interval(29.0) * sqrt(Interval(deg_KQ))));
}

BoundValue rhs_bound(BoundKind which, const BoundParams& p) {
  BoundValue v;
  v.which = which;
  switch (which) {
    case BoundKind::convexity_42: v.log_value = convexity_42(p); break;
    case BoundKind::lfs_44: v.log_value = lfs_44(p); break;
    case BoundKind::line_45: v.log_value = line_45(p); break;
    case BoundKind::circle_45: v.log_value = circle_45(p); break;
    case BoundKind::smoothed_47: v.log_value = smoothed_47(p); break;
    case BoundKind::bilinear_52: v.log_value = bilinear_52(p); break;
    case BoundKind::trivial_53: v.log_value = trivial_53(p); break;
    case BoundKind::holder_54: v.log_value = holder_54(p); break;
    case BoundKind::thm62_c: v.log_value = thm62_c(p); break;
    case BoundKind::thm62_cH: v.log_value = thm62_cH(p); break;
    case BoundKind::sparse_16: v.log_value = sparse_16(p); break;
  }
  return v;
}

static void holder_core(const BoundParams& p) {
  positive_core(p);
  gate(p.Q > 1 && p.M > 1 && (p.log_H ? *p.log_H > 0 : p.H > 1) && p.num_E > 0, "params positive",
       "need Q, M, H > 1 and #E > 0");
}

static Interval holder_root(const BoundParams& p) {
  Interval lq = log(Interval(p.Q)), lm = log(Interval(p.M));
  return Interval(100.0) * Interval(p.n) * pow(Interval(p.d), Interval(4.0)) * sqrt(lq + lm);
}

long holder_t(const BoundParams& p) {
  holder_core(p);
  Interval d(p.d), lq = log(Interval(p.Q)), lm = log(Interval(p.M));
  Interval tx = (d * lq + Interval(2.0) * lm + holder_root(p)) / log_h(p);
  double c = std::ceil(tx.hi);
  if (std::ceil(tx.lo) != c) throw RangeError("t exact", "ceiling of the t formula is not certified");
  return std::max(1L, static_cast<long>(c));
}

Interval holder_log_M0(const BoundParams& p) {
  holder_core(p);
  Interval n(p.n), d(p.d), lq = log(Interval(p.Q)), lm = log(Interval(p.M));
  return Interval(2.0) * lm - log(Interval(p.num_E)) -
         Interval(60.0) * n * d * d * log(log_h(p) + lm + Interval(2.0) * d * lq);
}

HolderParams holder_params(const BoundParams& p) {
  HolderParams out;
  out.t = holder_t(p);
  out.log_M0 = holder_log_M0(p);
  gate(out.log_M0.lo > 0, "M0>1", "log M0 = " + std::to_string(out.log_M0.mid()));
  Interval d(p.d), lq = log(Interval(p.Q)), lm = log(Interval(p.M)), lh = log_h(p);
  BoundParams q = p;
  q.t = out.t;
  Interval la0t = p.a0t >= 0 ? log_or_zero(p.a0t) : a0t_prime_bound_log(q);
  out.a0t = is_zero_log(la0t) ? Interval(0.0) : exp(la0t);
  out.bound.which = BoundKind::holder_54;
  if (is_zero_log(la0t)) {
    out.bound.log_value = kZeroLog;
    return out;
  }
  Interval den = Interval(2.0) * d * lq + Interval(4.0) * lm + Interval(2.0) * holder_root(p) + Interval(2.0) * lh;
  out.bound.log_value = log(Interval(2.0)) + la0t + lh + lm - out.log_M0 * lh / den;
  return out;
}

}  // namespace artin
