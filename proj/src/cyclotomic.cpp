#include "artin/cyclotomic.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "artin/errors.hpp"

namespace artin {

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

std::vector<long long> cyclotomic_polynomial(std::uint64_t e) {
  if (e == 0) throw InputError("conductor must be positive");
  // Product over d | e of (x^d - 1)^mu(e/d); multiply first, then divide.
  auto mobius = [](std::uint64_t n) {
    int m = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
    return n > 1 ? -m : m;
  };
  std::vector<long long> poly{1};
  std::vector<std::uint64_t> divide_by;
  for (std::uint64_t d = 1; d <= e; ++d) {
    if (e % d) continue;
    int mu = mobius(e / d);
    if (mu == 1) {
      std::vector<long long> next(poly.size() + d, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + d] += poly[i];
        next[i] -= poly[i];
      }
      poly = std::move(next);
    } else if (mu == -1) {
      divide_by.push_back(d);
    }
  }
  for (auto d : divide_by) {
    // poly / (x^d - 1): q_i = q_{i-d} - p_i from the bottom, i.e. -p_i + q_{i-d}.
    std::size_t n = poly.size() - 1;
    std::vector<long long> q(n - d + 1, 0);
    for (std::size_t i = 0; i <= n - d; ++i) q[i] = -poly[i] + (i >= d ? q[i - d] : 0);
    poly = std::move(q);
  }
  return poly;
}

namespace {

struct CycloData {
  std::uint64_t e = 1;
  std::size_t phi = 1;
  std::vector<std::vector<long long>> pow;  // x^k mod Phi_e for k < e
};

std::shared_ptr<const CycloData> data_for(std::uint64_t e) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::shared_ptr<const CycloData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;
  auto d = std::make_shared<CycloData>();
  d->e = e;
  auto phi_poly = cyclotomic_polynomial(e);
  d->phi = phi_poly.size() - 1;
  std::vector<long long> cur(d->phi, 0);
  cur[0] = 1;
  for (std::uint64_t k = 0; k < e; ++k) {
    d->pow.push_back(cur);
    // multiply by x and reduce
    long long top = cur[d->phi - 1];
    for (std::size_t j = d->phi - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top) {
      for (std::size_t j = 0; j < d->phi; ++j) {
        long long r;
        if (__builtin_mul_overflow(top, phi_poly[j], &r) || __builtin_sub_overflow(cur[j], r, &cur[j]))
          throw std::overflow_error("cyclotomic reduction table overflow");
      }
    }
  }
  cache.emplace(e, d);
  return d;
}

std::uint64_t lcm_u(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

std::uint64_t mod_e(std::int64_t k, std::uint64_t e) {
  long long m = static_cast<long long>(e);
  long long r = k % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

Cyclotomic::Cyclotomic() : e_(1), c_(1, 0) {}
Cyclotomic::Cyclotomic(long v) : e_(1), c_(1, BigRational(v)) {}
Cyclotomic::Cyclotomic(const BigRational& v) : e_(1), c_(1, v) { c_[0].canonicalize(); }

Cyclotomic Cyclotomic::zeta(std::uint64_t e, std::int64_t k) {
  auto d = data_for(e);
  const auto& row = d->pow[mod_e(k, e)];
  Cyclotomic z;
  z.e_ = e;
  z.c_.resize(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) z.c_[i] = BigRational(static_cast<long>(row[i]));
  return z;
}

Cyclotomic Cyclotomic::from_exponent_counts(std::uint64_t e, const std::vector<long>& counts) {
  auto d = data_for(e);
  std::vector<long long> acc(d->phi, 0);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (!counts[k]) continue;
    const auto& row = d->pow[k % e];
    for (std::size_t j = 0; j < d->phi; ++j) acc[j] += counts[k] * row[j];
  }
  Cyclotomic z;
  z.e_ = e;
  z.c_.resize(d->phi);
  for (std::size_t j = 0; j < d->phi; ++j) z.c_[j] = BigRational(static_cast<long>(acc[j]));
  return z;
}

Cyclotomic Cyclotomic::from_coeffs(std::uint64_t e, std::vector<BigRational> coeffs) {
  for (auto& c : coeffs) c.canonicalize();
  auto d = data_for(e);
  if (coeffs.size() > d->phi) {
    // Reduce higher powers.
    std::vector<BigRational> low(d->phi, 0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0) continue;
      const auto& row = d->pow[k % e];
      for (std::size_t j = 0; j < d->phi; ++j)
        if (row[j]) low[j] += coeffs[k] * BigRational(static_cast<long>(row[j]));
    }
    coeffs = std::move(low);
  }
  coeffs.resize(d->phi, 0);
  Cyclotomic z;
  z.e_ = e;
  z.c_ = std::move(coeffs);
  for (auto& c : z.c_) c.canonicalize();
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

BigRational Cyclotomic::rational_value() const {
  if (!is_rational()) throw PreconditionError("cyclotomic value is not rational");
  return c_[0];
}

bool Cyclotomic::has_integer_coeffs() const {
  for (const auto& c : c_)
    if (c.get_den() != 1) return false;
  return true;
}

Cyclotomic Cyclotomic::promote(std::uint64_t e) const {
  if (e == e_) return *this;
  if (e % e_ != 0) throw InputError("promotion target is not a multiple of the conductor");
  auto d = data_for(e);
  std::uint64_t step = e / e_;
  Cyclotomic z;
  z.e_ = e;
  z.c_.assign(d->phi, 0);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const auto& row = d->pow[(j * step) % e];
    for (std::size_t i = 0; i < d->phi; ++i)
      if (row[i]) z.c_[i] += c_[j] * BigRational(static_cast<long>(row[i]));
  }
  return z;
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  std::uint64_t kk = mod_e(k, e_);
  if (std::gcd(kk, e_) != 1 && e_ > 1) throw InputError("galois(k) needs gcd(k, e) = 1");
  if (e_ <= 2) return *this;
  auto d = data_for(e_);
  Cyclotomic z;
  z.e_ = e_;
  z.c_.assign(d->phi, 0);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const auto& row = d->pow[(j * kk) % e_];
    for (std::size_t i = 0; i < d->phi; ++i)
      if (row[i]) z.c_[i] += c_[j] * BigRational(static_cast<long>(row[i]));
  }
  return z;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic z = *this;
  for (auto& c : z.c_) c = -c;
  return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  std::uint64_t l = lcm_u(e_, o.e_);
  if (l != e_) *this = promote(l);
  if (o.e_ == l) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  } else {
    Cyclotomic p = o.promote(l);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += p.c_[i];
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const BigRational& q0) {
  BigRational q = q0;
  q.canonicalize();  // mpq arithmetic assumes canonical operands
  for (auto& c : c_) c *= q;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.e_ == 1) return *this *= o.c_[0];
  if (e_ == 1) {
    BigRational q = c_[0];
    *this = o;
    return *this *= q;
  }
  std::uint64_t l = lcm_u(e_, o.e_);
  Cyclotomic a = promote(l);
  Cyclotomic b = o.promote(l);
  auto d = data_for(l);
  std::size_t phi = d->phi;
  std::vector<BigRational> raw(2 * phi - 1, 0);
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j)
      if (b.c_[j] != 0) raw[i + j] += a.c_[i] * b.c_[j];
  }
  for (std::size_t k = phi; k < raw.size(); ++k) {
    if (raw[k] == 0) continue;
    const auto& row = d->pow[k % l];
    for (std::size_t j = 0; j < phi; ++j)
      if (row[j]) raw[j] += raw[k] * BigRational(static_cast<long>(row[j]));
  }
  raw.resize(phi);
  e_ = l;
  c_ = std::move(raw);
  return *this;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (e_ == o.e_) return c_ == o.c_;
  std::uint64_t l = lcm_u(e_, o.e_);
  return promote(l).c_ == o.promote(l).c_;
}

Cyclotomic Cyclotomic::reduced() const {
  if (is_rational()) return Cyclotomic(c_[0]);
  for (std::uint64_t f = 3; f < e_; ++f) {
    if (e_ % f != 0 || f % 4 == 2) continue;
    bool fixed = true;
    for (std::uint64_t k = 1 + f; k < e_ && fixed; k += f)
      if (std::gcd(k, e_) == 1 && galois(static_cast<std::int64_t>(k)) != *this) fixed = false;
    if (!fixed) continue;
    // Solve for coordinates in Q(zeta_f) embedded via zeta_f -> zeta_e^(e/f).
    auto de = data_for(e_);
    auto df = data_for(f);
    std::size_t m = de->phi, nf = df->phi;
    std::vector<std::vector<BigRational>> a(m, std::vector<BigRational>(nf + 1, 0));
    for (std::size_t j = 0; j < nf; ++j) {
      const auto& row = de->pow[(j * (e_ / f)) % e_];
      for (std::size_t i = 0; i < m; ++i) a[i][j] = BigRational(static_cast<long>(row[i]));
    }
    for (std::size_t i = 0; i < m; ++i) a[i][nf] = c_[i];
    std::size_t r = 0;
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < nf && r < m; ++c) {
      std::size_t p = r;
      while (p < m && a[p][c] == 0) ++p;
      if (p == m) continue;
      std::swap(a[p], a[r]);
      BigRational inv = 1 / a[r][c];
      for (auto& v : a[r]) v *= inv;
      for (std::size_t i = 0; i < m; ++i) {
        if (i == r || a[i][c] == 0) continue;
        BigRational g = a[i][c];
        for (std::size_t j = 0; j <= nf; ++j) a[i][j] -= g * a[r][j];
      }
      piv.push_back(c);
      ++r;
    }
    std::vector<BigRational> sol(nf, 0);
    for (std::size_t k = 0; k < r; ++k) sol[piv[k]] = a[k][nf];
    Cyclotomic z = from_coeffs(f, sol);
    if (z == *this) return z;
  }
  return *this;
}

std::string Cyclotomic::to_string() const {
  Cyclotomic z = reduced();
  std::string s = "cyclo(" + std::to_string(z.e_) + ";";
  for (std::size_t i = 0; i < z.c_.size(); ++i) {
    s += i ? ", " : " ";
    s += z.c_[i].get_str();
  }
  return s + ")";
}

std::string Cyclotomic::pretty() const {
  Cyclotomic z = reduced();
  std::string s;
  for (std::size_t i = 0; i < z.c_.size(); ++i) {
    const auto& c = z.c_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    BigRational a = neg ? BigRational(-c) : c;
    std::string term;
    if (i == 0) {
      term = a.get_str();
    } else {
      if (a != 1) term = a.get_str() + "*";
      term += "z" + std::to_string(z.e_);
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (s.empty())
      s = (neg ? "-" : "") + term;
    else
      s += (neg ? " - " : " + ") + term;
  }
  return s.empty() ? "0" : s;
}

Cyclotomic Cyclotomic::parse(const std::string& text) {
  auto bad = [&] { return InputError("malformed cyclotomic literal: " + text); };
  std::size_t open = text.find('('), semi = text.find(';'), close = text.rfind(')');
  if (open == std::string::npos || semi == std::string::npos || close == std::string::npos || semi < open ||
      close < semi || text.substr(0, open).find("cyclo") == std::string::npos)
    throw bad();
  std::uint64_t e;
  try {
    e = std::stoull(text.substr(open + 1, semi - open - 1));
  } catch (...) {
    throw bad();
  }
  if (e == 0) throw bad();
  std::vector<BigRational> cs;
  std::string body = text.substr(semi + 1, close - semi - 1);
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || body[i] == ',') {
      std::string tok;
      for (char ch : body.substr(start, i - start))
        if (!std::isspace(static_cast<unsigned char>(ch))) tok += ch;
      if (tok.empty()) throw bad();
      BigRational q;
      if (q.set_str(tok, 10) != 0) throw bad();
      q.canonicalize();
      cs.push_back(q);
      start = i + 1;
    }
  }
  if (cs.size() != euler_phi(e) && !(e <= 2 && cs.size() == 1)) throw bad();
  return from_coeffs(e, cs);
}

// ---- numeric embedding ----

bool ComplexBall::contains(double x, double y) const {
  BigRational dx = BigRational(x) - re, dy = BigRational(y) - im;
  return abs_q(dx) <= radius && abs_q(dy) <= radius;
}

double ComplexBall::abs_upper() const {
  BigRational a = abs_q(re) + radius, b = abs_q(im) + radius;
  BigRational s = a * a + b * b;
  mpfr_t t;
  mpfr_init2(t, 128);
  mpfr_set_q(t, s.get_mpq_t(), MPFR_RNDU);
  mpfr_sqrt(t, t, MPFR_RNDU);
  double r = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

ComplexBall Cyclotomic::to_complex(unsigned digits) const {
  if (digits < 1) throw InputError("precision must be at least one digit");
  ComplexBall out;
  out.re = 0;
  out.im = 0;
  out.radius = 0;
  BigRational l1 = 0;
  for (const auto& c : c_) l1 += abs_q(c);
  if (l1 == 0) return out;
  // Each computed cos/sin has absolute error <= 32 * 2^-w; choose w so that
  // l1 * 32 * 2^-w <= 10^-digits / 2.
  double bits_needed = std::log2(l1.get_d() + 1.0) + 6.0 + 1.0 + digits * std::log2(10.0);
  mpfr_prec_t w = static_cast<mpfr_prec_t>(std::ceil(bits_needed)) + 16;
  mpfr_t pi, th, cs, sn;
  mpfr_inits2(w, pi, th, cs, sn, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(pi, MPFR_RNDN);
  mpq_t q;
  mpq_init(q);
  BigRational two_w;
  {
    mpz_class p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(w));
    two_w = BigRational(p2);
  }
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    if (j == 0) {
      out.re += c_[j];
      continue;
    }
    mpfr_mul_ui(th, pi, 2 * j, MPFR_RNDN);
    mpfr_div_ui(th, th, static_cast<unsigned long>(e_), MPFR_RNDN);
    mpfr_sin_cos(sn, cs, th, MPFR_RNDN);
    mpfr_get_q(q, cs);
    out.re += c_[j] * BigRational(q);
    mpfr_get_q(q, sn);
    out.im += c_[j] * BigRational(q);
    out.radius += abs_q(c_[j]) * 32 / two_w;
  }
  mpq_clear(q);
  mpfr_clears(pi, th, cs, sn, static_cast<mpfr_ptr>(nullptr));
  out.re.canonicalize();
  out.im.canonicalize();
  out.radius.canonicalize();
  return out;
}

}  // namespace artin
