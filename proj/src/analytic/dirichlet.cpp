#include "artin/analytic/dirichlet.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "artin/analytic/bounds.hpp"
#include "artin/analytic/primes.hpp"
#include "artin/errors.hpp"

namespace artin {

int kronecker_symbol(std::int64_t a, std::int64_t n) {
  if (n < 1) throw InputError("kronecker_symbol: n must be positive");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    if (a % 2 == 0) return 0;
    std::int64_t r = ((a % 8) + 8) % 8;
    if (r == 3 || r == 5) result = -result;
  }
  a = ((a % n) + n) % n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1 % m, x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

struct Generator {
  std::uint64_t g, order;
};

// Generators of (Z/q)^x as a product of cyclic groups, one or two per prime power.
std::vector<Generator> unit_generators(std::uint64_t q) {
  std::vector<Generator> gens;
  for (auto [p, k] : factor_small(q)) {
    std::uint64_t pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    std::vector<Generator> local;
    if (p == 2) {
      if (k == 2) local.push_back({3, 2});
      if (k >= 3) {
        local.push_back({pk - 1, 2});
        local.push_back({5, pk / 4});
      }
    } else {
      std::uint64_t phi = pk / p * (p - 1);
      auto fs = factor_small(phi);
      for (std::uint64_t g = 2;; ++g) {
        if (g % p == 0) continue;
        bool ok = true;
        for (auto [r, e] : fs)
          if (powmod(g, phi / r, pk) == 1) ok = false;
        if (ok) {
          local.push_back({g, phi});
          break;
        }
      }
    }
    std::uint64_t rest = q / pk;
    for (auto& gen : local) {
      std::uint64_t x = gen.g;
      while (x % rest != 1 % rest) x += pk;
      gens.push_back({x, gen.order});
    }
  }
  return gens;
}

}  // namespace

DirichletCharacter::DirichletCharacter(std::uint64_t q, std::vector<long> exps, std::uint64_t L) : q_(q) {
  std::uint64_t g = L;
  for (long e : exps)
    if (e > 0) g = std::gcd(g, static_cast<std::uint64_t>(e));
  order_ = L / g;
  table_.resize(q);
  for (std::uint64_t a = 0; a < q; ++a) table_[a] = exps[a] < 0 ? -1 : static_cast<int>(exps[a] / g);
  conductor_ = q;
  for (std::uint64_t f = 1; f < q; ++f) {
    if (q % f) continue;
    bool ok = true;
    for (std::uint64_t a = 1 % f; a < q && ok; a += f)
      if (table_[a] > 0) ok = false;
    if (ok) {
      conductor_ = f;
      break;
    }
  }
}

DirichletCharacter DirichletCharacter::trivial(std::uint64_t q) {
  if (q == 0) throw InputError("modulus must be positive");
  std::vector<long> e(q);
  for (std::uint64_t a = 0; a < q; ++a) e[a] = std::gcd(a, q) == 1 ? 0 : -1;
  return DirichletCharacter(q, e, 1);
}

DirichletCharacter DirichletCharacter::kronecker(std::int64_t D) {
  std::int64_t r = ((D % 4) + 4) % 4;
  if (D == 0 || (r != 0 && r != 1)) throw InputError("kronecker character needs D = 0 or 1 mod 4, D != 0");
  if (D == 1) return trivial(1);
  std::uint64_t q = static_cast<std::uint64_t>(D < 0 ? -D : D);
  std::vector<long> e(q, -1);
  for (std::uint64_t a = 1; a < q; ++a) {
    int k = kronecker_symbol(D, static_cast<std::int64_t>(a));
    e[a] = k == 0 ? -1 : (k == 1 ? 0 : 1);
  }
  return DirichletCharacter(q, e, 2);
}

std::vector<DirichletCharacter> DirichletCharacter::all(std::uint64_t q) {
  if (q == 0) throw InputError("modulus must be positive");
  auto gens = unit_generators(q);
  std::uint64_t L = 1;
  for (auto& g : gens) L = std::lcm(L, g.order);
  // discrete logs: residue -> exponent tuple
  std::vector<std::vector<std::uint64_t>> dlog(q);
  std::vector<std::uint64_t> tup(gens.size(), 0);
  for (;;) {
    std::uint64_t x = 1 % q;
    for (std::size_t j = 0; j < gens.size(); ++j)
      x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * powmod(gens[j].g, tup[j], q) % q);
    dlog[x] = tup;
    std::size_t j = 0;
    while (j < gens.size() && ++tup[j] == gens[j].order) tup[j++] = 0;
    if (j == gens.size()) break;
  }
  std::vector<DirichletCharacter> out;
  std::vector<std::uint64_t> a(gens.size(), 0);
  for (;;) {
    std::vector<long> e(q, -1);
    for (std::uint64_t r = 0; r < q; ++r) {
      if (std::gcd(r, q) != 1) continue;
      std::uint64_t s = 0;
      for (std::size_t j = 0; j < gens.size(); ++j) s = (s + a[j] * dlog[r][j] % gens[j].order * (L / gens[j].order)) % L;
      e[r] = static_cast<long>(s);
    }
    out.push_back(DirichletCharacter(q, e, L));
    std::size_t j = 0;
    while (j < gens.size() && ++a[j] == gens[j].order) a[j++] = 0;
    if (j == gens.size()) break;
  }
  return out;
}

std::vector<DirichletCharacter> DirichletCharacter::primitive(std::uint64_t q) {
  std::vector<DirichletCharacter> out;
  for (auto& c : all(q))
    if (c.is_primitive()) out.push_back(c);
  return out;
}

Cyclotomic DirichletCharacter::value(std::uint64_t a) const {
  int k = exponent(a);
  if (k < 0) return Cyclotomic(0);
  return Cyclotomic::zeta(order_, k);
}

std::string DirichletCharacter::label() const {
  std::ostringstream os;
  os << q_ << ":[";
  for (std::size_t i = 0; i < table_.size(); ++i) os << (i ? "," : "") << table_[i];
  os << "]/" << order_;
  return os.str();
}

Cyclotomic dirichlet_inner_product(const DirichletCharacter& a, const DirichletCharacter& b) {
  std::uint64_t L = std::lcm(a.modulus(), b.modulus());
  std::uint64_t o = std::lcm(a.order(), b.order());
  std::vector<long> counts(o, 0);
  std::uint64_t units = 0;
  for (std::uint64_t r = 0; r < L; ++r) {
    if (std::gcd(r, L) != 1) continue;
    ++units;
    int ea = a.exponent(r), eb = b.exponent(r);
    std::uint64_t k = (ea * (o / a.order()) + o * o - eb * (o / b.order())) % o;
    ++counts[k];
  }
  return Cyclotomic::from_exponent_counts(o, counts) * BigRational(1, units);
}

CharSum char_sum(const DirichletCharacter& chi, std::uint64_t H) {
  std::vector<long> counts(chi.order(), 0);
  for (std::uint64_t p : sieve(H)) {
    int e = chi.exponent(p);
    if (e >= 0) ++counts[e];
  }
  CharSum out;
  out.exact = Cyclotomic::from_exponent_counts(chi.order(), counts);
  out.enclosure = out.exact.to_complex(30);
  return out;
}

Interval abs_enclosure(const ComplexBall& z) {
  Interval re = abs(Interval::from_rational(z.re));
  Interval im = abs(Interval::from_rational(z.im));
  Interval r = Interval::from_rational(z.radius);
  Interval hi = sqrt(sqr(re + r) + sqr(im + r));
  Interval rl = re - r, il = im - r;
  Interval lo2 = sqr(Interval(std::max(0.0, rl.lo))) + sqr(Interval(std::max(0.0, il.lo)));
  return {sqrt(lo2).lo, hi.hi};
}

std::uint64_t FrobeniusKind::group_order() const {
  if (type == cyclotomic) return euler_phi(static_cast<std::uint64_t>(param));
  return param == 1 ? 1 : 2;
}

std::string FrobeniusKind::str() const {
  return (type == cyclotomic ? "cyclotomic(" : "kronecker(") + std::to_string(param) + ")";
}

FrobeniusClass frobenius_oracle(const FrobeniusKind& kind, std::uint64_t p) {
  FrobeniusClass c;
  if (kind.type == FrobeniusKind::cyclotomic) {
    if (kind.param < 1) throw InputError("cyclotomic conductor must be positive");
    std::uint64_t m = static_cast<std::uint64_t>(kind.param);
    if (m > 1 && m % p == 0) {
      c.ramified = true;
      return c;
    }
    c.label = static_cast<std::int64_t>(p % m);
    return c;
  }
  int k = kronecker_symbol(kind.param, static_cast<std::int64_t>(p));
  c.ramified = k == 0;
  c.label = k;
  return c;
}

PiCReport pi_C(const FrobeniusKind& kind, std::int64_t cls, std::uint64_t H, const PiCParams& params) {
  if (H < 2) throw InputError("pi_C needs H >= 2");
  if (kind.type == FrobeniusKind::cyclotomic) {
    if (kind.param < 1) throw InputError("cyclotomic conductor must be positive");
    std::int64_t m = kind.param;
    bool ok = m == 1 ? cls == 0 : (cls >= 0 && cls < m && std::gcd(cls, m) == 1);
    if (!ok) throw InputError("class label is not a unit mod m");
  } else {
    std::int64_t r = ((kind.param % 4) + 4) % 4;
    if (kind.param == 0 || (r != 0 && r != 1)) throw InputError("discriminant must be 0 or 1 mod 4");
    if (cls != 1 && cls != -1) throw InputError("kronecker class must be +1 or -1");
    if (kind.param == 1 && cls != 1) throw InputError("trivial extension has only the identity class");
  }
  PiCReport rep;
  auto ps = sieve(H);
  rep.pi = ps.size();
  for (std::uint64_t p : ps) {
    auto f = frobenius_oracle(kind, p);
    if (!f.ramified && f.label == cls) ++rep.count;
  }
  rep.expected = BigRational(static_cast<unsigned long>(rep.pi), static_cast<unsigned long>(kind.group_order()));
  rep.expected.canonicalize();
  rep.deviation = BigRational(static_cast<unsigned long>(rep.count)) - rep.expected;
  Interval c = c_epsilon_interval(params.eps, params.deg_KQ);
  Interval lh = log(Interval(static_cast<double>(H)));
  rep.bound = Interval(static_cast<double>(H)) / lh * exp(-(c * sqrt(lh)));
  double ld = params.Delta_K > 1 ? std::log(params.Delta_K) : 0.0;
  rep.gate = std::pow(ld, 2 + params.deg_KF / (2 * params.eps));
  rep.applicable = H >= 100 && static_cast<double>(H) >= rep.gate;
  rep.pass = rep.applicable && abs(Interval::from_rational(rep.deviation)).hi <= rep.bound.lo;
  return rep;
}

}  // namespace artin
