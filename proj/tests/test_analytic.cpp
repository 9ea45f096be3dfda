#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "artin/analytic/bounds.hpp"
#include "artin/analytic/dirichlet.hpp"
#include "artin/analytic/primes.hpp"
#include "artin/analytic/smoothing.hpp"
#include "artin/analytic/sums.hpp"
#include "artin/errors.hpp"

using namespace artin;

namespace {

bool naive_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool naive_squarefree(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return true;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::uint64_t phi(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t a = 1; a <= n; ++a) c += std::gcd(a, n) == 1;
  return c;
}

int mobius(std::uint64_t n) {
  int m = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  if (n > 1) m = -m;
  return m;
}

// smallest d | q such that chi is trivial on units that are 1 mod d
std::uint64_t conductor_oracle(const DirichletCharacter& chi) {
  std::uint64_t q = chi.modulus();
  for (std::uint64_t d = 1; d <= q; ++d) {
    if (q % d) continue;
    bool ok = true;
    for (std::uint64_t a = 1; a < q && ok; ++a)
      if (std::gcd(a, q) == 1 && a % d == 1 % d && chi.exponent(a) != 0) ok = false;
    if (ok) return d;
  }
  return q;
}

void expect_encloses(const Interval& iv, double x, double slack = 0) {
  EXPECT_LE(iv.lo, x + slack) << iv.str(17) << " vs " << x;
  EXPECT_GE(iv.hi, x - slack) << iv.str(17) << " vs " << x;
}

// log value of a bound, checked against a hand substitution
void expect_log_close(BoundKind k, const BoundParams& p, double log_expected, double rel = 1e-12) {
  BoundValue v = rhs_bound(k, p);
  EXPECT_NEAR(v.log_value.mid(), log_expected, rel * std::max(1.0, std::fabs(log_expected))) << bound_name(k);
}

template <class F>
std::string gate_of(F&& f) {
  try {
    f();
  } catch (const RangeError& e) {
    return e.gate();
  }
  return "";
}

}  // namespace

TEST(Interval, BasicsAreOutward) {
  Interval a(1.0, 2.0), b(-3.0, 0.5);
  Interval s = a + b;
  EXPECT_LE(s.lo, -2.0);
  EXPECT_GE(s.hi, 2.5);
  Interval p = a * b;
  EXPECT_LE(p.lo, -6.0);
  EXPECT_GE(p.hi, 1.0);
  Interval third = Interval(1.0) / Interval(3.0);
  EXPECT_TRUE(third.lo < third.hi);
  expect_encloses(third * Interval(3.0), 1.0);
  expect_encloses(exp(Interval(1.0)), 2.718281828459045);
  expect_encloses(log(e_interval()), 1.0);
  expect_encloses(sqrt(Interval(2.0)) * sqrt(Interval(2.0)), 2.0);
  expect_encloses(pi_interval(), 3.141592653589793);
  expect_encloses(erf(Interval(0.5)) + erfc(Interval(0.5)), 1.0);
  expect_encloses(log_add(Interval(0.0), Interval(0.0)), std::log(2.0));
  EXPECT_TRUE(Interval(1.0).certainly_lt(Interval(1.0 + 1e-9)));
  EXPECT_FALSE(Interval(0.0, 2.0).certainly_le(Interval(1.0)));
}

TEST(Primes, SieveMatchesTrialDivision) {
  auto ps = sieve(2000);
  std::vector<std::uint64_t> naive;
  for (std::uint64_t n = 0; n <= 2000; ++n)
    if (naive_prime(n)) naive.push_back(n);
  EXPECT_EQ(ps, naive);
  EXPECT_TRUE(sieve(1).empty());
  EXPECT_EQ(prime_pi(10), 4u);
  EXPECT_EQ(prime_pi(100), 25u);
  EXPECT_EQ(prime_pi(1000000), 78498u);
}

TEST(Primes, SquarefreeSegment) {
  auto ps = sieve(200);
  std::vector<std::uint8_t> flags;
  squarefree_segment(30000, 40000, ps, flags);
  ASSERT_EQ(flags.size(), 10000u);
  for (std::uint64_t i = 0; i < flags.size(); ++i) ASSERT_EQ(flags[i] != 0, naive_squarefree(30000 + i)) << 30000 + i;
  squarefree_segment(1, 50, ps, flags);
  EXPECT_TRUE(flags[0]);  // 1
  EXPECT_FALSE(flags[3]);  // 4
}

TEST(Primes, FactorSmall) {
  auto f = factor_small(360);
  EXPECT_EQ(f, (std::vector<std::pair<std::uint64_t, int>>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_TRUE(factor_small(1).empty());
}

TEST(Dirichlet, KroneckerMatchesEuler) {
  for (std::uint64_t p : sieve(200)) {
    if (p == 2) continue;
    for (std::int64_t a = -30; a <= 30; ++a) {
      std::uint64_t r = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(p));
      int expect = r == 0 ? 0 : (powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1);
      ASSERT_EQ(kronecker_symbol(a, static_cast<std::int64_t>(p)), expect) << a << "/" << p;
    }
  }
  // multiplicative in the bottom argument
  for (std::int64_t a : {-7, -4, 5, 8, 12})
    for (std::int64_t m = 1; m < 30; ++m)
      for (std::int64_t n = 1; n < 30; ++n)
        ASSERT_EQ(kronecker_symbol(a, m * n), kronecker_symbol(a, m) * kronecker_symbol(a, n));
  EXPECT_EQ(kronecker_symbol(5, 2), -1);
  EXPECT_EQ(kronecker_symbol(1, 2), 1);
}

TEST(Dirichlet, GroupStructure) {
  for (std::uint64_t q = 1; q <= 40; ++q) {
    auto all = DirichletCharacter::all(q);
    ASSERT_EQ(all.size(), phi(q)) << q;
    EXPECT_TRUE(all.front().is_principal());
    for (const auto& chi : all) {
      ASSERT_EQ(chi.conductor(), conductor_oracle(chi)) << chi.label();
      for (std::uint64_t a = 1; a < q; ++a)
        for (std::uint64_t b = 1; b < q; ++b) {
          int ea = chi.exponent(a), eb = chi.exponent(b), eab = chi.exponent(a * b % q);
          if (ea < 0 || eb < 0) {
            ASSERT_EQ(eab, -1);
          } else {
            ASSERT_EQ(static_cast<std::uint64_t>(eab), (static_cast<std::uint64_t>(ea + eb)) % chi.order());
          }
        }
    }
    // primitive count is the Dirichlet convolution mu * phi
    long expect = 0;
    for (std::uint64_t d = 1; d <= q; ++d)
      if (q % d == 0) expect += mobius(q / d) * static_cast<long>(phi(d));
    EXPECT_EQ(static_cast<long>(DirichletCharacter::primitive(q).size()), expect) << q;
  }
}

TEST(Dirichlet, OrthogonalityIsExact) {
  std::vector<DirichletCharacter> prim;
  for (std::uint64_t q = 1; q <= 24; ++q)
    for (auto& c : DirichletCharacter::primitive(q)) prim.push_back(c);
  for (std::size_t i = 0; i < prim.size(); ++i)
    for (std::size_t j = 0; j < prim.size(); ++j) {
      Cyclotomic ip = dirichlet_inner_product(prim[i], prim[j]);
      if (i == j) {
        ASSERT_EQ(ip, Cyclotomic(1));
      } else {
        ASSERT_TRUE(ip.is_zero()) << prim[i].label() << " " << prim[j].label();
      }
    }
}

TEST(Dirichlet, CharSumExamples) {
  auto c4 = DirichletCharacter::kronecker(-4);
  EXPECT_EQ(c4.conductor(), 4u);
  EXPECT_EQ(char_sum(c4, 10).exact, Cyclotomic(-1));
  EXPECT_EQ(char_sum(DirichletCharacter::trivial(1), 10).exact, Cyclotomic(4));
  auto mod3 = DirichletCharacter::all(3);
  EXPECT_EQ(char_sum(mod3[1], 7).exact, Cyclotomic(-1));
  // enclosure contains the exact value
  auto s = char_sum(DirichletCharacter::all(7)[1], 1000);
  ComplexBall b = s.exact.to_complex(20);
  Interval a = abs_enclosure(s.enclosure);
  EXPECT_LE(a.lo, b.abs_upper());
}

TEST(Dirichlet, FrobeniusAndPiC) {
  FrobeniusKind gauss{FrobeniusKind::kronecker, -4};
  EXPECT_TRUE(frobenius_oracle(gauss, 2).ramified);
  EXPECT_EQ(frobenius_oracle(gauss, 5).label, 1);
  EXPECT_EQ(frobenius_oracle(gauss, 7).label, -1);
  FrobeniusKind z5{FrobeniusKind::cyclotomic, 5};
  EXPECT_EQ(frobenius_oracle(z5, 13).label, 3);
  EXPECT_TRUE(frobenius_oracle(z5, 5).ramified);

  EXPECT_EQ(pi_C(gauss, -1, 20).count, 4u);
  auto r = pi_C(z5, 2, 100);
  EXPECT_EQ(r.count, 7u);
  EXPECT_EQ(r.deviation, BigRational(7) - BigRational(25, 4));
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.pass);
  FrobeniusKind triv{FrobeniusKind::cyclotomic, 1};
  EXPECT_EQ(pi_C(triv, 0, 1000).deviation, BigRational(0));
  EXPECT_FALSE(pi_C(gauss, 1, 50).applicable);
  EXPECT_THROW(pi_C(z5, 5, 100), InputError);
}

TEST(Constants, CEpsilonExamples) {
  EXPECT_DOUBLE_EQ(c_epsilon(0.01, 1), 1.0 / 180);
  EXPECT_DOUBLE_EQ(c_epsilon(1, 2), 1.0 / (29 * std::sqrt(2.0)));
  EXPECT_DOUBLE_EQ(c_epsilon(0.81, 1), 1.0 / 29);
  expect_encloses(c_epsilon_interval(0.01, 1), 1.0 / 180, 1e-18);
  EXPECT_THROW(c_epsilon(0, 1), InputError);
  EXPECT_THROW(c_epsilon(-1, 1), InputError);
}

TEST(Constants, CEpsilonMonotone) {
  for (double e = 0.01; e < 3; e *= 1.3)
    for (int k = 1; k < 40; ++k) {
      ASSERT_LE(c_epsilon(e, k), c_epsilon(e * 1.3, k));
      ASSERT_GE(c_epsilon(e, k), c_epsilon(e, k + 1));
    }
}

TEST(Smoothing, EtaAtLeastOne) {
  for (double H : {3.0, 10.0, 100.0}) {
    double L = std::log(H);
    for (int i = 0; i <= 400; ++i) {
      double x = -L + 2 * L * i / 400;
      ASSERT_GE(eta(H, x), 1.0) << H << " " << x;
      ASSERT_GE(eta_enclosure(H, x).lo, 1.0);
    }
  }
}

TEST(Smoothing, EtaQuadratureInsideEnclosure) {
  for (double H : {3.0, 20.0, 1e4})
    for (double x : {-12.0, -1.0, 0.0, 0.7, 5.0, 30.0}) {
      Interval enc = eta_enclosure(H, x);
      double q = eta(H, x);
      EXPECT_NEAR(q, enc.mid(), 1e-12 + 1e-12 * q) << H << " " << x;
    }
}

TEST(Smoothing, EtaHatClosedFormMatchesQuadrature) {
  double H = std::exp(1.0);
  EXPECT_NEAR(eta_hat(H, 0).real(), 2 * std::exp(1.0) * std::sqrt(M_PI) * std::log(H), 1e-12);
  EXPECT_NEAR(eta_hat(1e5, 0).real(), 2 * std::exp(1.0) * std::sqrt(M_PI) * std::log(1e5), 1e-10);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> lh(1.0, 8.0), sd(-6.0, 6.0);
  for (int i = 0; i < 20; ++i) {
    double h = std::exp(lh(rng)), s = sd(rng);
    EXPECT_NEAR(eta_hat(h, s).real(), eta_hat_quadrature(h, s), 1e-9) << h << " " << s;
    EXPECT_NEAR(eta_hat(h, s).imag(), 0.0, 1e-12);
  }
  EXPECT_NEAR(eta_hat(H, 2).real(), 1.6116877258, 1e-9);
}

TEST(Bounds, HandSubstitutions) {
  BoundParams p;
  p.H = 100;
  p.sum_abs = 2;
  double lt = std::log(std::pow(4 + std::log(100.0), 2) * 100 * 4);
  expect_log_close(BoundKind::trivial_53, p, lt);
  EXPECT_NEAR(rhs_bound(BoundKind::trivial_53, p).value(), 29619.58, 0.01);

  BoundParams s;
  s.Delta = 1e6;
  s.eps = 0.1;
  s.d = 2;
  double ld = std::log(1e6), lld = std::log(ld), delta = 1600 / std::sqrt(lld);
  expect_log_close(BoundKind::sparse_16, s, 0.1 * (1 + delta) * ld + 1600 * lld);

  BoundParams c;
  c.Q = 100;
  c.delta = 0.25;
  c.sigma = 1;
  expect_log_close(BoundKind::convexity_42, c, std::log(9 * std::exp(1.0) * 4 * std::pow(100.0, 0.125) * 3));

  BoundParams f;
  f.sigma = 1;
  f.sigma0 = 0.75;
  expect_log_close(BoundKind::lfs_44, f, std::log(3 + 2 * (std::pow(2.0, 0.25) - 1) / 0.25));

  BoundParams h;
  h.Q = 100;
  h.M = 100;
  h.log_H = 1000.0;
  h.num_E = 100;
  EXPECT_EQ(holder_t(h), static_cast<long>(std::ceil((std::log(1e6) + 100 * std::sqrt(std::log(1e4))) / 1000)));
  EXPECT_EQ(holder_t(h), 1);
  EXPECT_NEAR(holder_log_M0(h).mid(), std::log(1e4 / 100) - 60 * std::log(1000 + std::log(100.0) + 2 * std::log(100.0)),
              1e-10);

  // diagonal-only E: M0 = M / (log H M Q^2)^60
  BoundParams g = h;
  g.M = std::exp(500.0);
  g.num_E = g.M;
  auto hp = holder_params(g);
  EXPECT_NEAR(hp.log_M0.mid(), 500 - 60 * std::log(1000 + 500 + 2 * std::log(100.0)), 1e-9);
  EXPECT_GT(hp.t, 0);

  BoundParams a;
  a.t = 3;
  a.H = 100;
  A0tData d;
  d.H = 100;
  d.t = 3;
  for (auto q : sieve(100)) d.b[q] = 1;
  Interval bound = a0t_eval(d, A0tMode::prime_support_bound);
  EXPECT_NEAR(bound.mid(), 3 * std::sqrt(3.0) / std::sqrt(std::log(100.0)), 1e-12);
}

TEST(Bounds, GatesFireAtTheBoundary) {
  BoundParams p;
  p.H = 1;
  EXPECT_EQ(gate_of([&] { rhs_bound(BoundKind::trivial_53, p); }), "");
  p.H = std::nextafter(1.0, 0.0);
  EXPECT_EQ(gate_of([&] { rhs_bound(BoundKind::trivial_53, p); }), "H>=1");

  BoundParams c;
  c.delta = 0.5;
  EXPECT_EQ(gate_of([&] { rhs_bound(BoundKind::convexity_42, c); }), "0<delta<1/2");
  c.delta = 0.4999;
  EXPECT_EQ(gate_of([&] { rhs_bound(BoundKind::convexity_42, c); }), "");

  BoundParams l;
  l.delta = 0.25;
  EXPECT_EQ(gate_of([&] { rhs_bound(BoundKind::line_45, l); }), "");
  l.delta = std::nextafter(0.25, 1.0);
  EXPECT_EQ(gate_of([&] { rhs_bound(BoundKind::line_45, l); }), "0<delta<=1/4");

  // bilinear: Q > 100 strictly, then H >= Q e^16 at n = d = 1
  BoundParams b;
  b.Q = 100;
  b.M = 101;
  b.log_H = 100.0;
  EXPECT_EQ(gate_of([&] { rhs_bound(BoundKind::bilinear_52, b); }), "Q>100");
  b.Q = 101;
  EXPECT_EQ(gate_of([&] { rhs_bound(BoundKind::bilinear_52, b); }), "");
  b.M = 100;
  EXPECT_EQ(gate_of([&] { rhs_bound(BoundKind::bilinear_52, b); }), "M>100");
  b.M = 101;
  b.log_H = std::log(101.0) + 16 - 1e-9;
  EXPECT_EQ(gate_of([&] { rhs_bound(BoundKind::bilinear_52, b); }), "H>=Q^d*e^(16nd^4)");
  b.log_H = std::log(101.0) + 16 + 1e-9;
  EXPECT_EQ(gate_of([&] { rhs_bound(BoundKind::bilinear_52, b); }), "");

  BoundParams hs;
  hs.Q = 101;
  hs.M = 101;
  hs.log_H = 200.0;
  hs.t = 0;
  EXPECT_EQ(gate_of([&] { rhs_bound(BoundKind::holder_54, hs); }), "t>=1");
  hs.t = 1;
  EXPECT_EQ(gate_of([&] { rhs_bound(BoundKind::holder_54, hs); }), "");

  BoundParams t;
  t.Q = 99;
  EXPECT_EQ(gate_of([&] { rhs_bound(BoundKind::thm62_c, t); }), "Q>=100");
  t.Q = 100;
  EXPECT_EQ(gate_of([&] { rhs_bound(BoundKind::thm62_c, t); }), "");
  t.H = 99.9;
  EXPECT_EQ(gate_of([&] { rhs_bound(BoundKind::thm62_cH, t); }), "H>=100");

  BoundParams s;
  s.d = 1;
  EXPECT_EQ(gate_of([&] { rhs_bound(BoundKind::sparse_16, s); }), "d>=2");

  // #E = M^2 forces M0 <= 1
  BoundParams e;
  e.Q = 100;
  e.M = 1e6;
  e.num_E = 1e12;
  e.log_H = 1000.0;
  EXPECT_EQ(gate_of([&] { holder_params(e); }), "M0>1");

  A0tData d;
  d.H = 99;
  d.b[2] = 1;
  EXPECT_EQ(gate_of([&] { a0t_eval(d, A0tMode::prime_support_bound); }), "H>=100");
  EXPECT_THROW(parse_bound_kind("nope"), InputError);
}

TEST(Bounds, PositiveOnGatedLattice) {
  for (double Q : {100.0, 1e3, 1e6})
    for (double M : {100.0, 1e4})
      for (double lh : {std::log(100.0), 50.0, 500.0}) {
        BoundParams p;
        p.Q = Q;
        p.M = M;
        p.log_H = lh;
        for (BoundKind k : {BoundKind::thm62_c, BoundKind::thm62_cH, BoundKind::trivial_53, BoundKind::convexity_42,
                            BoundKind::lfs_44, BoundKind::line_45, BoundKind::circle_45}) {
          BoundValue v = rhs_bound(k, p);
          ASSERT_TRUE(std::isfinite(v.log_value.lo)) << bound_name(k);
          ASSERT_TRUE(v.enclosure().lo >= 0);
        }
      }
}

TEST(Sums, A0tExamples) {
  A0tData d1;
  d1.H = 10;
  for (auto q : sieve(10)) d1.b[q] = 1;
  expect_encloses(a0t_eval(d1, A0tMode::exact_bruteforce), std::sqrt(0.4));
  A0tData z;
  z.H = 100;
  z.t = 2;
  Interval zero = a0t_eval(z, A0tMode::exact_bruteforce);
  EXPECT_EQ(zero.hi, 0.0);
  // exact never exceeds the prime-support bound
  for (long t : {1L, 2L, 3L}) {
    A0tData d;
    d.H = 120;
    d.t = t;
    for (auto q : sieve(120)) d.b[q] = (q % 3 == 1) ? -1 : 1;
    EXPECT_LE(a0t_eval(d, A0tMode::exact_bruteforce).hi, a0t_eval(d, A0tMode::prime_support_bound).lo) << t;
  }
  A0tData big;
  big.H = 1000;
  big.t = 4;
  for (auto q : sieve(1000)) big.b[q] = 1;
  EXPECT_THROW(a0t_eval(big, A0tMode::exact_bruteforce, 1000), CapacityError);
}

TEST(Sums, Squarefull) {
  auto r = squarefull_sums(50);
  EXPECT_EQ(r.list, (std::vector<std::uint64_t>{1, 4, 8, 9, 16, 25, 27, 32, 36, 49}));
  auto one = squarefull_sums(1);
  EXPECT_EQ(one.list, std::vector<std::uint64_t>{1});
  expect_encloses(one.sum_inv_sqrt, 1.0);
  auto big = squarefull_sums(1000000);
  EXPECT_TRUE(big.zeta_bound_ok);
  EXPECT_TRUE(big.log_bound_ok);
  EXPECT_LE(big.sum_inv.hi, 2.0);
  // oracle: every listed value has all exponents >= 2
  for (auto v : big.list)
    for (auto [p, e] : factor_small(v)) ASSERT_GE(e, 2) << v;
  std::size_t count = 0;
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    bool ok = true;
    for (auto [p, e] : factor_small(n)) ok &= e >= 2;
    count += ok;
  }
  EXPECT_EQ(squarefull_sums(5000).list.size(), count);
}

TEST(Sums, BilinearExamples) {
  auto c4 = DirichletCharacter::kronecker(-4);
  auto r = bilinear_check({c4}, {1.0}, 100);
  std::size_t odd_sqfree = 0;
  for (std::uint64_t a = 1; a <= 100; ++a) odd_sqfree += (a % 2 == 1) && naive_squarefree(a);
  expect_encloses(r.lhs, static_cast<double>(odd_sqfree));
  EXPECT_TRUE(r.trivial_pass);
  EXPECT_FALSE(r.thm52.has_value());
  EXPECT_EQ(r.thm52_gate, "Q>100");

  auto c3 = DirichletCharacter::primitive(3).at(0);
  auto two = bilinear_check({c3, c4}, {1.0, -0.5}, 100);
  EXPECT_TRUE(two.trivial_pass);
  EXPECT_EQ(two.E.size(), 2u);  // only the diagonal
  EXPECT_LE(two.trivial.value(), 2.97e4);

  auto zero = bilinear_check({c3, c4}, {0.0, 0.0}, 100);
  EXPECT_LE(zero.lhs.hi, 1e-300);

  EXPECT_THROW(bilinear_check({c4, c4}, {1.0, 1.0}, 100), InputError);
  EXPECT_THROW(bilinear_check({DirichletCharacter::all(8).at(1)}, {1.0}, 100), InputError);
  EXPECT_THROW(bilinear_check({c4}, {1.0}, 1000, 100), CapacityError);
}

TEST(Sums, EpsBadScan) {
  auto c4 = DirichletCharacter::kronecker(-4);
  double gate = eps_bad_gate(4, 2, 0.5);
  EXPECT_NEAR(gate, std::pow(std::log(4.0), 4.0), 1e-9);
  std::vector<std::uint64_t> grid;
  for (std::uint64_t H = 100; H <= 100000; H += 997) grid.push_back(H);
  auto rep = eps_bad_scan(character_sum_oracle(c4, 100000), 4, 2, 2, 0.5, grid);
  EXPECT_FALSE(rep.flagged);
  EXPECT_GT(rep.max_ratio, 0);
  EXPECT_LT(rep.max_ratio, 1);

  std::vector<std::uint64_t> g2{100, 1000, 10000};
  auto syn = eps_bad_scan(prime_count_oracle(10000), 4, 2, 2, 0.5, g2);
  EXPECT_TRUE(syn.flagged);
  EXPECT_EQ(syn.first_flagged, 100u);

  std::vector<std::uint64_t> low{3};
  EXPECT_THROW(eps_bad_scan(prime_count_oracle(100), 4, 2, 2, 0.5, low), RangeError);
  EXPECT_THROW(eps_bad_scan(prime_count_oracle(100), 4, 1, 1, 0.5, g2), InputError);
  EXPECT_THROW(eps_bad_scan(prime_count_oracle(100), 4, 2, 2, 0.5, {}), InputError);
}

TEST(Sums, SmoothedTailBoundDominatesDirectSum) {
  double H = 20;
  double X = std::floor(H * std::exp(2.0));
  double direct = 0;
  for (std::uint64_t a = static_cast<std::uint64_t>(X) + 1; a <= 2000000; ++a) direct += eta(H, std::log(static_cast<double>(a)));
  Interval tb = smoothed_tail_bound(H, X, 1.0);
  EXPECT_GE(tb.hi, direct);
  EXPECT_LT(tb.hi, 10 * direct + 1);
}

TEST(Sums, SmoothedBudget) {
  AcceptableMultFn f;
  f.chi = DirichletCharacter::kronecker(-4);
  double Q = smoothed_min_Q(f);
  double H = smoothed_min_H(Q, 1);
  EXPECT_NEAR(std::log(H) - std::log(Q) / 2, 16, 1e-6);
  EXPECT_THROW(smoothed_sum_check(f, H), CapacityError);
  EXPECT_THROW(smoothed_sum_check(f, std::sqrt(Q) * 2), RangeError);

  AcceptableMultFn bad;
  bad.overrides[4] = Cyclotomic(1);
  EXPECT_THROW(bad.validate(), InputError);
  AcceptableMultFn g;
  g.chi = f.chi;
  g.overrides[3] = Cyclotomic(1);
  EXPECT_EQ(g.at(15), Cyclotomic(1));  // f(3) f(5) = 1 * 1
  EXPECT_EQ(g.at(9), Cyclotomic(0));   // squarefree support
  EXPECT_EQ(f.at(7), Cyclotomic(-1));
}
