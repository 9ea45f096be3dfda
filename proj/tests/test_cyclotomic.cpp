#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "artin/cyclotomic.hpp"
#include "artin/errors.hpp"

using namespace artin;

namespace {

Cyclotomic random_element(std::mt19937_64& rng, std::uint64_t e) {
  std::uniform_int_distribution<long> num(-7, 7), den(1, 5);
  Cyclotomic x;
  for (std::uint64_t k = 0; k < e; ++k)
    if (rng() % 3 == 0) x += Cyclotomic::zeta(e, static_cast<std::int64_t>(k)) * BigRational(num(rng), den(rng));
  return x;
}

double to_double(const BigRational& q) { return q.get_d(); }

}  // namespace

TEST(Cyclotomic, ArithExamples) {
  EXPECT_EQ(Cyclotomic::zeta(3) + Cyclotomic::zeta(3, 2), Cyclotomic(-1));
  EXPECT_EQ(Cyclotomic::zeta(4).conjugate(), -Cyclotomic::zeta(4));
  EXPECT_EQ(Cyclotomic::zeta(5) * Cyclotomic::zeta(5, 4), Cyclotomic(1));
}

TEST(Cyclotomic, GaloisNeedsUnit) {
  EXPECT_THROW(Cyclotomic::zeta(6).galois(3), InputError);
  EXPECT_THROW(Cyclotomic::zeta(4).galois(2), InputError);
  EXPECT_NO_THROW(Cyclotomic::zeta(4).galois(3));
}

TEST(Cyclotomic, CanonicalFormIsUnique) {
  // zeta_6 = -zeta_3^2, so both spellings must compare and print equal
  Cyclotomic a = Cyclotomic::zeta(6);
  Cyclotomic b = -Cyclotomic::zeta(3, 2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.to_string(), b.to_string());
  EXPECT_EQ(a.reduced().conductor(), 3u);
  // sum of all 12th roots of unity is zero
  Cyclotomic s;
  for (int k = 0; k < 12; ++k) s += Cyclotomic::zeta(12, k);
  EXPECT_TRUE(s.is_zero());
  // zeta_8 + zeta_8^7 = sqrt 2 squared is 2
  Cyclotomic r2 = Cyclotomic::zeta(8) + Cyclotomic::zeta(8, 7);
  EXPECT_EQ(r2 * r2, Cyclotomic(2));
  EXPECT_FALSE(r2.is_rational());
}

TEST(Cyclotomic, MixedConductorsPromote) {
  Cyclotomic x = Cyclotomic::zeta(4) + Cyclotomic::zeta(3);
  EXPECT_EQ(x.conductor() % 12, 0u);
  EXPECT_EQ(x - Cyclotomic::zeta(3), Cyclotomic::zeta(4));
  EXPECT_EQ(Cyclotomic::zeta(4) * Cyclotomic::zeta(3), Cyclotomic::zeta(12, 7));
}

TEST(Cyclotomic, SerializationRoundTrip) {
  std::mt19937_64 rng(7);
  for (std::uint64_t e : {1u, 2u, 5u, 12u, 15u, 24u, 60u}) {
    for (int rep = 0; rep < 10; ++rep) {
      Cyclotomic x = random_element(rng, e);
      EXPECT_EQ(Cyclotomic::parse(x.to_string()), x) << x.to_string();
    }
  }
  EXPECT_EQ(Cyclotomic(BigRational(-3, 4)).to_string(), "cyclo(1; -3/4)");
  EXPECT_THROW(Cyclotomic::parse("cyclo(3; 1, 2"), InputError);
  EXPECT_THROW(Cyclotomic::parse("zeta3"), InputError);
}

TEST(Cyclotomic, FieldAxiomsRandomized) {
  std::mt19937_64 rng(20240917);
  for (int rep = 0; rep < 200; ++rep) {
    // conductors dividing 60 keep every lcm <= 60
    const std::uint64_t divs[] = {1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60};
    std::uint64_t e1 = divs[rng() % 12], e2 = divs[rng() % 12], e3 = divs[rng() % 12];
    Cyclotomic a = random_element(rng, e1), b = random_element(rng, e2), c = random_element(rng, e3);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ((a * b).conjugate(), a.conjugate() * b.conjugate());
  }
}

TEST(Cyclotomic, GaloisComposes) {
  std::mt19937_64 rng(3);
  for (std::uint64_t e : {5u, 8u, 9u, 12u, 20u, 21u, 60u}) {
    Cyclotomic x = random_element(rng, e);
    for (std::uint64_t k = 1; k < e; ++k) {
      if (std::gcd(k, e) != 1) continue;
      for (std::uint64_t l = 1; l < e; ++l) {
        if (std::gcd(l, e) != 1) continue;
        ASSERT_EQ(x.promote(e).galois(static_cast<std::int64_t>(k)).galois(static_cast<std::int64_t>(l)),
                  x.promote(e).galois(static_cast<std::int64_t>((k * l) % e)));
      }
    }
    // galois is a ring map
    Cyclotomic y = random_element(rng, e);
    std::int64_t k = 2;
    while (std::gcd<std::uint64_t>(static_cast<std::uint64_t>(k), e) != 1) ++k;
    EXPECT_EQ((x * y).promote(e).galois(k), x.promote(e).galois(k) * y.promote(e).galois(k));
    EXPECT_EQ((x + y).promote(e).galois(k), x.promote(e).galois(k) + y.promote(e).galois(k));
  }
}

TEST(Cyclotomic, ToComplexExamples) {
  ComplexBall i = Cyclotomic::zeta(4).to_complex(30);
  EXPECT_TRUE(i.contains(0.0, 1.0));
  ComplexBall z3 = Cyclotomic::zeta(3).to_complex(30);
  // the double sqrt(3)/2 is off by ~1e-17, far outside a 1e-30 ball
  EXPECT_LE(abs_q(z3.re + BigRational(1, 2)), z3.radius);
  BigRational im2 = z3.im * z3.im;
  EXPECT_LE(abs_q(im2 - BigRational(3, 4)), 4 * z3.radius);
  EXPECT_LE(z3.radius, BigRational(1, 1) / BigRational(BigInt("1000000000000000000000000000000")));
  EXPECT_NEAR(to_double(z3.im), 0.8660254037844386, 1e-15);
  ComplexBall m1 = Cyclotomic(-1).to_complex(5);
  EXPECT_EQ(m1.re, BigRational(-1));
  EXPECT_EQ(m1.im, BigRational(0));
  EXPECT_EQ(m1.radius, BigRational(0));
}

TEST(Cyclotomic, RootsOfUnityHaveModulusOne) {
  for (std::uint64_t e = 1; e <= 40; ++e)
    for (std::uint64_t k = 0; k < e; ++k) {
      ComplexBall b = Cyclotomic::zeta(e, static_cast<std::int64_t>(k)).to_complex(25);
      // |z|^2 enclosure contains 1
      BigRational r2 = b.re * b.re + b.im * b.im;
      BigRational slack = 4 * b.radius * (abs_q(b.re) + abs_q(b.im) + b.radius) + 2 * b.radius * b.radius;
      ASSERT_LE(abs_q(r2 - 1), slack) << e << " " << k;
      ASSERT_GE(b.abs_upper(), 1.0);
    }
}

TEST(Cyclotomic, CyclotomicPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<long long>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<long long>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<long long>{1, 0, -1, 0, 1}));
  for (std::uint64_t n = 1; n <= 60; ++n) EXPECT_EQ(cyclotomic_polynomial(n).size(), euler_phi(n) + 1);
  // first one with a coefficient of absolute value 2
  auto p105 = cyclotomic_polynomial(105);
  EXPECT_EQ(*std::min_element(p105.begin(), p105.end()), -2);
}
