#include <random>

#include <gtest/gtest.h>

#include "ztau/division.hpp"
#include "ztau/errors.hpp"

using namespace ztau;

TEST(Division, ExactQuotient) {
  const DivResult r = euclid_div(RingElement(5, 8), RingElement(1, 2));
  EXPECT_EQ(r.quotient, RingElement(1, 2));
  EXPECT_TRUE(r.remainder.is_zero());
}

TEST(Division, ByZeroThrows) {
  EXPECT_THROW(euclid_div(RingElement(1, 1), RingElement::zero()), DomainError);
}

TEST(Division, EuclideanInequality) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> coef(-100000, 100000);
  for (int i = 0; i < 20000; ++i) {
    const RingElement x(coef(rng), coef(rng));
    const RingElement y(coef(rng), coef(rng));
    if (y.is_zero()) continue;
    const DivResult r = euclid_div(x, y);
    ASSERT_EQ(r.quotient * y + r.remainder, x);
    const Integer nr = abs(norm(r.remainder));
    const Integer ny = abs(norm(y));
    ASSERT_LT(nr, ny);
    ASSERT_LT(2 * nr, ny);
  }
}

TEST(Divides, Examples) {
  EXPECT_EQ(divides(RingElement::tau(), RingElement::one()), RingElement(-1, 1));
  EXPECT_FALSE(divides(RingElement(2), RingElement(1, 1)).has_value());
  EXPECT_EQ(divides(RingElement(1, 2), RingElement(5, 8)), RingElement(1, 2));
  EXPECT_THROW(divides(RingElement::zero(), RingElement::one()), DomainError);
}

TEST(Divides, MatchesMultiplication) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> coef(-50, 50);
  for (int i = 0; i < 3000; ++i) {
    const RingElement a(coef(rng), coef(rng));
    const RingElement b(coef(rng), coef(rng));
    if (a.is_zero()) continue;
    ASSERT_EQ(divides(a, a * b), b);
    const auto q = divides(a, b);
    if (q) ASSERT_EQ(*q * a, b);
  }
}

TEST(Gcd, DividesBothArguments) {
  const RingElement x(2, -1);
  const RingElement y(2, 3);
  const RingElement d = gcd(x, y);
  EXPECT_TRUE(divides(d, x).has_value());
  EXPECT_TRUE(divides(d, y).has_value());
  // N(2-t) = 4 - 2 - 1 = 1, so 2-t is a unit.
  EXPECT_TRUE(is_unit(d));
}

TEST(Gcd, CommonFactorIsRecovered) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> coef(-30, 30);
  for (int i = 0; i < 2000; ++i) {
    const RingElement c(coef(rng), coef(rng));
    const RingElement a(coef(rng), coef(rng));
    const RingElement b(coef(rng), coef(rng));
    if (c.is_zero() || (a.is_zero() && b.is_zero())) continue;
    const RingElement d = gcd(c * a, c * b);
    ASSERT_TRUE(divides(c, d).has_value());
    ASSERT_TRUE(divides(d, c * a).has_value());
    ASSERT_TRUE(divides(d, c * b).has_value());
  }
}

TEST(Gcd, ZeroArguments) {
  EXPECT_THROW(gcd(RingElement::zero(), RingElement::zero()), DomainError);
  EXPECT_EQ(gcd(RingElement(5, 8), RingElement::zero()), canonical_associate(RingElement(5, 8)).first);
}

TEST(CanonicalAssociate, UnitsCollapse) {
  EXPECT_EQ(canonical_associate(pow(RingElement::tau(), 3)).first, canonical_associate(RingElement::one()).first);
  EXPECT_EQ(canonical_associate(RingElement::one()).first, RingElement::one());
}

TEST(CanonicalAssociate, InvariantUnderUnits) {
  for (long m = -12; m <= 12; ++m) {
    for (long n = -12; n <= 12; ++n) {
      const RingElement x(m, n);
      if (x.is_zero()) continue;
      const auto [c, u] = canonical_associate(x);
      ASSERT_EQ(u.value() * c, x);
      ASSERT_GT(surd_sign(embed(c)), 0);
      for (long j = -3; j <= 3; ++j) {
        for (int s : {1, -1}) {
          const RingElement y = RingElement(s) * tau_power(j) * x;
          ASSERT_EQ(canonical_associate(y).first, c) << format_element(x) << " j=" << j;
        }
      }
    }
  }
}

TEST(CanonicalAssociate, LargeExponents) {
  const RingElement x(7, 3);
  const RingElement c = canonical_associate(x).first;
  for (long j : {-200L, -57L, 64L, 311L}) {
    ASSERT_EQ(canonical_associate(tau_power(j) * x).first, c);
  }
}

TEST(Prop, NoNormPlusMinusTwo) {
  // N(m+nt) = +-2 forces (2m+n)^2 - 5n^2 = +-8, impossible mod 5.
  for (long m = -1000; m <= 1000; ++m) {
    for (long n = -1000; n <= 1000; ++n) {
      const long v = m * m + m * n - n * n;
      ASSERT_NE(v, 2);
      ASSERT_NE(v, -2);
    }
  }
}
