#include <set>

#include <gtest/gtest.h>

#include "support/oracle.hpp"
#include "ztau/decimal.hpp"
#include "ztau/errors.hpp"
#include "ztau/model_set.hpp"
#include "ztau/window_shift.hpp"

using namespace ztau;

namespace {

const PowerTriple kSmall{RingElement(0, 1), RingElement(0, 2), RingElement(2, 1), 2};
const PowerTriple kLarge{RingElement(2, 12), RingElement(11, 8), RingElement(3, 18), 2};
const PowerTriple kCubic{RingElement(4, 3), RingElement(5, 6), RingElement(6, 6), 3};

bool in_window(const PowerTriple& t) { return contains(t.x) && contains(t.y) && contains(t.z); }

double sigma_value(const HalfSurd& s) { return std::stod(to_decimal(s)); }

}  // namespace

TEST(MinWindowExponent, Examples) {
  EXPECT_EQ(min_window_exponent(RingElement::tau()), 0);
  EXPECT_EQ(min_window_exponent(RingElement(0, 2)), 2);
  EXPECT_EQ(min_window_exponent(RingElement(0, -1)), 1);
  EXPECT_EQ(min_window_exponent(RingElement(-1)), 2);
  EXPECT_EQ(min_window_exponent(RingElement(-5, -8)), -4);
  EXPECT_THROW(min_window_exponent(RingElement::zero()), DomainError);
}

TEST(MinWindowExponent, MatchesLinearScan) {
  for (const oracle::Z& z : oracle::box(25)) {
    if (oracle::is_zero(z)) continue;
    const RingElement x(z.m, z.n);
    const long n = min_window_exponent(x);
    for (long j = n; j <= n + 12; ++j) ASSERT_TRUE(contains(x * tau_power(j)));
    ASSERT_FALSE(contains(x * tau_power(n - 1)));
  }
}

TEST(MinShift, SmallExample) {
  const ShiftResult r = min_shift(kSmall);
  EXPECT_EQ(r.exponent, 2);
  EXPECT_EQ(r.shifted, (PowerTriple{RingElement(1, 2), RingElement(2, 4), RingElement(3, 4), 2}));
  EXPECT_NEAR(sigma_value(r.sigma[0]), -0.236, 5e-4);
  EXPECT_NEAR(sigma_value(r.sigma[1]), -0.472, 5e-4);
  EXPECT_NEAR(sigma_value(r.sigma[2]), 0.528, 5e-4);
}

TEST(MinShift, LargeExample) {
  const ShiftResult r = min_shift(kLarge);
  EXPECT_EQ(r.exponent, 6);
  EXPECT_EQ(r.shifted, (PowerTriple{RingElement(106, 172), RingElement(119, 192), RingElement(159, 258), 2}));
  EXPECT_NEAR(sigma_value(r.sigma[0]), -0.302, 5e-4);
  // Exact conjugates of the shifted components, checked against the oracle.
  EXPECT_EQ(to_decimal(r.sigma[0]), "-0.301846");
  EXPECT_EQ(to_decimal(r.sigma[1]), "0.337474");
  EXPECT_EQ(to_decimal(r.sigma[2]), "-0.452769");
  const oracle::Z comps[] = {{106, 172}, {119, 192}, {159, 258}};
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(sigma_value(r.sigma[i]), oracle::approx(oracle::real_conj(comps[i])), 1e-6);
  }
}

TEST(MinShift, CubicExample) {
  const ShiftResult r = min_shift(kCubic);
  EXPECT_EQ(r.exponent, 3);
  EXPECT_EQ(r.shifted, (PowerTriple{RingElement(10, 17), RingElement(17, 28), RingElement(18, 30), 3}));
  EXPECT_NEAR(sigma_value(r.sigma[0]), -0.507, 5e-4);
  EXPECT_NEAR(sigma_value(r.sigma[1]), -0.305, 5e-4);
  EXPECT_NEAR(sigma_value(r.sigma[2]), -0.541, 5e-4);
}

TEST(MinShift, AlreadyInside) {
  EXPECT_EQ(min_shift({RingElement(1, 2), RingElement(2, 4), RingElement(3, 4), 2}).exponent, 0);
}

TEST(MinShift, NegativeExponent) {
  const PowerTriple pre = shift(kCubic, 7);
  const ShiftResult r = min_shift(pre);
  EXPECT_EQ(r.exponent, -4);
  EXPECT_EQ(r.shifted, min_shift(kCubic).shifted);
}

TEST(MinShift, Errors) {
  EXPECT_THROW(min_shift({RingElement(0), RingElement(1), RingElement(1), 2}), DomainError);
  EXPECT_THROW(min_shift({RingElement(1), RingElement(1), RingElement(1), 2}), DomainError);
}

TEST(MinShift, TwoSided) {
  for (const PowerTriple& t : {kSmall, kLarge, kCubic}) {
    const long big_n = min_shift(t).exponent;
    for (long n = big_n - 5; n < big_n; ++n) ASSERT_FALSE(in_window(shift(t, n))) << n;
    for (long n = big_n; n <= big_n + 10; ++n) ASSERT_TRUE(in_window(shift(t, n))) << n;
  }
}

TEST(Family, StartsAtMinimalShift) {
  const auto family = solution_family(kCubic, 3);
  ASSERT_EQ(family.size(), 3u);
  EXPECT_EQ(family[0], min_shift(kCubic).shifted);
  EXPECT_EQ(family[1], shift(kCubic, 4));
  EXPECT_EQ(family[2], shift(kCubic, 5));
}

TEST(Family, TwentyDistinctCubicSolutions) {
  const auto family = solution_family(kCubic, 20);
  std::set<std::pair<Integer, Integer>> seen;
  for (const auto& t : family) {
    ASSERT_TRUE(verify(t));
    ASSERT_TRUE(in_window(t));
    seen.emplace(t.x.m(), t.x.n());
  }
  EXPECT_EQ(seen.size(), 20u);
}

TEST(Family, PythagoreanMembers) {
  for (const auto& t : solution_family(kSmall, 20)) {
    ASSERT_TRUE(verify(t));
    ASSERT_TRUE(in_window(t));
  }
}
