#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "support/oracle.hpp"
#include "ztau/errors.hpp"
#include "ztau/model_set.hpp"

using namespace ztau;

namespace {

std::vector<RingElement> elems(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<RingElement> out;
  for (auto [m, n] : xs) out.emplace_back(m, n);
  return out;
}

std::set<std::pair<long, long>> as_set(const std::vector<RingElement>& xs) {
  std::set<std::pair<long, long>> out;
  for (const auto& x : xs) out.emplace(x.m().get_si(), x.n().get_si());
  return out;
}

// Brute force over the coefficient box, exact on the window ends.
std::vector<RingElement> brute_members(const RingElement& lo, const RingElement& hi, long radius) {
  std::vector<RingElement> out;
  for (long m = -radius; m <= radius; ++m) {
    for (long n = -radius; n <= radius; ++n) {
      const RingElement x(m, n);
      if (compare_real(x, lo) >= 0 && compare_real(x, hi) <= 0 && contains(x)) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end(), RealLess{});
  return out;
}

}  // namespace

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(RingElement::tau()));
  EXPECT_FALSE(contains(RingElement(2, 1)));
  EXPECT_FALSE(contains(RingElement(0, -1)));
  EXPECT_TRUE(contains(RingElement(-1)));
  EXPECT_TRUE(contains(RingElement::zero()));
  EXPECT_TRUE(contains(RingElement(3, 4)));
}

TEST(Contains, AgreesWithQuadPrecisionAwayFromEnds) {
  for (const oracle::Z& z : oracle::box(60)) {
    const RingElement x(z.m, z.n);
    if (x == RingElement(-1) || x == RingElement(0, -1)) continue;
    ASSERT_EQ(contains(x), oracle::in_window_approx(z)) << z.m << " " << z.n;
  }
}

TEST(Substitute, Examples) {
  EXPECT_EQ(substitute({"a", "a"}), (SubstitutionWord{"ab", "ab"}));
  EXPECT_EQ(substitute({"ab", "ab"}), (SubstitutionWord{"aba", "aba"}));
  EXPECT_THROW(substitute({"", "a"}), DomainError);
  EXPECT_THROW(substitute({"ac", "a"}), DomainError);
}

TEST(Patch, ZeroOneTwo) {
  EXPECT_EQ(patch(0).points, elems({{0, -1}, {0, 0}, {0, 1}}));
  EXPECT_EQ(patch(1).points, elems({{-1, -2}, {-1, -1}, {0, -1}, {0, 0}, {0, 1}, {1, 1}, {1, 2}}));
  EXPECT_EQ(patch(2).points, elems({{-3, -5}, {-3, -4}, {-2, -4}, {-2, -3}, {-2, -2}, {-1, -2}, {-1, -1}, {0, -1},
                                    {0, 0},   {0, 1},   {1, 1},   {1, 2},   {1, 3},   {2, 3},   {2, 4},   {3, 4},
                                    {3, 5}}));
}

TEST(Patch, HullAndOrdering) {
  for (int i = 0; i <= 6; ++i) {
    const Patch p = patch(i);
    ASSERT_EQ(p.points.front(), p.hull_lo);
    ASSERT_EQ(p.points.back(), p.hull_hi);
    ASSERT_TRUE(std::is_sorted(p.points.begin(), p.points.end(), RealLess{}));
    ASSERT_EQ(std::adjacent_find(p.points.begin(), p.points.end()), p.points.end());
  }
}

TEST(Patch, Nested) {
  for (int i = 0; i < 6; ++i) {
    const auto small = as_set(patch(i).points);
    const auto large = as_set(patch(i + 1).points);
    ASSERT_TRUE(std::includes(large.begin(), large.end(), small.begin(), small.end())) << i;
  }
}

TEST(Patch, CapAndDomain) {
  EXPECT_THROW(patch(13), CapExceeded);
  EXPECT_THROW(patch(3, 2), CapExceeded);
  EXPECT_THROW(patch(-1), DomainError);
  EXPECT_NO_THROW(patch(12));
}

TEST(Patch, ClosedUnderTau) {
  for (const RingElement& x : patch(6).points) {
    if (contains(x)) ASSERT_TRUE(contains(x * RingElement::tau())) << format_element(x);
  }
}

TEST(Patch, BoundaryDiscrepancy) {
  for (int i = 1; i <= 3; ++i) {
    const Patch p = patch(i);
    const auto from_patch = as_set(p.points);
    const auto from_window = as_set(members_in_interval(embed(p.hull_lo), embed(p.hull_hi)));
    std::set<std::pair<long, long>> diff;
    std::set_symmetric_difference(from_patch.begin(), from_patch.end(), from_window.begin(), from_window.end(),
                                  std::inserter(diff, diff.end()));
    EXPECT_EQ(diff, (std::set<std::pair<long, long>>{{0, -1}, {-1, 0}})) << i;
    EXPECT_TRUE(from_patch.count({0, -1}));
    EXPECT_TRUE(from_window.count({-1, 0}));
  }
}

TEST(Interval, Examples) {
  EXPECT_EQ(members_in_interval(embed(RingElement(0, -1)), embed(RingElement::tau())),
            elems({{-1, 0}, {0, 0}, {0, 1}}));
  EXPECT_EQ(members_in_interval(HalfSurd(0, 0), HalfSurd(0, 0)), elems({{0, 0}}));
  EXPECT_THROW(members_in_interval(HalfSurd(1, 0), HalfSurd(0, 0)), DomainError);
}

TEST(Interval, AgreesWithBruteForce) {
  const std::vector<std::pair<RingElement, RingElement>> ranges = {
      {RingElement(-10), RingElement(10)},
      {RingElement(3, -2), RingElement(4, 5)},
      {RingElement(0, -1), RingElement(1, 1)},
      {RingElement(-7, -3), RingElement(-2, 0)},
      {RingElement(0, 7), RingElement(12, 1)},
  };
  for (const auto& [lo, hi] : ranges) {
    ASSERT_EQ(members_in_interval(embed(lo), embed(hi)), brute_members(lo, hi, 60)) << format_element(lo);
  }
}

TEST(Interval, IrrationalEnds) {
  // Ends that are not themselves members.
  const HalfSurd lo(-7, 3);
  const HalfSurd hi(9, 1);
  std::vector<RingElement> brute;
  for (const oracle::Z& z : oracle::box(40)) {
    const RingElement x(z.m, z.n);
    if (surd_sign(embed(x) - lo) >= 0 && surd_sign(hi - embed(x)) >= 0 && contains(x)) brute.push_back(x);
  }
  std::sort(brute.begin(), brute.end(), RealLess{});
  EXPECT_EQ(members_in_interval(lo, hi), brute);
}

TEST(Window, MonotoneUnderTau) {
  for (long m = -8; m <= 8; ++m) {
    for (long n = -8; n <= 8; ++n) {
      const RingElement x(m, n);
      if (x.is_zero()) continue;
      bool seen = false;
      for (long j = -12; j <= 12; ++j) {
        const RingElement y = tau_power(j) * x;
        const bool in = contains(y);
        // -1 is a member but -t is not, so the orbit of -1 dips out once.
        if (seen && y != RingElement(0, -1)) ASSERT_TRUE(in) << format_element(x) << " j=" << j;
        seen = seen || in;
      }
      ASSERT_TRUE(seen) << format_element(x);
    }
  }
}

TEST(Window, OrbitOfMinusOne) {
  EXPECT_TRUE(contains(RingElement(-1)));
  EXPECT_FALSE(contains(RingElement(0, -1)));
  for (long j = 2; j <= 30; ++j) ASSERT_TRUE(contains(-tau_power(j))) << j;
  for (long j = -30; j <= -1; ++j) ASSERT_FALSE(contains(-tau_power(j))) << j;
}
