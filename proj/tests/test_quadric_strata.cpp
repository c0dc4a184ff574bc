#include "f1geom/quadric_strata.hpp"

#include <gtest/gtest.h>

namespace f1 {
namespace {

Integer ipow(long base, int e) {
  Integer out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

TEST(QuadricStrata, Models) {
  const auto& strata = quadric_strata();
  EXPECT_EQ(strata[0].name, "S1");
  EXPECT_EQ(strata[0].count_poly, CountPolynomial({0, 0, 0, 0, 1}));
  EXPECT_EQ(strata[1].count_poly, CountPolynomial({0, 0, 0, 1}));
  EXPECT_EQ(strata[2].count_poly, CountPolynomial({0, 0, 1}));
  EXPECT_EQ(strata[3].count_poly, CountPolynomial({1, 1, 1}));
  for (const auto& s : strata) {
    EXPECT_TRUE(is_valid_fan(s.fan)) << s.name;
    EXPECT_EQ(fan_count_poly(s.fan), s.count_poly) << s.name;
  }
}

TEST(QuadricStrata, CountPolynomial) {
  const auto n = quadric_count_poly();
  EXPECT_EQ(n, CountPolynomial({1, 1, 2, 1, 1}));
  EXPECT_EQ(n.to_string(), "x^4 + x^3 + 2x^2 + x + 1");
  EXPECT_EQ(euler_char(n), 6);
  EXPECT_EQ(n(2), 35);
  EXPECT_EQ(n(3), 130);
  EXPECT_EQ(n(5), 806);
}

TEST(QuadricStrata, F1CountsPerStratum) {
  for (long n = 1; n <= 3; ++n) {
    const long x = 2 * n + 1;
    const auto counts = quadric_stratum_f1_counts(CyclotomicIndex(n));
    EXPECT_EQ(counts[0], ipow(x, 4));
    EXPECT_EQ(counts[1], ipow(x, 3));
    EXPECT_EQ(counts[2], ipow(x, 2));
    EXPECT_EQ(counts[3], x * x + x + 1);
  }
  EXPECT_EQ(quadric_f1_count(CyclotomicIndex(1)), 130);
}

TEST(QuadricStrata, ConditionZ) {
  for (long n = 1; n <= 5; ++n)
    EXPECT_EQ(quadric_f1_count(CyclotomicIndex(n)), quadric_count_poly()(2 * n + 1)) << "n=" << n;
}

}  // namespace
}  // namespace f1
