#include "f1geom/stable_jhom.hpp"

#include <gtest/gtest.h>

#include <vector>

namespace f1 {
namespace {

// Akiyama-Tanigawa; yields B_1 = +1/2 and agrees elsewhere.
std::vector<Rational> akiyama_tanigawa(int count) {
  std::vector<Rational> out;
  std::vector<Rational> a;
  for (int m = 0; m < count; ++m) {
    a.push_back(Rational(1, m + 1));
    for (int j = m; j >= 1; --j) a[static_cast<std::size_t>(j - 1)] = j * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
    out.push_back(a[0]);
  }
  return out;
}

bool prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

TEST(Bernoulli, Examples) {
  EXPECT_EQ(bernoulli(0), 1);
  EXPECT_EQ(bernoulli(1), Rational(-1, 2));
  EXPECT_EQ(bernoulli(2), Rational(1, 6));
  EXPECT_EQ(bernoulli(3), 0);
  EXPECT_EQ(bernoulli(4), Rational(-1, 30));
  EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
  EXPECT_THROW(bernoulli(-1), Error);
}

TEST(Bernoulli, MatchesAkiyamaTanigawa) {
  const auto reference = akiyama_tanigawa(31);
  for (int i = 0; i <= 30; ++i) {
    if (i == 1) continue;
    EXPECT_EQ(bernoulli(i), reference[static_cast<std::size_t>(i)]) << "i=" << i;
  }
}

TEST(Bernoulli, VonStaudtClausenDenominators) {
  for (int i = 2; i <= 12; i += 2) {
    Integer expected = 1;
    for (int p = 2; p <= i + 1; ++p)
      if (prime(p) && i % (p - 1) == 0) expected *= p;
    EXPECT_EQ(denominator(bernoulli(i)), expected) << "i=" << i;
  }
}

TEST(WBernoulli, Values) {
  EXPECT_EQ(w_bernoulli(2), 24);
  EXPECT_EQ(w_bernoulli(4), 240);
  EXPECT_EQ(w_bernoulli(6), 504);
  EXPECT_EQ(w_bernoulli(8), 480);
  EXPECT_EQ(w_bernoulli(10), 264);
  EXPECT_EQ(w_bernoulli(12), 65520);
  EXPECT_THROW(w_bernoulli(3), Error);
  EXPECT_THROW(w_bernoulli(0), Error);
}

TEST(WGcd, Examples) {
  EXPECT_EQ(w_gcd(2, 10, 100), 24);
  EXPECT_EQ(w_gcd(4, 10, 100), 240);
  EXPECT_EQ(w_gcd(6, 12, 200), 504);
  EXPECT_THROW(w_gcd(2, 0, 100), Error);
  EXPECT_THROW(w_gcd(2, 5, 2), Error);
}

TEST(WGcd, NonincreasingInNmaxAndStable) {
  for (int i = 2; i <= 8; i += 2) {
    Integer previous = w_gcd(i, i + 8, 3);
    for (long nmax = 4; nmax <= 200; ++nmax) {
      const Integer g = w_gcd(i, i + 8, nmax);
      EXPECT_EQ(previous % g, 0);
      EXPECT_LE(g, previous);
      previous = g;
    }
    EXPECT_EQ(previous, w_bernoulli(i));
  }
}

TEST(WGcd, SmallJIsNotYetStable) {
  // gcd of n^3 - n is 6; the 2-part needs larger j.
  EXPECT_NE(w_gcd(2, 1, 200), 24);
  EXPECT_EQ(w_gcd(2, 1, 200), 6);
}

TEST(WGcdStable, AgreesWithBernoulli) {
  for (int i = 2; i <= 12; i += 2) {
    const auto s = w_gcd_stable(i);
    EXPECT_EQ(s.value, w_bernoulli(i)) << "i=" << i;
    EXPECT_GE(s.j, i + 8);
  }
}

}  // namespace
}  // namespace f1
