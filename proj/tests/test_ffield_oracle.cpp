#include "f1geom/ffield_oracle.hpp"
#include "f1geom/quadric_strata.hpp"
#include "support/corpus.hpp"

#include <gtest/gtest.h>

namespace f1 {
namespace {

using testing::corpus_fans;

Integer ipow(long base, int e) {
  Integer out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

// Affine cone count: solutions in F_p^6 minus the origin, divided by p - 1.
Integer quadric_from_affine_cone(long p) {
  long zeros = 0;
  for (long x = 0; x < p; ++x)
    for (long y = 0; y < p; ++y)
      for (long z = 0; z < p; ++z)
        for (long t = 0; t < p; ++t)
          for (long u = 0; u < p; ++u)
            for (long v = 0; v < p; ++v)
              if (((x * y - z * t + u * v) % p + p) % p == 0) ++zeros;
  return Integer((zeros - 1) / (p - 1));
}

TEST(PrimeField, Arithmetic) {
  const PrimeField f(7);
  EXPECT_EQ(f.reduce(-1), 6);
  EXPECT_EQ(f.mul(3, 5), 1);
  EXPECT_EQ(f.inverse(3), 5);
  EXPECT_EQ(f.pow(3, 6), 1);
  for (long a = 1; a < 7; ++a) EXPECT_EQ(f.mul(a, f.inverse(a)), 1);
  EXPECT_THROW(f.inverse(0), Error);
  EXPECT_THROW(PrimeField(9), Error);
  EXPECT_THROW(PrimeField(1), Error);
  EXPECT_THROW(PrimeField(10007), Error);
  EXPECT_TRUE(is_prime(9973));
  EXPECT_FALSE(is_prime(1));
}

TEST(ToricCount, Examples) {
  EXPECT_EQ(toric_count_fq(standard_fan(StandardFan::Projective, 2), PrimeField(2)), 7);
  const Fan p1 = standard_fan(StandardFan::Projective, 1);
  EXPECT_EQ(toric_count_fq(fan_product(p1, p1), PrimeField(2)), 9);
  EXPECT_EQ(toric_count_fq(standard_fan(StandardFan::Affine, 2), PrimeField(3)), 9);
  EXPECT_EQ(toric_count_fq(standard_fan(StandardFan::Torus, 2), PrimeField(5)), 16);
}

TEST(ToricCount, ClosedFormsForStandardFans) {
  for (long p : {2L, 3L, 5L, 7L})
    for (int d = 1; d <= 3; ++d) {
      const PrimeField f(p);
      EXPECT_EQ(toric_count_fq(standard_fan(StandardFan::Projective, d), f), (ipow(p, d + 1) - 1) / (p - 1));
      EXPECT_EQ(toric_count_fq(standard_fan(StandardFan::Affine, d), f), ipow(p, d));
      EXPECT_EQ(toric_count_fq(standard_fan(StandardFan::Torus, d), f), ipow(p - 1, d));
    }
}

TEST(ToricCount, MatchesCountingPolynomialOnCorpus) {
  for (const auto& [name, fan] : corpus_fans())
    for (const auto& c : compare_with_oracle(fan_count_poly(fan), fan, {2, 3, 5, 7}))
      EXPECT_TRUE(c.agrees()) << name << " p=" << c.prime << ": " << c.formula << " vs " << c.oracle;
}

TEST(ToricCount, RejectsInvalidFan) {
  const Fan broken = Fan::from_cones(2, {Cone(2, {make_vector({1, 0}), make_vector({0, 1})})});
  try {
    toric_count_fq(broken, PrimeField(2));
    FAIL() << "expected FanError";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FanError);
  }
}

TEST(CompareWithOracle, DetectsInjectedMismatch) {
  const Fan p2 = standard_fan(StandardFan::Projective, 2);
  const auto mutated = fan_count_poly(p2) + CountPolynomial::constant(1);
  const auto results = compare_with_oracle(mutated, p2, {2, 3, 5});
  ASSERT_EQ(results.size(), 3u);
  for (const auto& c : results) {
    EXPECT_FALSE(c.agrees());
    EXPECT_EQ(c.formula, c.oracle + 1);
  }
}

TEST(QuadricCount, Values) {
  EXPECT_EQ(quadric_count_fq(PrimeField(2)), 35);
  EXPECT_EQ(quadric_count_fq(PrimeField(3)), 130);
  // 625 + 125 + 50 + 5 + 1 = (25 + 1)(25 + 5 + 1).
  EXPECT_EQ(quadric_count_fq(PrimeField(5)), 806);
  EXPECT_THROW(quadric_count_fq(PrimeField(13)), Error);
}

TEST(QuadricCount, AgreesWithAffineConeAndPolynomial) {
  for (long p : {2L, 3L, 5L}) {
    EXPECT_EQ(quadric_count_fq(PrimeField(p)), quadric_from_affine_cone(p));
    EXPECT_EQ(quadric_count_fq(PrimeField(p)), quadric_count_poly()(p));
  }
}

TEST(QuadricCount, StrataPartitionTheQuadric) {
  for (long p : {2L, 3L, 5L}) {
    const PrimeField f(p);
    const auto strata = quadric_stratum_counts_fq(f);
    EXPECT_EQ(strata[0] + strata[1] + strata[2] + strata[3], quadric_count_fq(f));
    EXPECT_EQ(strata[0], ipow(p, 4));
    EXPECT_EQ(strata[1], ipow(p, 3));
    EXPECT_EQ(strata[2], ipow(p, 2));
    EXPECT_EQ(strata[3], p * p + p + 1);
  }
}

TEST(ProjectiveCount, Values) {
  EXPECT_EQ(projective_count_fq(1, PrimeField(2)), 3);
  EXPECT_EQ(projective_count_fq(2, PrimeField(2)), 7);
  EXPECT_EQ(projective_count_fq(3, PrimeField(3)), 40);
  EXPECT_EQ(projective_count_fq(0, PrimeField(5)), 1);
  EXPECT_THROW(projective_count_fq(-1, PrimeField(2)), Error);
  EXPECT_THROW(projective_count_fq(8, PrimeField(11)), Error);
  for (long p : {2L, 3L, 5L, 7L})
    for (int d = 1; d <= 3; ++d)
      EXPECT_EQ(projective_count_fq(d, PrimeField(p)), toric_count_fq(standard_fan(StandardFan::Projective, d), PrimeField(p)));
}

}  // namespace
}  // namespace f1
