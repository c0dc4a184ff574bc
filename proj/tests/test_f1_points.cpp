#include "f1geom/f1_points.hpp"
#include "support/corpus.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

namespace f1 {
namespace {

using testing::corpus_fans_up_to_rank;

Integer power(long base, long e) {
  Integer out = 1;
  for (long i = 0; i < e; ++i) out *= base;
  return out;
}

// Points of P^d over F_1^n from homogeneous coordinates: nonzero vectors in
// (mu(R_n) ∪ {0})^{d+1} modulo a common unit, normalized so that the first
// nonzero entry is +T^0.
std::size_t projective_points_homogeneous(int d, long n) {
  const long choices = 2 * n + 1;  // 0, then +T^i, then -T^i
  std::set<std::vector<long>> classes;
  std::vector<long> x(static_cast<std::size_t>(d) + 1, 0);
  auto as_unit = [&](long c) { return MuElement{c <= n ? 1 : -1, (c - 1) % n}; };
  for (;;) {
    std::size_t lead = 0;
    while (lead < x.size() && x[lead] == 0) ++lead;
    if (lead < x.size()) {
      const MuElement l = as_unit(x[lead]);
      const MuElement inv{l.sign, (n - l.exponent) % n};
      std::vector<long> rep;
      for (long c : x) {
        if (c == 0) {
          rep.push_back(0);
          continue;
        }
        const MuElement u = as_unit(c);
        rep.push_back(u.sign * inv.sign * (1 + (u.exponent + inv.exponent) % n));
      }
      classes.insert(rep);
    }
    std::size_t i = 0;
    for (; i < x.size(); ++i) {
      if (++x[i] < choices) break;
      x[i] = 0;
    }
    if (i == x.size()) break;
  }
  return classes.size();
}

TEST(CyclotomicIndex, RejectsNonPositive) {
  EXPECT_THROW(CyclotomicIndex(0), Error);
  EXPECT_THROW(CyclotomicIndex(-3), Error);
  EXPECT_EQ(CyclotomicIndex(4).value(), 4);
}

TEST(Mu, GroupOfOrderTwoN) {
  for (long n = 1; n <= 6; ++n) {
    const CyclotomicIndex idx(n);
    const auto mu = mu_elements(idx);
    ASSERT_EQ(mu.size(), static_cast<std::size_t>(2 * n));
    const std::set<MuElement> all(mu.begin(), mu.end());
    EXPECT_EQ(all.size(), mu.size());
    for (const auto& a : mu) {
      EXPECT_EQ(mu_power(a, 2 * n, idx), (MuElement{1, 0}));
      for (const auto& b : mu) {
        EXPECT_TRUE(all.count(mu_multiply(a, b, idx)));
        EXPECT_EQ(mu_multiply(a, b, idx), mu_multiply(b, a, idx));
      }
    }
  }
}

TEST(Mu, PowerOfNegativeExponent) {
  const CyclotomicIndex n(5);
  const MuElement a{-1, 2};
  const MuElement inv = mu_power(a, -1, n);
  EXPECT_EQ(mu_multiply(a, inv, n), (MuElement{1, 0}));
  EXPECT_EQ(inv, (MuElement{-1, 3}));
}

TEST(Mu, EmbeddingIsMultiplicative) {
  const CyclotomicIndex n(6);
  const auto mu = mu_elements(n);
  for (long k = 0; k < 6; ++k)
    for (const auto& a : mu) {
      EXPECT_NEAR(std::abs(mu_embed(a, k, n)), 1.0, 1e-12);
      for (const auto& b : mu)
        EXPECT_NEAR(std::abs(mu_embed(mu_multiply(a, b, n), k, n) - mu_embed(a, k, n) * mu_embed(b, k, n)), 0.0,
                    1e-12);
    }
  EXPECT_NEAR(std::abs(mu_embed({1, 1}, 1, CyclotomicIndex(4)) - std::complex<double>(0, 1)), 0.0, 1e-12);
}

TEST(ChartPoints, CountIsProductOfChoices) {
  for (const auto& [name, fan] : corpus_fans_up_to_rank(3))
    for (const auto& tau : fan.maximal_cones()) {
      const auto chart = dual_monoid(tau, fan.rank());
      const long r = static_cast<long>(chart.affine_gens.size());
      const long s = static_cast<long>(chart.unit_gens.size());
      for (long n = 1; n <= 2; ++n)
        EXPECT_EQ(Integer(chart_points(chart, CyclotomicIndex(n)).size()),
                  power(2 * n + 1, r) * power(2 * n, s))
            << name;
    }
}

TEST(GluedPoints, ProjectiveMatchesHomogeneousCoordinates) {
  for (int d = 1; d <= 3; ++d)
    for (long n = 1; n <= 3; ++n) {
      const auto glued = glued_points(standard_fan(StandardFan::Projective, d), CyclotomicIndex(n));
      EXPECT_EQ(glued.size(), projective_points_homogeneous(d, n)) << "d=" << d << " n=" << n;
    }
}

TEST(GluedPoints, EqualsOrbitDecomposition) {
  for (const auto& [name, fan] : corpus_fans_up_to_rank(3))
    for (long n = 1; n <= 3; ++n) {
      const CyclotomicIndex idx(n);
      const auto glued = glued_points(fan, idx);
      const auto orbits = orbit_points(fan, idx);
      const std::set<OrbitPoint> orbit_set(orbits.begin(), orbits.end());
      EXPECT_EQ(orbit_set.size(), orbits.size()) << name;
      EXPECT_EQ(glued, orbit_set) << name << " n=" << n;
    }
}

TEST(GluedPoints, ProjectiveLineExample) {
  // 0, infinity and the two units +-1.
  EXPECT_EQ(glued_points(standard_fan(StandardFan::Projective, 1), CyclotomicIndex(1)).size(), 4u);
  EXPECT_EQ(glued_points(standard_fan(StandardFan::Projective, 2), CyclotomicIndex(1)).size(), 13u);
}

TEST(GluedPoints, OverlapOfChartsIsIdentified) {
  // Each chart of P^1 sees 2n + 1 points; they share the 2n torus points.
  const Fan p1 = standard_fan(StandardFan::Projective, 1);
  for (long n = 1; n <= 4; ++n) {
    std::map<Cone, std::size_t> per_support;
    for (const auto& p : glued_points(p1, CyclotomicIndex(n))) ++per_support[p.support];
    EXPECT_EQ(per_support[Cone::zero(1)], static_cast<std::size_t>(2 * n));
    EXPECT_EQ(per_support.size(), 3u);
  }
}

TEST(Evaluate, ChartOfAffinePlane) {
  const auto chart = dual_monoid(Cone(2, {make_vector({1, 0}), make_vector({0, 1})}), 2);
  const CyclotomicIndex n(4);
  ChartPoint p{std::make_shared<const MonoidPresentation>(chart), {MuElement{1, 1}, MuElement{-1, 0}}, {}, n};
  // chi^(1,1) = T * (-1) = -T; under T -> i this is -i.
  EXPECT_NEAR(std::abs(evaluate(p, 1, make_vector({1, 1})) - std::complex<double>(0, -1)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(evaluate(p, 0, make_vector({0, 0})) - std::complex<double>(1, 0)), 0.0, 1e-12);
  EXPECT_THROW(evaluate(p, 1, make_vector({-1, 0})), Error);
  EXPECT_THROW(evaluate(p, 4, make_vector({1, 0})), Error);

  p.affine_values[0] = std::nullopt;
  EXPECT_EQ(evaluate(p, 1, make_vector({2, 3})), std::complex<double>(0, 0));
  EXPECT_NEAR(std::abs(evaluate(p, 1, LatticeVector(3 * chart.affine_gens[1]))), 1.0, 1e-12);
}

TEST(Evaluate, NotInMonoidKind) {
  const auto chart = dual_monoid(Cone(1, {make_vector({1})}), 1);
  ChartPoint p{std::make_shared<const MonoidPresentation>(chart), {std::nullopt}, {}, CyclotomicIndex(1)};
  try {
    evaluate(p, 0, make_vector({-1}));
    FAIL() << "expected NotInMonoid";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInMonoid);
  }
}

TEST(InCompact, EveryChartPointOfEveryCorpusFan) {
  for (const auto& [name, fan] : corpus_fans_up_to_rank(2))
    for (const auto& tau : fan.maximal_cones())
      for (long n = 1; n <= 3; ++n)
        for (const auto& p : chart_points(dual_monoid(tau, fan.rank()), CyclotomicIndex(n)))
          for (long k = 0; k < n; ++k) EXPECT_TRUE(in_compact(p, k)) << name;
}

TEST(ReduceDegree, IsFunctorialOnGluedPoints) {
  for (const auto& [name, fan] : corpus_fans_up_to_rank(2)) {
    const auto big = glued_points(fan, CyclotomicIndex(4));
    for (long m : {1L, 2L, 4L}) {
      const auto small = glued_points(fan, CyclotomicIndex(m));
      std::set<OrbitPoint> image;
      for (const auto& p : big) image.insert(reduce_degree(p, CyclotomicIndex(m)));
      EXPECT_EQ(image, small) << name << " m=" << m;  // R_4 -> R_m is onto on units
    }
  }
  EXPECT_THROW(reduce_degree(*glued_points(standard_fan(StandardFan::Torus, 1), CyclotomicIndex(3)).begin(),
                             CyclotomicIndex(2)),
               Error);
}

TEST(ReduceDegree, CommutesWithCanonicalForm) {
  std::mt19937 rng(11);
  const Fan fan = standard_fan(StandardFan::Projective, 2);
  for (const auto& tau : fan.maximal_cones()) {
    const auto points = chart_points(dual_monoid(tau, 2), CyclotomicIndex(6));
    std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
      ChartPoint p = points[pick(rng)];
      ChartPoint q = p;
      q.n = CyclotomicIndex(3);
      for (auto& a : q.affine_values)
        if (a) a->exponent %= 3;
      for (auto& u : q.unit_values) u.exponent %= 3;
      EXPECT_EQ(reduce_degree(canonical_point(p), CyclotomicIndex(3)), canonical_point(q));
    }
  }
}

}  // namespace
}  // namespace f1
