#pragma once

// Points of toric F_1-varieties with values in R_n = Z[T]/(T^n - 1).

#include "f1geom/lattice_fan.hpp"

#include <complex>
#include <compare>
#include <memory>
#include <optional>
#include <set>
#include <vector>

namespace f1 {

/// Extension degree n of F_1^n; always >= 1.
class CyclotomicIndex {
 public:
  explicit CyclotomicIndex(long n);
  long value() const noexcept { return n_; }
  auto operator<=>(const CyclotomicIndex&) const = default;

 private:
  long n_;
};

/// The unit sign * T^exponent of R_n.
struct MuElement {
  int sign = 1;
  long exponent = 0;  // in [0, n)

  auto operator<=>(const MuElement&) const = default;
};

/// Either zero or a root of unity; nullopt is zero.
using MuOrZero = std::optional<MuElement>;

/// The 2n units {±T^i}: +T^0..+T^{n-1} then -T^0..-T^{n-1}.
std::vector<MuElement> mu_elements(CyclotomicIndex n);

MuElement mu_multiply(const MuElement& a, const MuElement& b, CyclotomicIndex n);
MuElement mu_power(const MuElement& a, const Integer& k, CyclotomicIndex n);

/// Image of the unit under the embedding T -> exp(2 pi i k / n).
std::complex<double> mu_embed(const MuElement& a, long k, CyclotomicIndex n);

/// A monoid homomorphism S_tau -> mu(R_n) ∪ {0}, stored on the generators.
struct ChartPoint {
  std::shared_ptr<const MonoidPresentation> chart;
  std::vector<MuOrZero> affine_values;
  std::vector<MuElement> unit_values;
  CyclotomicIndex n{1};
};

/// A point of the torus orbit of `support`, with its character values on the
/// unit generators of dual_monoid(support) (a basis of support^perp ∩ M).
struct OrbitPoint {
  Cone support;
  std::vector<MuElement> torus_values;
  long n = 1;

  friend bool operator==(const OrbitPoint& a, const OrbitPoint& b) {
    return a.n == b.n && a.support == b.support && a.torus_values == b.torus_values;
  }
  friend bool operator<(const OrbitPoint& a, const OrbitPoint& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.support != b.support) return a.support < b.support;
    return a.torus_values < b.torus_values;
  }
};

/// All (2n+1)^r (2n)^(d-r) points of the chart.
std::vector<ChartPoint> chart_points(const MonoidPresentation& chart, CyclotomicIndex n);

/// All (2n)^(d - dim sigma) points of every torus orbit.
std::vector<OrbitPoint> orbit_points(const Fan& f, CyclotomicIndex n);

/// The orbit point represented by a chart point.
OrbitPoint canonical_point(const ChartPoint& p);

/// Union of the maximal-cone charts, glued by canonical form.
std::set<OrbitPoint> glued_points(const Fan& f, CyclotomicIndex n);

/// chi^m(p) under T -> exp(2 pi i k / n). Throws NotInMonoid when m is not in
/// S_tau and InvalidArgument when k is outside [0, n).
std::complex<double> evaluate(const ChartPoint& p, long k, const LatticeVector& m);

/// True iff every monoid generator (affine, units and their inverses) has
/// |chi^m| <= 1 + 1e-9 under the k-th embedding.
bool in_compact(const ChartPoint& p, long k);

inline constexpr double kCompactTolerance = 1e-9;

/// Pushes a point along R_n -> R_m, T -> T, for m dividing n.
OrbitPoint reduce_degree(const OrbitPoint& p, CyclotomicIndex m);

}  // namespace f1
