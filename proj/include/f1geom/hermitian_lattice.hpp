#pragma once

// F_1-points of hermitian lattices: x = sum_{v in Phi} v ⊗ zeta_v with
// zeta_v in mu(R_n) ∪ {0}.

#include "f1geom/f1_points.hpp"
#include "f1geom/zeta_engine.hpp"

#include <set>
#include <vector>

namespace f1 {

/// Positive definite symmetric rational Gram matrix; ||v||^2 = v^T G v.
class GramForm {
 public:
  explicit GramForm(RatMatrix gram);

  int rank() const noexcept { return static_cast<int>(gram_.rows()); }
  const RatMatrix& gram() const noexcept { return gram_; }
  Rational norm_squared(const IntVector& v) const;

 private:
  RatMatrix gram_;
};

/// Nonzero lattice vectors of norm <= 1, lexicographically sorted.
std::vector<IntVector> ball_points(const GramForm& g);

/// Half of the short vectors: one of each pair {v, -v}.
class PhiSystem {
 public:
  /// Throws InvalidArgument on zero, repeated, mis-sized or antipodal vectors.
  PhiSystem(int rank, std::vector<IntVector> vectors);

  int rank() const noexcept { return rank_; }
  int t() const noexcept { return static_cast<int>(vectors_.size()); }
  const std::vector<IntVector>& vectors() const noexcept { return vectors_; }

 private:
  int rank_;
  std::vector<IntVector> vectors_;
};

/// Keeps the vectors whose first nonzero coordinate is positive. The input
/// must be closed under v -> -v.
PhiSystem choose_phi(int rank, const std::vector<IntVector>& points);

/// {1, 2, ..., t} in Z.
PhiSystem rank1_phi(int t);

/// V(subset): nonzero values of sum ±v.
std::set<IntVector, LexLess> signed_sums(const std::vector<IntVector>& subset, int rank);

/// #T(k): ordered k-tuples (v_1..v_k) with v_j ∈ V(Phi_j) for pairwise
/// disjoint Phi_j ⊆ Phi.
Integer tuple_count(const PhiSystem& phi, int k);

/// 1 + sum_k #T(k) C(n, k).
Integer count_points_formula(const PhiSystem& phi, CyclotomicIndex n);

inline constexpr long kOracleBudget = 1'000'000;

/// Number of distinct elements sum v ⊗ zeta_v of Lambda ⊗ R_n, by enumerating
/// all (2n+1)^t assignments. Throws TooLarge beyond kOracleBudget.
Integer count_points_oracle(const PhiSystem& phi, CyclotomicIndex n);

/// N(x) with N(2n+1) = count_points_formula(phi, n), interpolated at
/// n = 1..t+1; checked to be monic of degree t with N(1) = 1. Throws
/// NonIntegralCoefficient when no integral N exists.
CountPolynomial count_poly(const PhiSystem& phi);

/// The same interpolant over Q. It is monic of degree t with N(1) = 1 for
/// every Phi, but need not have integer coefficients: Phi = {1, 2, 3} gives
/// a coefficient 13/2, for which count_poly throws NonIntegralCoefficient.
std::vector<Rational> rational_count_poly(const PhiSystem& phi);

/// Zeta function of the rank-one lattice with t = card(Phi), 0 <= t <= 6.
ZetaFunction zeta_rank1(int t);

}  // namespace f1
