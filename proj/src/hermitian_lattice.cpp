#include "f1geom/hermitian_lattice.hpp"

#include "f1geom/integer_matrix.hpp"

#include <algorithm>

namespace f1 {

namespace {

constexpr int kMaxRank = 8;
using SmallVector = Eigen::Matrix<long, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxRank, 1>;

SmallVector to_small(const IntVector& v) {
  SmallVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (abs_value<Integer>(v(i)) > (1L << 40))
      throw Error(ErrorKind::TooLarge, "vector coordinate too large for enumeration");
    out(i) = v(i).convert_to<long>();
  }
  return out;
}

std::vector<SmallVector> small_vectors(const PhiSystem& phi) {
  if (phi.rank() > kMaxRank) throw Error(ErrorKind::TooLarge, "lattice rank above 8");
  std::vector<SmallVector> out;
  for (const auto& v : phi.vectors()) out.push_back(to_small(v));
  return out;
}

Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer out = 1;
  for (long i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

// Backtracking over Phi: each vector is unused or sent to one of k slots with
// a sign. Records the distinct tuples of (all nonzero) slot sums.
class TupleCollector {
 public:
  TupleCollector(std::vector<SmallVector> phi, int rank, int k)
      : phi_(std::move(phi)), rank_(rank), k_(k), sums_(static_cast<std::size_t>(k), SmallVector::Zero(rank)),
        used_(static_cast<std::size_t>(k), 0) {}

  std::size_t run() {
    descend(0);
    return tuples_.size();
  }

 private:
  void descend(std::size_t i) {
    const int empty = static_cast<int>(std::count(used_.begin(), used_.end(), 0));
    if (static_cast<std::size_t>(empty) > phi_.size() - i) return;
    if (i == phi_.size()) {
      std::vector<long> key;
      key.reserve(static_cast<std::size_t>(k_ * rank_));
      for (const auto& s : sums_) {
        if (s.isZero()) return;
        key.insert(key.end(), s.data(), s.data() + rank_);
      }
      tuples_.insert(std::move(key));
      return;
    }
    descend(i + 1);
    for (std::size_t slot = 0; slot < sums_.size(); ++slot)
      for (long sign : {1L, -1L}) {
        sums_[slot] += sign * phi_[i];
        ++used_[slot];
        descend(i + 1);
        --used_[slot];
        sums_[slot] -= sign * phi_[i];
      }
  }

  std::vector<SmallVector> phi_;
  int rank_;
  int k_;
  std::vector<SmallVector> sums_;
  std::vector<int> used_;
  std::set<std::vector<long>> tuples_;
};

}  // namespace

GramForm::GramForm(RatMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols() || gram_.rows() == 0)
    throw Error(ErrorKind::InvalidArgument, "Gram matrix must be square and nonempty");
  if (gram_ != gram_.transpose()) throw Error(ErrorKind::InvalidArgument, "Gram matrix is not symmetric");
  for (Eigen::Index k = 1; k <= gram_.rows(); ++k)
    if (exact_determinant<Rational>(gram_.topLeftCorner(k, k)) <= 0)
      throw Error(ErrorKind::InvalidArgument, "Gram matrix is not positive definite");
}

Rational GramForm::norm_squared(const IntVector& v) const {
  const RatVector q = v.cast<Rational>();
  return q.dot(gram_ * q);
}

std::vector<IntVector> ball_points(const GramForm& g) {
  const int m = g.rank();
  const RatMatrix inverse = exact_inverse<Rational>(g.gram());
  // max v_i^2 over v^T G v <= 1 is (G^-1)_ii.
  std::vector<long> bound(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const Rational limit = inverse(i, i);
    Integer b = sqrt(numerator(limit) / denominator(limit));
    while (Rational(b * b) < limit) ++b;
    bound[static_cast<std::size_t>(i)] = b.convert_to<long>();
  }
  double box = 1;
  for (long b : bound) box *= static_cast<double>(2 * b + 1);
  if (box > 1e7) throw Error(ErrorKind::TooLarge, "search box exceeds 10^7 points");

  std::vector<IntVector> out;
  std::vector<long> x(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) x[static_cast<std::size_t>(i)] = -bound[static_cast<std::size_t>(i)];
  for (;;) {
    IntVector v(m);
    bool zero = true;
    for (int i = 0; i < m; ++i) {
      v(i) = x[static_cast<std::size_t>(i)];
      zero = zero && x[static_cast<std::size_t>(i)] == 0;
    }
    if (!zero && g.norm_squared(v) <= 1) out.push_back(v);
    int i = m - 1;
    while (i >= 0 && x[static_cast<std::size_t>(i)] == bound[static_cast<std::size_t>(i)]) {
      x[static_cast<std::size_t>(i)] = -bound[static_cast<std::size_t>(i)];
      --i;
    }
    if (i < 0) break;
    ++x[static_cast<std::size_t>(i)];
  }
  return out;
}

PhiSystem::PhiSystem(int rank, std::vector<IntVector> vectors) : rank_(rank), vectors_(std::move(vectors)) {
  if (rank < 1) throw Error(ErrorKind::BadRank, "lattice rank must be at least 1");
  std::set<IntVector, LexLess> seen;
  for (const auto& v : vectors_) {
    if (v.size() != rank)
      throw Error(ErrorKind::InvalidArgument, "vector " + format_vector(v) + " has the wrong rank");
    if (v.isZero()) throw Error(ErrorKind::InvalidArgument, "Phi contains the zero vector");
    if (!seen.insert(v).second) throw Error(ErrorKind::InvalidArgument, "repeated vector " + format_vector(v));
    if (seen.count(IntVector(-v)))
      throw Error(ErrorKind::InvalidArgument, "Phi contains both " + format_vector(v) + " and its negative");
  }
}

PhiSystem choose_phi(int rank, const std::vector<IntVector>& points) {
  std::set<IntVector, LexLess> all(points.begin(), points.end());
  std::vector<IntVector> kept;
  for (const auto& v : points) {
    if (!all.count(IntVector(-v)))
      throw Error(ErrorKind::InvalidArgument, "input is not closed under negation at " + format_vector(v));
    Eigen::Index lead = 0;
    while (lead < v.size() && v(lead) == 0) ++lead;
    if (lead < v.size() && v(lead) > 0) kept.push_back(v);
  }
  std::sort(kept.begin(), kept.end(), LexLess{});
  kept.erase(std::unique(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return same_vector(a, b); }),
             kept.end());
  return PhiSystem(rank, std::move(kept));
}

PhiSystem rank1_phi(int t) {
  if (t < 0) throw Error(ErrorKind::InvalidArgument, "t must be nonnegative");
  std::vector<IntVector> v;
  for (long i = 1; i <= t; ++i) v.push_back(make_vector({i}));
  return PhiSystem(1, std::move(v));
}

std::set<IntVector, LexLess> signed_sums(const std::vector<IntVector>& subset, int rank) {
  std::set<IntVector, LexLess> out;
  if (subset.size() >= 8 * sizeof(unsigned long) - 1) throw Error(ErrorKind::TooLarge, "subset too large");
  for (unsigned long signs = 0; signs < (1UL << subset.size()); ++signs) {
    IntVector sum = IntVector::Zero(rank);
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (subset[i].size() != rank) throw Error(ErrorKind::InvalidArgument, "vector has the wrong rank");
      if (signs & (1UL << i))
        sum -= subset[i];
      else
        sum += subset[i];
    }
    if (!sum.isZero()) out.insert(sum);
  }
  return out;
}

Integer tuple_count(const PhiSystem& phi, int k) {
  if (k < 0 || k > phi.t())
    throw Error(ErrorKind::InvalidArgument, "k must lie in [0, t] with t = " + std::to_string(phi.t()));
  if (k == 0) return 1;
  TupleCollector collector(small_vectors(phi), phi.rank(), k);
  return Integer(collector.run());
}

Integer count_points_formula(const PhiSystem& phi, CyclotomicIndex n) {
  Integer total = 1;
  const long top = std::min<long>(phi.t(), n.value());
  for (long k = 1; k <= top; ++k) total += tuple_count(phi, static_cast<int>(k)) * binomial(n.value(), k);
  return total;
}

Integer count_points_oracle(const PhiSystem& phi, CyclotomicIndex n) {
  const long choices = 2 * n.value() + 1;
  double budget = 1;
  for (int i = 0; i < phi.t(); ++i) budget *= static_cast<double>(choices);
  if (budget > static_cast<double>(kOracleBudget))
    throw Error(ErrorKind::TooLarge, "(2n+1)^t exceeds the oracle budget of 10^6 assignments");

  const auto vectors = small_vectors(phi);
  const int m = phi.rank();
  const long width = n.value();
  // Coefficient array of x on the basis T^0..T^{n-1}, one block of m per power.
  std::vector<long> x(static_cast<std::size_t>(m * width), 0);
  std::set<std::vector<long>> distinct;

  // choice 0 is zero; 1..n are +T^{c-1}; n+1..2n are -T^{c-n-1}.
  auto apply = [&](std::size_t i, long choice, long direction) {
    if (choice == 0) return;
    const long power = (choice - 1) % width;
    const long sign = choice <= width ? 1 : -1;
    for (int j = 0; j < m; ++j) x[static_cast<std::size_t>(power * m + j)] += direction * sign * vectors[i](j);
  };
  std::vector<long> digits(vectors.size(), 0);
  for (;;) {
    distinct.insert(x);
    std::size_t i = 0;
    for (; i < digits.size(); ++i) {
      apply(i, digits[i], -1);
      if (++digits[i] < choices) {
        apply(i, digits[i], 1);
        break;
      }
      digits[i] = 0;
    }
    if (i == digits.size()) break;
  }
  return Integer(distinct.size());
}

namespace {

std::vector<CountSample> formula_samples(const PhiSystem& phi) {
  const int t = phi.t();
  std::vector<Integer> tuples;
  for (int k = 0; k <= t; ++k) tuples.push_back(tuple_count(phi, k));
  std::vector<CountSample> samples;
  for (long n = 1; n <= t + 1; ++n) {
    Integer count = 0;
    for (long k = 0; k <= std::min<long>(t, n); ++k) count += tuples[static_cast<std::size_t>(k)] * binomial(n, k);
    samples.push_back({Integer(2 * n + 1), count});
  }
  return samples;
}

}  // namespace

std::vector<Rational> rational_count_poly(const PhiSystem& phi) {
  return interpolate_rational(formula_samples(phi), phi.t());
}

CountPolynomial count_poly(const PhiSystem& phi) {
  const int t = phi.t();
  CountPolynomial poly = interpolate_count_poly(formula_samples(phi), t);
  if (poly.degree() != t || poly.coefficient(t) != 1 || poly(1) != 1)
    throw Error(ErrorKind::InconsistentSamples, "counting polynomial " + poly.to_string() +
                                                    " is not monic of degree t with N(1) = 1");
  return poly;
}

ZetaFunction zeta_rank1(int t) {
  if (t < 0 || t > 6) throw Error(ErrorKind::InvalidArgument, "t must lie in [0, 6]");
  return zeta(count_poly(rank1_phi(t)));
}

}  // namespace f1
