#include "f1geom/ffield_oracle.hpp"

#include <map>
#include <set>
#include <utility>

namespace f1 {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(long p) : p_(p) {
  if (p > 10000) throw Error(ErrorKind::TooLarge, "prime fields are limited to p <= 10^4");
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
}

long PrimeField::pow(long a, long e) const {
  long base = reduce(a);
  long result = 1 % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

long PrimeField::inverse(long a) const {
  if (reduce(a) == 0) throw Error(ErrorKind::InvalidArgument, "zero has no inverse");
  return pow(a, p_ - 2);
}

namespace {

bool advance(std::vector<long>& digits, const std::vector<long>& low, long high) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (++digits[i] < high) return true;
    digits[i] = low[i];
  }
  return false;
}

}  // namespace

Integer toric_count_fq(const Fan& f, const PrimeField& field) {
  if (auto defect = fan_defect(f)) throw Error(ErrorKind::FanError, *defect);
  const long p = field.value();
  std::set<std::pair<Cone, std::vector<long>>> points;

  for (const auto& tau : f.maximal_cones()) {
    const auto chart = dual_monoid(tau, f.rank());
    const std::size_t r = chart.affine_gens.size();
    const std::size_t s = chart.unit_gens.size();

    // Chart coordinates of a basis of sigma^perp ∩ M, for each face sigma.
    std::map<unsigned long, std::pair<Cone, std::vector<std::vector<long>>>> orbits;
    auto orbit = [&](unsigned long mask) -> const auto& {
      auto it = orbits.find(mask);
      if (it != orbits.end()) return it->second;
      Cone sigma = tau.face(mask);
      std::vector<std::vector<long>> coords;
      for (const auto& m : dual_monoid(sigma, f.rank()).unit_gens) {
        const IntVector c = chart.coordinates(m);
        std::vector<long> row(static_cast<std::size_t>(c.size()));
        for (Eigen::Index i = 0; i < c.size(); ++i) row[static_cast<std::size_t>(i)] = c(i).convert_to<long>();
        coords.push_back(std::move(row));
      }
      return orbits.emplace(mask, std::make_pair(std::move(sigma), std::move(coords))).first->second;
    };

    std::vector<long> low(r, 0);
    low.insert(low.end(), s, 1);
    std::vector<long> values = low;
    do {
      unsigned long mask = 0;
      for (std::size_t a = 0; a < r; ++a)
        if (values[a] == 0) mask |= 1UL << a;
      const auto& [sigma, coords] = orbit(mask);
      std::vector<long> torus;
      torus.reserve(coords.size());
      for (const auto& c : coords) {
        long v = 1;
        for (std::size_t i = 0; i < r + s; ++i) {
          if (c[i] == 0) continue;
          const long base = c[i] > 0 ? values[i] : field.inverse(values[i]);
          v = field.mul(v, field.pow(base, c[i] > 0 ? c[i] : -c[i]));
        }
        torus.push_back(v);
      }
      points.emplace(sigma, std::move(torus));
    } while (advance(values, low, p));
  }
  return Integer(points.size());
}

namespace {

// Calls visit(x) for one representative (first nonzero coordinate 1) of each
// point of P^{dim-1}(F_p).
template <typename Visit>
void for_each_projective_point(int dim, const PrimeField& field, Visit&& visit) {
  const long p = field.value();
  std::vector<long> x(static_cast<std::size_t>(dim), 0);
  const std::vector<long> low(static_cast<std::size_t>(dim), 0);
  do {
    std::size_t lead = 0;
    while (lead < x.size() && x[lead] == 0) ++lead;
    if (lead == x.size() || x[lead] != 1) continue;
    visit(x);
  } while (advance(x, low, p));
}

}  // namespace

Integer quadric_count_fq(const PrimeField& field) {
  if (field.value() > 11) throw Error(ErrorKind::TooLarge, "quadric enumeration is limited to p <= 11");
  Integer count = 0;
  for_each_projective_point(6, field, [&](const std::vector<long>& c) {
    // (x, y, z, t, u, v)
    if (field.reduce(c[0] * c[1] - c[2] * c[3] + c[4] * c[5]) == 0) ++count;
  });
  return count;
}

std::array<Integer, 4> quadric_stratum_counts_fq(const PrimeField& field) {
  if (field.value() > 11) throw Error(ErrorKind::TooLarge, "quadric enumeration is limited to p <= 11");
  std::array<Integer, 4> counts{0, 0, 0, 0};
  for_each_projective_point(6, field, [&](const std::vector<long>& c) {
    if (field.reduce(c[0] * c[1] - c[2] * c[3] + c[4] * c[5]) != 0) return;
    const long x = c[0], z = c[2], u = c[4];
    if (x != 0)
      ++counts[0];
    else if (z != 0)
      ++counts[1];
    else if (u != 0)
      ++counts[2];
    else
      ++counts[3];
  });
  return counts;
}

Integer projective_count_fq(int d, const PrimeField& field) {
  if (d < 0) throw Error(ErrorKind::BadRank, "negative projective dimension");
  const long p = field.value();
  double size = 1;
  for (int i = 0; i <= d; ++i) size *= static_cast<double>(p);
  if (size > 1e7) throw Error(ErrorKind::TooLarge, "p^(d+1) exceeds 10^7");

  std::set<std::vector<long>> classes;
  std::vector<long> x(static_cast<std::size_t>(d) + 1, 0);
  const std::vector<long> low(x.size(), 0);
  while (advance(x, low, p)) {  // skips the zero vector
    std::size_t lead = 0;
    while (x[lead] == 0) ++lead;
    const long scale = field.inverse(x[lead]);
    std::vector<long> rep(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) rep[i] = field.mul(x[i], scale);
    classes.insert(std::move(rep));
  }
  return Integer(classes.size());
}

std::vector<OracleComparison> compare_with_oracle(const CountPolynomial& formula, const Fan& f,
                                                  const std::vector<long>& primes) {
  std::vector<OracleComparison> out;
  for (long p : primes) {
    const PrimeField field(p);
    out.push_back({p, formula(Integer(p)), toric_count_fq(f, field)});
  }
  return out;
}

}  // namespace f1
