#include "f1geom/f1_points.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace f1 {

namespace {

long mod_exponent(const Integer& e, long n) {
  Integer r = e % n;
  if (r < 0) r += n;
  return r.convert_to<long>();
}

// Advances a mixed-radix counter; false once it wraps around.
bool next_assignment(std::vector<std::size_t>& digits, const std::vector<std::size_t>& radix) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (++digits[i] < radix[i]) return true;
    digits[i] = 0;
  }
  return false;
}

// Canonicalizes points of one chart; caches the orbit bases per support.
class ChartCanonicalizer {
 public:
  explicit ChartCanonicalizer(std::shared_ptr<const MonoidPresentation> chart) : chart_(std::move(chart)) {}

  OrbitPoint operator()(const ChartPoint& p) {
    unsigned long mask = 0;
    for (std::size_t a = 0; a < p.affine_values.size(); ++a)
      if (!p.affine_values[a]) mask |= 1UL << a;
    const Orbit& orbit = lookup(mask);
    const long n = p.n.value();
    OrbitPoint out{orbit.support, {}, n};
    out.torus_values.reserve(orbit.coords.size());
    for (const auto& c : orbit.coords) {
      MuElement value;
      const Eigen::Index r = static_cast<Eigen::Index>(p.affine_values.size());
      for (Eigen::Index a = 0; a < r; ++a) {
        if (c(a) == 0) continue;
        value = mu_multiply(value, mu_power(*p.affine_values[a], c(a), p.n), p.n);
      }
      for (std::size_t u = 0; u < p.unit_values.size(); ++u) {
        const Integer& e = c(r + static_cast<Eigen::Index>(u));
        if (e == 0) continue;
        value = mu_multiply(value, mu_power(p.unit_values[u], e, p.n), p.n);
      }
      out.torus_values.push_back(value);
    }
    return out;
  }

 private:
  struct Orbit {
    Cone support;
    std::vector<IntVector> coords;  // chart coordinates of the orbit basis
  };

  const Orbit& lookup(unsigned long mask) {
    auto it = cache_.find(mask);
    if (it != cache_.end()) return it->second;
    Orbit orbit;
    orbit.support = chart_->cone.face(mask);
    const auto basis = dual_monoid(orbit.support, chart_->rank);
    for (const auto& m : basis.unit_gens) orbit.coords.push_back(chart_->coordinates(m));
    return cache_.emplace(mask, std::move(orbit)).first->second;
  }

  std::shared_ptr<const MonoidPresentation> chart_;
  std::map<unsigned long, Orbit> cache_;
};

}  // namespace

CyclotomicIndex::CyclotomicIndex(long n) : n_(n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1, got " + std::to_string(n));
}

std::vector<MuElement> mu_elements(CyclotomicIndex n) {
  std::vector<MuElement> out;
  out.reserve(2 * static_cast<std::size_t>(n.value()));
  for (int sign : {1, -1})
    for (long i = 0; i < n.value(); ++i) out.push_back({sign, i});
  return out;
}

MuElement mu_multiply(const MuElement& a, const MuElement& b, CyclotomicIndex n) {
  return {a.sign * b.sign, (a.exponent + b.exponent) % n.value()};
}

MuElement mu_power(const MuElement& a, const Integer& k, CyclotomicIndex n) {
  const int sign = (a.sign < 0 && (k % 2 != 0)) ? -1 : 1;
  return {sign, mod_exponent(Integer(a.exponent) * k, n.value())};
}

std::complex<double> mu_embed(const MuElement& a, long k, CyclotomicIndex n) {
  const long e = (a.exponent * (k % n.value())) % n.value();
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(n.value());
  return static_cast<double>(a.sign) * std::polar(1.0, angle);
}

std::vector<ChartPoint> chart_points(const MonoidPresentation& chart, CyclotomicIndex n) {
  auto shared = std::make_shared<const MonoidPresentation>(chart);
  const auto units = mu_elements(n);
  std::vector<MuOrZero> affine_choices;
  affine_choices.emplace_back(std::nullopt);
  for (const auto& u : units) affine_choices.emplace_back(u);

  const std::size_t r = chart.affine_gens.size();
  const std::size_t s = chart.unit_gens.size();
  std::vector<std::size_t> radix(r, affine_choices.size());
  radix.insert(radix.end(), s, units.size());
  std::vector<std::size_t> digits(r + s, 0);

  std::vector<ChartPoint> out;
  do {
    ChartPoint p{shared, {}, {}, n};
    p.affine_values.reserve(r);
    p.unit_values.reserve(s);
    for (std::size_t a = 0; a < r; ++a) p.affine_values.push_back(affine_choices[digits[a]]);
    for (std::size_t u = 0; u < s; ++u) p.unit_values.push_back(units[digits[r + u]]);
    out.push_back(std::move(p));
  } while (next_assignment(digits, radix));
  return out;
}

std::vector<OrbitPoint> orbit_points(const Fan& f, CyclotomicIndex n) {
  const auto units = mu_elements(n);
  std::vector<OrbitPoint> out;
  for (const auto& sigma : f.cones()) {
    const std::size_t free = static_cast<std::size_t>(f.rank() - sigma.dim());
    std::vector<std::size_t> radix(free, units.size());
    std::vector<std::size_t> digits(free, 0);
    do {
      OrbitPoint p{sigma, {}, n.value()};
      for (std::size_t i = 0; i < free; ++i) p.torus_values.push_back(units[digits[i]]);
      out.push_back(std::move(p));
    } while (next_assignment(digits, radix));
  }
  return out;
}

OrbitPoint canonical_point(const ChartPoint& p) { return ChartCanonicalizer(p.chart)(p); }

std::set<OrbitPoint> glued_points(const Fan& f, CyclotomicIndex n) {
  std::set<OrbitPoint> out;
  for (const auto& tau : f.maximal_cones()) {
    const auto points = chart_points(dual_monoid(tau, f.rank()), n);
    if (points.empty()) continue;
    ChartCanonicalizer canonical(points.front().chart);
    for (const auto& p : points) out.insert(canonical(p));
  }
  return out;
}

std::complex<double> evaluate(const ChartPoint& p, long k, const LatticeVector& m) {
  if (k < 0 || k >= p.n.value())
    throw Error(ErrorKind::InvalidArgument, "embedding index " + std::to_string(k) + " outside [0, n)");
  const IntVector c = p.chart->coordinates(m);
  const Eigen::Index r = static_cast<Eigen::Index>(p.affine_values.size());
  for (Eigen::Index a = 0; a < r; ++a)
    if (c(a) < 0) throw Error(ErrorKind::NotInMonoid, format_vector(m) + " is negative on a ray of the cone");
  MuElement value;
  for (Eigen::Index a = 0; a < r; ++a) {
    if (c(a) == 0) continue;
    if (!p.affine_values[a]) return {0.0, 0.0};
    value = mu_multiply(value, mu_power(*p.affine_values[a], c(a), p.n), p.n);
  }
  for (std::size_t u = 0; u < p.unit_values.size(); ++u)
    value = mu_multiply(value, mu_power(p.unit_values[u], c(r + static_cast<Eigen::Index>(u)), p.n), p.n);
  return mu_embed(value, k, p.n);
}

bool in_compact(const ChartPoint& p, long k) {
  auto inside = [&](const LatticeVector& m) { return std::abs(evaluate(p, k, m)) <= 1.0 + kCompactTolerance; };
  for (const auto& m : p.chart->affine_gens)
    if (!inside(m)) return false;
  for (const auto& m : p.chart->unit_gens)
    if (!inside(m) || !inside(-m)) return false;
  return true;
}

OrbitPoint reduce_degree(const OrbitPoint& p, CyclotomicIndex m) {
  if (p.n % m.value() != 0)
    throw Error(ErrorKind::InvalidArgument,
                std::to_string(m.value()) + " does not divide " + std::to_string(p.n));
  OrbitPoint out{p.support, {}, m.value()};
  for (const auto& v : p.torus_values) out.torus_values.push_back({v.sign, v.exponent % m.value()});
  return out;
}

}  // namespace f1
