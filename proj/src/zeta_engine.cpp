#include "f1geom/zeta_engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace f1 {

CountPolynomial::CountPolynomial(std::vector<Integer> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

CountPolynomial CountPolynomial::torus(int k) {
  CountPolynomial out = constant(1);
  const CountPolynomial factor({-1, 1});
  for (int i = 0; i < k; ++i) out = out * factor;
  return out;
}

void CountPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Integer CountPolynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coefficients_[static_cast<std::size_t>(i)];
}

Integer CountPolynomial::operator()(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

CountPolynomial& CountPolynomial::operator+=(const CountPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size(), 0);
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  trim();
  return *this;
}

CountPolynomial operator*(const CountPolynomial& a, const CountPolynomial& b) {
  if (a.coefficients_.empty() || b.coefficients_.empty()) return {};
  std::vector<Integer> c(a.coefficients_.size() + b.coefficients_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) c[i + j] += a.coefficients_[i] * b.coefficients_[j];
  return CountPolynomial(std::move(c));
}

std::string CountPolynomial::to_string() const {
  if (coefficients_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Integer c = coefficients_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    if (c != 1 || i == 0) out << c;
    if (i >= 1) out << 'x';
    if (i >= 2) out << '^' << i;
    first = false;
  }
  return out.str();
}

double ZetaFunction::operator()(double s) const {
  double value = 1.0;
  for (const auto& f : factors) value *= std::pow(s - static_cast<double>(f.root), f.multiplicity.convert_to<double>());
  return value;
}

std::string ZetaFunction::to_string() const {
  auto term = [](long root) { return root == 0 ? std::string("s") : "(s-" + std::to_string(root) + ")"; };
  auto side = [&](bool numerator) {
    std::string out;
    for (const auto& f : factors) {
      if ((f.multiplicity > 0) != numerator) continue;
      const Integer e = f.multiplicity > 0 ? f.multiplicity : Integer(-f.multiplicity);
      out += term(f.root);
      if (e != 1) out += "^" + e.str();
    }
    return out;
  };
  std::string num = side(true);
  std::string den = side(false);
  if (num.empty()) num = "1";
  return den.empty() ? num : num + "/" + den;
}

ZetaFunction operator*(const ZetaFunction& a, const ZetaFunction& b) {
  std::map<long, Integer> merged;
  for (const auto& f : a.factors) merged[f.root] += f.multiplicity;
  for (const auto& f : b.factors) merged[f.root] += f.multiplicity;
  ZetaFunction out;
  for (const auto& [root, m] : merged)
    if (m != 0) out.factors.push_back({root, m});
  return out;
}

CountPolynomial chart_count_poly(const Cone& c, int rank) {
  const auto m = dual_monoid(c, rank);
  CountPolynomial affine = CountPolynomial::constant(1);
  for (std::size_t i = 0; i < m.affine_gens.size(); ++i) affine = affine * CountPolynomial::x();
  return affine * CountPolynomial::torus(static_cast<int>(m.unit_gens.size()));
}

CountPolynomial fan_count_poly(const Fan& f) {
  CountPolynomial out;
  for (const auto& sigma : f.cones()) out += CountPolynomial::torus(f.rank() - sigma.dim());
  return out;
}

ZetaFunction zeta(const CountPolynomial& n) {
  ZetaFunction out;
  for (int i = 0; i <= n.degree(); ++i)
    if (n.coefficient(i) != 0) out.factors.push_back({i, n.coefficient(i)});
  return out;
}

Integer euler_char(const CountPolynomial& n) { return n(1); }

double weil_limit(const CountPolynomial& n, double s, double eps) {
  if (!(eps > 0.0 && eps < 0.1)) throw Error(ErrorKind::InvalidArgument, "eps must lie in (0, 0.1)");
  for (int i = 0; i <= n.degree(); ++i) {
    if (n.coefficient(i) == 0 || s != static_cast<double>(i)) continue;
    if (n.coefficient(i) < 0) throw Error(ErrorKind::PoleAt, "zeta has a pole at s = " + std::to_string(i));
    return 0.0;
  }
  // Z(q, q^-s)^-1 (q-1)^-chi = prod_i ((1 - q^(i-s)) / (q-1))^(a_i) since
  // sum a_i = chi; each factor tends to s - i.
  int sign = 1;
  auto log_modulus = [&](double e) {
    const double log_q = std::log1p(e);
    double acc = 0.0;
    for (int i = 0; i <= n.degree(); ++i) {
      const Integer& a = n.coefficient(i);
      if (a == 0) continue;
      const double factor = -std::expm1((static_cast<double>(i) - s) * log_q) / e;
      acc += a.convert_to<double>() * std::log(std::abs(factor));
    }
    return acc;
  };
  for (int i = 0; i <= n.degree(); ++i)
    if (n.coefficient(i) % 2 != 0 && s < static_cast<double>(i)) sign = -sign;
  const double extrapolated = 2.0 * log_modulus(eps / 2.0) - log_modulus(eps);
  return sign * std::exp(extrapolated);
}

std::vector<Rational> interpolate_rational(const std::vector<CountSample>& samples, int degree_bound) {
  if (degree_bound < 0) throw Error(ErrorKind::InvalidArgument, "negative degree bound");
  const std::size_t needed = static_cast<std::size_t>(degree_bound) + 1;
  if (samples.size() < needed)
    throw Error(ErrorKind::InvalidArgument,
                "need " + std::to_string(needed) + " samples, got " + std::to_string(samples.size()));
  std::set<Integer> xs;
  for (const auto& s : samples)
    if (!xs.insert(s.x).second) throw Error(ErrorKind::InvalidArgument, "repeated sample point x = " + s.x.str());

  // Lagrange basis over Q, accumulated in the monomial basis.
  std::vector<Rational> coeffs(needed, 0);
  for (std::size_t j = 0; j < needed; ++j) {
    std::vector<Rational> basis{1};
    Rational denom = 1;
    for (std::size_t m = 0; m < needed; ++m) {
      if (m == j) continue;
      std::vector<Rational> next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * Rational(samples[m].x);
      }
      basis = std::move(next);
      denom *= Rational(samples[j].x - samples[m].x);
    }
    const Rational scale = Rational(samples[j].count) / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += basis[k] * scale;
  }
  for (std::size_t j = needed; j < samples.size(); ++j) {
    Rational value = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * Rational(samples[j].x) + *it;
    if (value != Rational(samples[j].count))
      throw Error(ErrorKind::InconsistentSamples, "sample at x = " + samples[j].x.str() + " gives " +
                                                      samples[j].count.str() + " but the interpolant gives " +
                                                      value.str());
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

CountPolynomial interpolate_count_poly(const std::vector<CountSample>& samples, int degree_bound) {
  const auto coeffs = interpolate_rational(samples, degree_bound);
  std::vector<Integer> integral;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (denominator(coeffs[k]) != 1)
      throw Error(ErrorKind::NonIntegralCoefficient,
                  "coefficient of x^" + std::to_string(k) + " is " + coeffs[k].str());
    integral.push_back(numerator(coeffs[k]));
  }
  return CountPolynomial(std::move(integral));
}

}  // namespace f1
