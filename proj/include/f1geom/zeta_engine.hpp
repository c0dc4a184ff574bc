#pragma once

#include "f1geom/lattice_fan.hpp"

#include <string>
#include <vector>

namespace f1 {

/// N(x) = a_0 + a_1 x + ... + a_d x^d with trailing zeros trimmed.
class CountPolynomial {
 public:
  CountPolynomial() = default;
  explicit CountPolynomial(std::vector<Integer> coefficients);

  static CountPolynomial constant(const Integer& c) { return CountPolynomial({c}); }
  static CountPolynomial x() { return CountPolynomial({0, 1}); }
  /// (x - 1)^k.
  static CountPolynomial torus(int k);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<Integer>& coefficients() const noexcept { return coefficients_; }
  Integer coefficient(int i) const;

  Integer operator()(const Integer& x) const;

  CountPolynomial& operator+=(const CountPolynomial& other);
  friend CountPolynomial operator+(CountPolynomial a, const CountPolynomial& b) { return a += b; }
  friend CountPolynomial operator*(const CountPolynomial& a, const CountPolynomial& b);
  friend bool operator==(const CountPolynomial& a, const CountPolynomial& b) = default;

  /// Human form, e.g. "x^2 + x + 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coefficients_;
};

struct ZetaFactor {
  long root = 0;
  Integer multiplicity;

  friend bool operator==(const ZetaFactor&, const ZetaFactor&) = default;
};

/// prod_i (s - i)^{a_i}: roots strictly increasing, multiplicities nonzero.
struct ZetaFunction {
  std::vector<ZetaFactor> factors;

  double operator()(double s) const;

  /// Human form, e.g. "s(s-2)/(s-1)".
  std::string to_string() const;

  friend ZetaFunction operator*(const ZetaFunction& a, const ZetaFunction& b);
  friend bool operator==(const ZetaFunction&, const ZetaFunction&) = default;
};

/// x^A (x-1)^B for A affine and B unit generators of dual_monoid(c).
CountPolynomial chart_count_poly(const Cone& c, int rank);

/// Orbit sum over the fan: sum over sigma of (x-1)^(d - dim sigma).
CountPolynomial fan_count_poly(const Fan& f);

ZetaFunction zeta(const CountPolynomial& n);

/// N(1).
Integer euler_char(const CountPolynomial& n);

/// Numerical q -> 1 limit of Z(q, q^-s)^-1 (q-1)^-chi at q = 1 + eps with one
/// Richardson step (eps, eps/2), taken on the logarithm of the modulus.
/// Throws PoleAt when s hits a root of negative multiplicity.
double weil_limit(const CountPolynomial& n, double s, double eps = 1e-4);

struct CountSample {
  Integer x;
  Integer count;
};

/// Exact rational Lagrange interpolation through the first degree_bound + 1
/// samples, low-to-high coefficients, trailing zeros trimmed. Extra samples
/// must agree (InconsistentSamples).
std::vector<Rational> interpolate_rational(const std::vector<CountSample>& samples, int degree_bound);

/// Exact Lagrange interpolation through the first degree_bound + 1 samples;
/// any extra samples must agree. Throws NonIntegralCoefficient,
/// InconsistentSamples, or InvalidArgument (too few / repeated x).
CountPolynomial interpolate_count_poly(const std::vector<CountSample>& samples, int degree_bound);

}  // namespace f1
