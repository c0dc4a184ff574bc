#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <string>

namespace f1 {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

/// A point of N = Z^d or of its dual M; the container fixes which.
using LatticeVector = IntVector;

enum class ErrorKind {
  DegenerateRay,
  NotRegular,
  BadRank,
  NotInMonoid,
  PoleAt,
  NonIntegralCoefficient,
  InconsistentSamples,
  TooLarge,
  InvalidArgument,
  FanError,
  ParseError,
  OracleMismatch,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Lexicographic order on equal-length vectors; shorter vectors sort first.
template <typename Derived1, typename Derived2>
bool lex_less(const Eigen::MatrixBase<Derived1>& a, const Eigen::MatrixBase<Derived2>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return false;
}

struct LexLess {
  template <typename A, typename B>
  bool operator()(const A& a, const B& b) const {
    return lex_less(a, b);
  }
};

template <typename Derived1, typename Derived2>
bool same_vector(const Eigen::MatrixBase<Derived1>& a, const Eigen::MatrixBase<Derived2>& b) {
  return a.size() == b.size() && (a.size() == 0 || a == b);
}

IntVector make_vector(std::initializer_list<long> coords);

std::string format_vector(const IntVector& v);

}  // namespace f1
