#include "f1geom/integer_matrix.hpp"

namespace f1 {

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Rational& q = m(i, j);
      if (denominator(q) != 1)
        throw Error(ErrorKind::NonIntegralCoefficient, "matrix entry is not an integer");
      out(i, j) = numerator(q);
    }
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  return to_integer(exact_inverse<Rational>(to_rational(m)));
}

}  // namespace f1
