#pragma once

// Exact lattice linear algebra on Eigen dense matrices. Integer routines are
// templated on any signed integral scalar (mpz_int, long long); rational
// routines on any exact field scalar (mpq_rational).

#include "f1geom/core.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace f1 {

template <typename Scalar>
Scalar abs_value(const Scalar& a) {
  return a < 0 ? Scalar(-a) : a;
}

template <typename Scalar>
Scalar gcd_value(Scalar a, Scalar b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Scalar r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Floor of a / b for b > 0.
template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if (a % b != 0 && a < 0) q -= 1;
  return q;
}

template <typename Scalar>
struct HermiteForm {
  Matrix<Scalar> form;        // row echelon, positive pivots, reduced above pivots
  Matrix<Scalar> transform;   // unimodular, transform * input = form
  Eigen::Index rank = 0;
  std::vector<Eigen::Index> pivot_columns;
};

/// Row-style Hermite normal form U * A = H computed with Euclidean row moves.
template <typename Scalar>
HermiteForm<Scalar> row_hermite_form(const Matrix<Scalar>& a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  HermiteForm<Scalar> out;
  out.form = a;
  out.transform = Matrix<Scalar>::Identity(rows, rows);
  auto& h = out.form;
  auto& u = out.transform;

  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    for (;;) {
      Eigen::Index best = -1;
      for (Eigen::Index i = row; i < rows; ++i) {
        if (h(i, col) == 0) continue;
        if (best < 0 || abs_value<Scalar>(h(i, col)) < abs_value<Scalar>(h(best, col))) best = i;
      }
      if (best < 0) break;
      if (best != row) {
        h.row(best).swap(h.row(row));
        u.row(best).swap(u.row(row));
      }
      bool cleared = true;
      for (Eigen::Index i = row + 1; i < rows; ++i) {
        if (h(i, col) == 0) continue;
        Scalar q = h(i, col) / h(row, col);
        h.row(i) -= q * h.row(row);
        u.row(i) -= q * u.row(row);
        if (h(i, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      h.row(row) = -h.row(row);
      u.row(row) = -u.row(row);
    }
    for (Eigen::Index i = 0; i < row; ++i) {
      Scalar q = floor_div<Scalar>(h(i, col), h(row, col));
      if (q == 0) continue;
      h.row(i) -= q * h.row(row);
      u.row(i) -= q * u.row(row);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

/// Column-style form A * V = L with L lower echelon; V unimodular.
template <typename Scalar>
HermiteForm<Scalar> column_hermite_form(const Matrix<Scalar>& a) {
  Matrix<Scalar> at = a.transpose();
  HermiteForm<Scalar> rows = row_hermite_form<Scalar>(at);
  HermiteForm<Scalar> out;
  out.form = rows.form.transpose();
  out.transform = rows.transform.transpose();
  out.rank = rows.rank;
  out.pivot_columns = std::move(rows.pivot_columns);
  return out;
}

/// Z-basis (as columns, Hermite-reduced) of { x in Z^n : A x = 0 }.
template <typename Scalar>
Matrix<Scalar> integer_kernel(const Matrix<Scalar>& a) {
  const Eigen::Index n = a.cols();
  if (a.rows() == 0) return Matrix<Scalar>::Identity(n, n);
  HermiteForm<Scalar> col = column_hermite_form<Scalar>(a);
  const Eigen::Index k = n - col.rank;
  if (k == 0) return Matrix<Scalar>(n, 0);
  Matrix<Scalar> basis = col.transform.rightCols(k);
  Matrix<Scalar> rows = basis.transpose();
  return row_hermite_form<Scalar>(rows).form.transpose();
}

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
template <typename Scalar>
std::vector<Scalar> elementary_divisors(const Matrix<Scalar>& a) {
  Matrix<Scalar> m = a;
  auto off_diagonal_zero = [](const Matrix<Scalar>& x) {
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      for (Eigen::Index j = 0; j < x.cols(); ++j)
        if (i != j && x(i, j) != 0) return false;
    return true;
  };
  while (!off_diagonal_zero(m)) {
    m = row_hermite_form<Scalar>(m).form;
    if (off_diagonal_zero(m)) break;
    m = column_hermite_form<Scalar>(m).form;
  }
  std::vector<Scalar> diag;
  for (Eigen::Index i = 0; i < std::min(m.rows(), m.cols()); ++i)
    if (m(i, i) != 0) diag.push_back(abs_value<Scalar>(m(i, i)));
  // Enforce the divisibility chain.
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      Scalar g = gcd_value(diag[i], diag[j]);
      Scalar l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  }
  return diag;
}

/// Reduced row echelon form over a field; returns the pivot columns.
template <typename Scalar>
std::vector<Eigen::Index> reduce_row_echelon(Matrix<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = -1;
    for (Eigen::Index i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row) m.row(p).swap(m.row(row));
    Scalar inv = Scalar(1) / m(row, col);
    m.row(row) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Scalar f = m(i, col);
      m.row(i) -= f * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Scalar>
Eigen::Index exact_rank(Matrix<Scalar> m) {
  return static_cast<Eigen::Index>(reduce_row_echelon(m).size());
}

/// Basis (columns) of the right null space over the field.
template <typename Scalar>
Matrix<Scalar> field_kernel(Matrix<Scalar> m) {
  const auto pivots = reduce_row_echelon(m);
  const Eigen::Index n = m.cols();
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0, p = 0; c < n; ++c) {
    if (p < static_cast<Eigen::Index>(pivots.size()) && pivots[p] == c)
      ++p;
    else
      free_cols.push_back(c);
  }
  Matrix<Scalar> basis = Matrix<Scalar>::Zero(n, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Eigen::Index f = free_cols[k];
    basis(f, static_cast<Eigen::Index>(k)) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], static_cast<Eigen::Index>(k)) = -m(static_cast<Eigen::Index>(r), f);
  }
  return basis;
}

/// Fraction-free (Bareiss) elimination; exact over integral domains and fields.
template <typename Scalar>
Scalar exact_determinant(Matrix<Scalar> m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Scalar sign = 1;
  Scalar previous = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index p = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return Scalar(0);
      m.row(p).swap(m.row(k));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

template <typename Scalar>
Matrix<Scalar> exact_inverse(const Matrix<Scalar>& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw Error(ErrorKind::InvalidArgument, "inverse of a non-square matrix");
  Matrix<Scalar> aug(n, 2 * n);
  aug << a, Matrix<Scalar>::Identity(n, n);
  const auto pivots = reduce_row_echelon(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || (n > 0 && pivots[n - 1] != n - 1))
    throw Error(ErrorKind::InvalidArgument, "singular matrix");
  return aug.rightCols(n);
}

inline RatMatrix to_rational(const IntMatrix& m) { return m.cast<Rational>(); }

/// Converts back to integers; throws if any entry is not integral.
IntMatrix to_integer(const RatMatrix& m);

/// Inverse of a unimodular integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace f1
