#pragma once

#include "greenring/cyclotomic.hpp"
#include "greenring/error.hpp"
#include "greenring/numeric.hpp"

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include <vector>

namespace greenring {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Index = Eigen::Index;
using IntMatrix = Mat<BigInt>;
using IntVector = Vec<BigInt>;
using RatMatrix = Mat<Rational>;

template <typename Scalar>
struct RowEchelon {
  Mat<Scalar> reduced;          // reduced row echelon form
  std::vector<Index> pivots;    // pivot column of each nonzero row
};

inline Rational field_inverse(const Rational& x) { return Rational(1) / x; }
inline Cyclotomic field_inverse(const Cyclotomic& x) { return x.inverse(); }

/// Gauss-Jordan elimination over an exact field (Rational or Cyclotomic).
template <typename Scalar>
RowEchelon<Scalar> rref(Mat<Scalar> a) {
  RowEchelon<Scalar> out;
  const Index rows = a.rows();
  const Index cols = a.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && is_zero(a(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Scalar inv = field_inverse(a(r, c));
    for (Index k = c; k < cols; ++k)
      if (!is_zero(a(r, k))) a(r, k) = a(r, k) * inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const Scalar f = a(i, c);
      for (Index k = c; k < cols; ++k)
        if (!is_zero(a(r, k))) a(i, k) -= f * a(r, k);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

template <typename Scalar>
Index rank(const Mat<Scalar>& a) {
  return static_cast<Index>(rref<Scalar>(a).pivots.size());
}

/// A basis of a subspace as the columns of `basis`, normalised so that the
/// rows listed in `pivot_rows` form an identity block. Coordinates of a vector
/// v in the subspace are then simply v[pivot_rows].
template <typename Scalar>
struct SubspaceBasis {
  Mat<Scalar> basis;
  std::vector<Index> pivot_rows;
  Index dim() const { return basis.cols(); }
};

template <typename Scalar>
SubspaceBasis<Scalar> column_space(const Mat<Scalar>& a) {
  RowEchelon<Scalar> e = rref<Scalar>(a.transpose());
  const Index r = static_cast<Index>(e.pivots.size());
  SubspaceBasis<Scalar> out;
  out.basis = e.reduced.topRows(r).transpose();
  out.pivot_rows = e.pivots;
  return out;
}

template <typename Scalar>
SubspaceBasis<Scalar> null_space(const Mat<Scalar>& a) {
  RowEchelon<Scalar> e = rref<Scalar>(a);
  const Index cols = a.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  SubspaceBasis<Scalar> out;
  std::vector<Index> free;
  for (Index c = 0; c < cols; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
  out.basis = Mat<Scalar>::Zero(cols, static_cast<Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    const Index f = free[k];
    out.basis(f, static_cast<Index>(k)) = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      const Scalar& v = e.reduced(static_cast<Index>(r), f);
      if (!is_zero(v)) out.basis(e.pivots[r], static_cast<Index>(k)) = -v;
    }
  }
  out.pivot_rows = std::move(free);
  return out;
}

/// Trace of the restriction of `op` to an op-invariant subspace.
template <typename Scalar>
Scalar restricted_trace(const Mat<Scalar>& op, const SubspaceBasis<Scalar>& w) {
  Scalar t(0);
  for (Index k = 0; k < w.dim(); ++k) {
    const Index row = w.pivot_rows[static_cast<std::size_t>(k)];
    for (Index j = 0; j < op.cols(); ++j) {
      if (is_zero(op(row, j)) || is_zero(w.basis(j, k))) continue;
      t += op(row, j) * w.basis(j, k);
    }
  }
  return t;
}

/// Inverse over an exact field; throws DivisionByZero when singular.
template <typename Scalar>
Mat<Scalar> inverse(const Mat<Scalar>& a) {
  const Index n = a.rows();
  if (a.cols() != n) throw Error(ErrorKind::Domain, "inverse of a non-square matrix");
  Mat<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = Mat<Scalar>::Identity(n, n);
  RowEchelon<Scalar> e = rref<Scalar>(std::move(aug));
  if (static_cast<Index>(e.pivots.size()) < n || (n > 0 && e.pivots[static_cast<std::size_t>(n - 1)] != n - 1))
    throw Error(ErrorKind::DivisionByZero, "singular matrix");
  return e.reduced.rightCols(n);
}

/// Sparse-aware product; Eigen's GEMM does not skip exact zeros.
template <typename Scalar>
Mat<Scalar> multiply(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  Mat<Scalar> c = Mat<Scalar>::Zero(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (Index j = 0; j < b.cols(); ++j)
        if (!is_zero(b(k, j))) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <typename Scalar>
Mat<Scalar> kronecker(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  Mat<Scalar> c = Mat<Scalar>::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l)
          if (!is_zero(b(k, l))) c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return c;
}

template <typename Scalar>
bool is_zero_matrix(const Mat<Scalar>& a) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j))) return false;
  return true;
}

template <typename Scalar>
Scalar trace(const Mat<Scalar>& a) {
  Scalar t(0);
  for (Index i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
Index integer_rank(IntMatrix a);

/// Determinant of a square integer matrix by Bareiss elimination.
BigInt integer_determinant(IntMatrix a);

/// Inverse of a unimodular integer matrix; throws Domain otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

}  // namespace greenring
