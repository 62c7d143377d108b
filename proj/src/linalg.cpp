#include "greenring/linalg.hpp"

namespace greenring {
namespace {

// Bareiss elimination in place; returns the rank and the sign of the row
// permutation applied.
Index bareiss(IntMatrix& a, int& sign) {
  const Index rows = a.rows();
  const Index cols = a.cols();
  sign = 1;
  BigInt prev = 1;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      a.row(p).swap(a.row(r));
      sign = -sign;
    }
    for (Index i = r + 1; i < rows; ++i) {
      for (Index k = c + 1; k < cols; ++k) a(i, k) = (a(i, k) * a(r, c) - a(i, c) * a(r, k)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

}  // namespace

Index integer_rank(IntMatrix a) {
  int sign = 1;
  return bareiss(a, sign);
}

BigInt integer_determinant(IntMatrix a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::Domain, "determinant of a non-square matrix");
  const Index n = a.rows();
  if (n == 0) return BigInt(1);
  int sign = 1;
  if (bareiss(a, sign) < n) return BigInt(0);
  return sign * a(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  RatMatrix q = a.cast<Rational>();
  RatMatrix inv = inverse<Rational>(q);
  IntMatrix out(inv.rows(), inv.cols());
  for (Index i = 0; i < inv.rows(); ++i)
    for (Index j = 0; j < inv.cols(); ++j)
      if (!rational_to_integer(inv(i, j), out(i, j)))
        throw Error(ErrorKind::Domain, "matrix is not unimodular");
  return out;
}

}  // namespace greenring
