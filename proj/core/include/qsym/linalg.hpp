#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "qsym/error.hpp"
#include "qsym/qscalar.hpp"

namespace qsym {

template <class R>
using Matrix = std::vector<std::vector<R>>;

// Division-free determinant (Berkowitz).  Works over any commutative ring
// constructible from long; used for SymPoly matrices.
template <class R>
R det_berkowitz(const Matrix<R>& A) {
  const int n = static_cast<int>(A.size());
  if (n == 0) return R(1);
  std::vector<R> p = {R(1), -A[0][0]};
  for (int r = 1; r < n; ++r) {
    std::vector<R> t(static_cast<std::size_t>(r) + 2, R(0));
    t[0] = R(1);
    t[1] = -A[r][r];
    std::vector<R> v(r);
    for (int i = 0; i < r; ++i) v[i] = A[i][r];
    for (int k = 0; k < r; ++k) {
      R dot(0);
      for (int i = 0; i < r; ++i) dot = dot + A[r][i] * v[i];
      t[k + 2] = -dot;
      if (k + 1 < r) {
        std::vector<R> w(r, R(0));
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) w[i] = w[i] + A[i][j] * v[j];
        v = std::move(w);
      }
    }
    std::vector<R> np(static_cast<std::size_t>(r) + 2, R(0));
    for (int i = 0; i <= r + 1; ++i)
      for (int j = 0; j <= std::min(i, r); ++j) np[i] = np[i] + t[i - j] * p[j];
    p = std::move(np);
  }
  return (n % 2 == 0) ? p[n] : -p[n];
}

// Fraction-free Gaussian elimination.  `div(a, b)` must return the exact
// quotient a / b.
template <class R, class Div>
R det_bareiss(Matrix<R> M, Div div) {
  const int n = static_cast<int>(M.size());
  if (n == 0) return R(1);
  bool neg = false;
  R prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (M[k][k].is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!M[i][k].is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return R(0);
      std::swap(M[k], M[piv]);
      neg = !neg;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) M[i][j] = div(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
      M[i][k] = R(0);
    }
    prev = M[k][k];
  }
  return neg ? -M[n - 1][n - 1] : M[n - 1][n - 1];
}

template <class R>
R det_bareiss(const Matrix<R>& M) {
  return det_bareiss(M, [](const R& a, const R& b) { return a.divexact(b); });
}

// Gaussian elimination over a field (QScalar, GaussQ).
template <class K>
K det_field(Matrix<K> M) {
  const int n = static_cast<int>(M.size());
  K det(1);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!M[i][k].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return K(0);
    if (piv != k) {
      std::swap(M[k], M[piv]);
      det = -det;
    }
    det = det * M[k][k];
    K inv = M[k][k].inverse();
    for (int i = k + 1; i < n; ++i) {
      if (M[i][k].is_zero()) continue;
      K f = M[i][k] * inv;
      for (int j = k + 1; j < n; ++j) M[i][j] = M[i][j] - f * M[k][j];
    }
  }
  return det;
}

// Laplace expansion along the first row; cross-check for small sizes.
template <class R>
R det_cofactor(const Matrix<R>& M) {
  const int n = static_cast<int>(M.size());
  if (n > 7) throw TooLarge("cofactor expansion limited to 7x7");
  if (n == 0) return R(1);
  if (n == 1) return M[0][0];
  R s(0);
  for (int c = 0; c < n; ++c) {
    if (M[0][c].is_zero()) continue;
    Matrix<R> minor;
    for (int i = 1; i < n; ++i) {
      std::vector<R> row;
      for (int j = 0; j < n; ++j)
        if (j != c) row.push_back(M[i][j]);
      minor.push_back(std::move(row));
    }
    R t = M[0][c] * det_cofactor(minor);
    s = (c % 2 == 0) ? s + t : s - t;
  }
  return s;
}

}  // namespace qsym
