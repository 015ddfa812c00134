#pragma once

#include <optional>
#include <vector>

#include "kdeg/eigen_support.hpp"
#include "kdeg/upoly.hpp"

namespace kdeg {

template <class S>
UPoly<S> exact_scalar_div(const UPoly<S>& a, const UPoly<S>& b) {
  return a.exact_div(b);
}

// Fraction-free determinant (Bareiss).  Works over any integral domain
// whose exact_scalar_div is exact: Int, Rat, Fp, UPoly<_>.
template <class T>
T det_bareiss(MatX<T> m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols() || n == 0) throw degenerate_input("determinant of non-square matrix");
  int sign = 1;
  T prev = T(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = k; r < n; ++r)
      if (!m(r, k).is_zero()) { piv = r; break; }
    if (piv < 0) return T(0);
    if (piv != k) {
      m.row(piv).swap(m.row(k));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = exact_scalar_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return sign < 0 ? T(-det) : det;
}

// Row echelon rank over a field.
template <class S>
int rank(MatX<S> m) {
  static_assert(is_field_scalar<S>::value);
  const Eigen::Index rows = m.rows(), cols = m.cols();
  int rk = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < rows; ++r)
      if (!m(r, col).is_zero()) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    S inv = S(1) / m(row, col);
    for (Eigen::Index r = row + 1; r < rows; ++r) {
      if (m(r, col).is_zero()) continue;
      S f = m(r, col) * inv;
      for (Eigen::Index c = col; c < cols; ++c) m(r, c) = m(r, c) - f * m(row, c);
    }
    ++row;
    ++rk;
  }
  return rk;
}

// Gauss-Jordan inverse over a field; nullopt when singular.
template <class S>
std::optional<MatX<S>> inverse(MatX<S> m) {
  static_assert(is_field_scalar<S>::value);
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw degenerate_input("inverse of non-square matrix");
  MatX<S> inv(n, n);
  inv.setZero();
  for (Eigen::Index i = 0; i < n; ++i) inv(i, i) = S(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (!m(r, col).is_zero()) { piv = r; break; }
    if (piv < 0) return std::nullopt;
    if (piv != col) {
      m.row(piv).swap(m.row(col));
      inv.row(piv).swap(inv.row(col));
    }
    S d = S(1) / m(col, col);
    for (Eigen::Index c = 0; c < n; ++c) {
      m(col, c) = m(col, c) * d;
      inv(col, c) = inv(col, c) * d;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || m(r, col).is_zero()) continue;
      S f = m(r, col);
      for (Eigen::Index c = 0; c < n; ++c) {
        m(r, c) = m(r, c) - f * m(col, c);
        inv(r, c) = inv(r, c) - f * inv(col, c);
      }
    }
  }
  return inv;
}

// Field determinant via the fraction-free route (exact divisions are plain
// field divisions there).
template <class S>
S det(const MatX<S>& m) {
  return det_bareiss<S>(m);
}

template <class T>
MatX<T> delete_row_col(const MatX<T>& m, Eigen::Index row, Eigen::Index col) {
  const Eigen::Index n = m.rows(), c = m.cols();
  MatX<T> out(n - 1, c - 1);
  for (Eigen::Index i = 0, oi = 0; i < n; ++i) {
    if (i == row) continue;
    for (Eigen::Index j = 0, oj = 0; j < c; ++j) {
      if (j == col) continue;
      out(oi, oj) = m(i, j);
      ++oj;
    }
    ++oi;
  }
  return out;
}

// Adjugate over a field: det(m) * m^{-1} when invertible, cofactor minors
// otherwise (rank <= n-1 inputs are routine here: adj of a rank-(n-1)
// matrix has rank 1, adj of rank <= n-2 is zero).
template <class S>
MatX<S> adjugate(const MatX<S>& m) {
  static_assert(is_field_scalar<S>::value);
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw degenerate_input("adjugate of non-square matrix");
  if (n == 1) {
    MatX<S> out(1, 1);
    out(0, 0) = S(1);
    return out;
  }
  if (auto inv = inverse<S>(m)) {
    S d = det<S>(m);
    MatX<S> out(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) out(i, j) = d * (*inv)(i, j);
    return out;
  }
  MatX<S> out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      S minor = det<S>(delete_row_col(m, j, i));
      out(i, j) = ((i + j) % 2 == 0) ? minor : S(0) - minor;
    }
  return out;
}

// Characteristic polynomial det(lambda*I - m) over F_p, via Hessenberg
// reduction and the standard recurrence.
UPoly<Fp> charpoly_fp(MatX<Fp> m, std::uint64_t p);

// Exact integer characteristic polynomial: monic, degree = dimension.
// Computed by Chinese remaindering of mod-p Hessenberg charpolys; the
// prime count is driven by a Hadamard-style bound on principal-minor sums,
// so the reconstruction is certified, with single-word intermediates.
UPoly<Int> charpoly(const MatX<Int>& m);

inline MatX<Int> int_matrix(const std::vector<std::vector<long>>& rows) {
  MatX<Int> m(static_cast<Eigen::Index>(rows.size()),
              static_cast<Eigen::Index>(rows.empty() ? 0 : rows[0].size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(i, j) = Int(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return m;
}

}  // namespace kdeg
