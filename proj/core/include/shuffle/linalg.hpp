#pragma once

// Small exact linear algebra over Q(q,t): just enough Gaussian elimination
// to invert basis-change matrices and decompose elements in a spanning set.

#include <optional>
#include <stdexcept>
#include <vector>

#include "shuffle/qt.hpp"

namespace shuffle {

using QtMatrix = std::vector<std::vector<QtScalar>>;

// Solves A x = b exactly.  A is m x n (rows of length n), b has length m.
// Returns a solution if one exists (the unique one when rank = n), otherwise
// std::nullopt.  Throws if the system is consistent but underdetermined.
inline std::optional<std::vector<QtScalar>> solve_linear(QtMatrix a,
                                                         std::vector<QtScalar> b) {
  const size_t m = a.size();
  const size_t n = m ? a[0].size() : 0;
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t piv = row;
    while (piv < m && a[piv][col].is_zero()) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[row]);
    std::swap(b[piv], b[row]);
    QtScalar inv = QtScalar(1) / a[row][col];
    for (size_t j = col; j < n; ++j) a[row][j] *= inv;
    b[row] *= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      QtScalar f = a[i][col];
      for (size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (size_t i = row; i < m; ++i)
    if (!b[i].is_zero()) return std::nullopt;
  if (pivot_col.size() < n)
    throw std::logic_error("solve_linear: underdetermined system");
  std::vector<QtScalar> x(n);
  for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return x;
}

// Inverts a square matrix exactly; throws std::logic_error if singular.
inline QtMatrix invert_matrix(QtMatrix a) {
  const size_t n = a.size();
  QtMatrix inv(n, std::vector<QtScalar>(n));
  for (size_t i = 0; i < n; ++i) inv[i][i] = QtScalar(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("invert_matrix: singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    QtScalar f = QtScalar(1) / a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] *= f;
      inv[col][j] *= f;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      QtScalar g = a[i][col];
      for (size_t j = 0; j < n; ++j) {
        a[i][j] -= g * a[col][j];
        inv[i][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

// Determinant by fraction-free-ish elimination over the field.
inline QtScalar determinant(QtMatrix a) {
  const size_t n = a.size();
  QtScalar det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return QtScalar();
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    QtScalar f = QtScalar(1) / a[col][col];
    for (size_t i = col + 1; i < n; ++i) {
      if (a[i][col].is_zero()) continue;
      QtScalar g = a[i][col] * f;
      for (size_t j = col; j < n; ++j) a[i][j] -= g * a[col][j];
    }
  }
  return det;
}

}  // namespace shuffle
