#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ecsec/arith/error.hpp"
#include "ecsec/arith/field.hpp"

namespace ecsec {

template <FieldElement F>
using Matrix = std::vector<std::vector<F>>;

namespace detail {

template <FieldElement F>
std::size_t column_count(const Matrix<F>& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  for (const auto& row : m)
    if (row.size() != cols) throw DomainError("ragged matrix");
  return cols;
}

// In-place reduced row echelon form; pivots chosen as the first nonzero entry
// in column order. Returns the pivot columns.
template <FieldElement F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  const std::size_t rows = m.size(), cols = column_count(m);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    const F inv = m[r][c].inv();
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const F f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

template <FieldElement F>
std::size_t matrix_rank(Matrix<F> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = detail::column_count(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    const F inv = m[r][c].inv();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      const F f = m[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    ++r;
  }
  return r;
}

// Basis of {x : m x = 0}, one vector per free column.
template <FieldElement F>
std::vector<std::vector<F>> nullspace(Matrix<F> m, const F& proto) {
  const std::size_t cols = detail::column_count(m);
  const auto pivots = detail::rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, proto.zero());
    v[free] = proto.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <FieldElement F>
F determinant(Matrix<F> m, const F& proto) {
  const std::size_t n = m.size();
  if (detail::column_count(m) != n) throw DomainError("determinant of a non-square matrix");
  F det = proto.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return proto.zero();
    if (p != c) {
      std::swap(m[c], m[p]);
      det = -det;
    }
    det = det * m[c][c];
    const F inv = m[c][c].inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      const F f = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
    }
  }
  return det;
}

}  // namespace ecsec
