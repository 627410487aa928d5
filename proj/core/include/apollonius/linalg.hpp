#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace apollo::linalg {

// Dense Gaussian elimination over any exact field type T exposing
// is_zero(), +, -, *, / and copy construction.

template <typename T>
using Mat = std::vector<std::vector<T>>;

// Reduced row echelon form in place; returns pivot columns.
template <typename T>
std::vector<std::size_t> rref(Mat<T>& m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  if (rows == 0) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const T inv = T(1) / m[r][c];
    for (std::size_t k = c; k < cols; ++k) m[r][k] = m[r][k] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const T f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] = m[i][k] - f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <typename T>
std::size_t rank(Mat<T> m) {
  return rref(m).size();
}

// Basis of the right kernel.
template <typename T>
std::vector<std::vector<T>> kernel(Mat<T> m, const T& zero, const T& one) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(cols, zero);
    v[f] = one;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = zero - m[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

// Unique solution of a square system, or nullopt when singular.
template <typename T>
std::optional<std::vector<T>> solve(Mat<T> a, const std::vector<T>& b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  const auto pivots = rref(a);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  std::vector<T> x;
  x.reserve(n);
  for (std::size_t i = 0; i < n; ++i) x.push_back(a[i][n]);
  return x;
}

template <typename T>
T det3(const Mat<T>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace apollo::linalg
