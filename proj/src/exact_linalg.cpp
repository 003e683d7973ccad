#include "cliff/exact_linalg.hpp"

#include <stdexcept>

namespace cliff {

QMatrix q_identity(std::size_t n) {
  QMatrix m(n, std::vector<GaussianRational>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = GaussianRational(1);
  return m;
}

namespace {

/// Row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> echelonize(QMatrix& m) {
  std::vector<std::size_t> pivot_cols;
  if (m.empty()) return pivot_cols;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) { pivot = i; break; }
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    GaussianRational inv = GaussianRational(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      GaussianRational factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

}  // namespace

int q_rank(QMatrix m) { return static_cast<int>(echelonize(m).size()); }

std::vector<std::vector<GaussianRational>> q_kernel(QMatrix m) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  auto pivot_cols = echelonize(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<GaussianRational>> basis;
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<GaussianRational> v(cols);
    v[free_c] = GaussianRational(1);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r)
      v[pivot_cols[r]] = -m[r][free_c];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<GaussianRational> q_solve(QMatrix m, std::vector<GaussianRational> rhs) {
  if (m.size() != rhs.size()) throw std::invalid_argument("q_solve: shape mismatch");
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(rhs[i]);
  auto pivot_cols = echelonize(m);
  std::vector<GaussianRational> x(cols);
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
    if (pivot_cols[r] == cols) throw std::domain_error("q_solve: inconsistent system");
    x[pivot_cols[r]] = m[r][cols];
  }
  return x;
}

}  // namespace cliff
