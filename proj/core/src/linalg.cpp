#include "pdme/linalg.hpp"

#include <algorithm>

namespace pdme {

std::vector<std::size_t> rref(ScalarMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) { sel = i; break; }
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    Scalar inv = m[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

ScalarMatrix nullspace(ScalarMatrix m, std::size_t cols) {
  for (auto& row : m) row.resize(cols, Scalar(0));
  std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  ScalarMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    ScalarRow v(cols, Scalar(0));
    v[free] = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace pdme
