#ifndef RATALG_LINALG_HPP
#define RATALG_LINALG_HPP

#include <vector>

#include "ratalg/scalar.hpp"

namespace ratalg {

using Matrix = std::vector<std::vector<Scalar>>;

// reduced row echelon form in place; returns pivot column per row rank order
inline std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Scalar inv = m[r][c].inverse();
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar factor = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    pivots.push_back((int)c);
    ++r;
  }
  return pivots;
}

// basis of the right kernel of m (columns = unknowns)
inline std::vector<std::vector<Scalar>> nullspace(Matrix m, int cols) {
  for (auto& row : m)
    if ((int)row.size() != cols) throw input_error("ragged matrix");
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Scalar> v(cols, Scalar(0));
    v[fc] = Scalar(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace ratalg

#endif
