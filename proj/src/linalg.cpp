/** @file
 *  @brief Exact Gaussian elimination over the rationals.
 */
#include "sphcrit/linalg.hpp"

#include <cstddef>

namespace sphcrit {

namespace {

/** Bring `m` to reduced row-echelon form in place; returns pivot columns. */
std::vector<int> rref(std::vector<QVec>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rat inv = Rat(1) / m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rat f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  m.resize(row);
  return pivots;
}

}  // namespace

int rank_of(const std::vector<QVec>& rows) {
  std::vector<QVec> m = rows;
  return static_cast<int>(rref(m).size());
}

std::optional<QVec> solve_linear(const std::vector<QVec>& A, const QVec& b) {
  if (A.size() != b.size()) throw std::invalid_argument("solve_linear: size mismatch");
  if (A.empty()) return QVec{};
  const std::size_t n = A[0].size();
  std::vector<QVec> aug(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) {
    aug[i] = A[i];
    aug[i].push_back(b[i]);
  }
  const std::vector<int> pivots = rref(aug);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    if (pivots[i] == static_cast<int>(n)) return std::nullopt;  // 0 = 1 row
  QVec x = qvec_zero(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][n];
  return x;
}

std::vector<QVec> nullspace(int dim, const std::vector<QVec>& rows) {
  std::vector<QVec> m = rows;
  for (const auto& r : m)
    if (static_cast<int>(r.size()) != dim)
      throw std::invalid_argument("nullspace: row size mismatch");
  const std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(dim, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (int col = 0; col < dim; ++col) {
    if (is_pivot[col]) continue;
    QVec v = qvec_zero(dim);
    v[col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][col];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<QVec> row_basis(const std::vector<QVec>& rows) {
  std::vector<QVec> m = rows;
  rref(m);
  return m;
}

bool in_span(const std::vector<QVec>& rows, const QVec& v) {
  if (is_zero(v)) return true;
  std::vector<QVec> m = rows;
  const int r0 = static_cast<int>(rref(m).size());
  m.push_back(v);
  return static_cast<int>(rref(m).size()) == r0;
}

std::optional<QVec> express_in_basis(const std::vector<QVec>& basis, const QVec& v) {
  if (basis.empty()) {
    if (is_zero(v)) return QVec{};
    return std::nullopt;
  }
  // Solve B^T c = v.
  const std::size_t n = basis[0].size();
  std::vector<QVec> bt(n, qvec_zero(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) bt[j][i] = basis[i][j];
  return solve_linear(bt, v);
}

}  // namespace sphcrit
