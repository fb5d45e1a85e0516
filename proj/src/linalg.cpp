#include "pfh/linalg.hpp"

namespace pfh {

namespace {

std::size_t weight(const QTFraction& x) { return x.toString().size(); }

// Reduces a in place to row echelon form; returns pivot columns. The last
// `skipCols` columns are never chosen as pivots.
std::vector<std::size_t> eliminate(QTMatrix& a, std::size_t skipCols) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  std::size_t rows = a.size(), cols = a[0].size() - skipCols, r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows, bw = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i][c].isZero()) continue;
      std::size_t w = weight(a[i][c]);
      if (best == rows || w < bw) best = i, bw = w;
    }
    if (best == rows) continue;
    std::swap(a[r], a[best]);
    QTFraction inv = a[r][c].inverse();
    for (std::size_t j = c; j < a[r].size(); ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].isZero()) continue;
      QTFraction f = a[i][c];
      for (std::size_t j = c; j < a[i].size(); ++j)
        if (!a[r][j].isZero()) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(QTMatrix a) { return int(eliminate(a, 0).size()); }

std::optional<std::vector<QTFraction>> solve(QTMatrix a, std::vector<QTFraction> b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: row count mismatch");
  std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  auto piv = eliminate(a, 1);
  for (std::size_t i = piv.size(); i < a.size(); ++i)
    if (!a[i][cols].isZero()) return std::nullopt;
  std::vector<QTFraction> x(cols);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = a[r][cols];
  return x;
}

}  // namespace pfh
