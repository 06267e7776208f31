#include "branecalc/linalg.hpp"

#include <algorithm>

namespace branecalc {

void SparseMatrix::set(int row, int col, const Rational& v) {
  if (row >= static_cast<int>(rows.size())) rows.resize(row + 1);
  if (col >= cols) throw input_error("column index out of range");
  if (v == 0)
    rows[row].erase(col);
  else
    rows[row][col] = v;
}

namespace {

void axpy(SparseVec& dst, const Rational& c, const SparseVec& src) {
  for (const auto& [j, v] : src) {
    Rational& t = dst[j];
    t += c * v;
    if (t == 0) dst.erase(j);
  }
}

/// In-place elimination of augmented rows; returns (rank, pivot column per
/// eliminated row). Column `aug_col` (== a.cols) holds the right-hand side
/// when solving and is never chosen as a pivot.
std::pair<int, std::vector<int>> eliminate(std::vector<SparseVec>& rows, int ncols) {
  std::vector<int> pivots;
  std::size_t next = 0;
  for (int col = 0; col < ncols && next < rows.size(); ++col) {
    std::size_t pr = next;
    while (pr < rows.size() && !rows[pr].count(col)) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[next], rows[pr]);
    Rational inv = Rational(1) / rows[next].at(col);
    for (auto& [j, v] : rows[next]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end()) continue;
      axpy(rows[r], -it->second, rows[next]);
    }
    pivots.push_back(col);
    ++next;
  }
  return {static_cast<int>(next), std::move(pivots)};
}

}  // namespace

int rank(const SparseMatrix& a) {
  std::vector<SparseVec> rows = a.rows;
  return eliminate(rows, a.cols).first;
}

std::optional<std::vector<Rational>> solve(const SparseMatrix& a,
                                           const std::vector<Rational>& b) {
  if (b.size() != a.rows.size())
    throw input_error("right-hand side size does not match row count");
  std::vector<SparseVec> rows = a.rows;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (b[r] != 0) rows[r][a.cols] = b[r];
  auto [rk, pivots] = eliminate(rows, a.cols);
  for (std::size_t r = rk; r < rows.size(); ++r)
    if (rows[r].count(a.cols)) return std::nullopt;
  std::vector<Rational> x(a.cols, 0);
  for (int r = 0; r < rk; ++r) {
    auto it = rows[r].find(a.cols);
    if (it != rows[r].end()) x[pivots[r]] = it->second;
  }
  return x;
}

bool in_column_span(const SparseMatrix& a, const std::vector<Rational>& b) {
  return solve(a, b).has_value();
}

}  // namespace branecalc
