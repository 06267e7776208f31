#pragma once

#include <optional>

#include "branecalc/common.hpp"

#include <map>
#include <vector>

namespace branecalc {

/// Sparse column-index -> coefficient row.
using SparseVec = std::map<int, Rational>;

/// Sparse rational matrix stored by rows. Columns are indexed 0..cols-1.
struct SparseMatrix {
  int cols = 0;
  std::vector<SparseVec> rows;

  void add_row(SparseVec r) { rows.push_back(std::move(r)); }
  void set(int row, int col, const Rational& v);
};

/// Row-reduces a copy of `a` and returns its rank.
int rank(const SparseMatrix& a);

/// One particular solution of A x = b with free variables set to zero, or
/// nullopt when the system is inconsistent. Deterministic: eliminates with
/// the lowest-index pivot column available at each step.
std::optional<std::vector<Rational>> solve(const SparseMatrix& a,
                                           const std::vector<Rational>& b);

/// True iff b lies in the column span of A.
bool in_column_span(const SparseMatrix& a, const std::vector<Rational>& b);

}  // namespace branecalc
