// Copyright 2026 The ybpoisson Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <vector>

#include "ybp/scalar.hpp"

namespace ybp {

/// Sparse exact vector indexed by column number; zeros are never stored.
using SparseVector = std::map<int, Scalar>;

void axpy(SparseVector& y, const Scalar& a, const SparseVector& x);

/// Incremental exact Gaussian elimination that keeps its rows in reduced row
/// echelon form at all times. Pivots are the smallest column index of each
/// row, so the echelon form (and every basis derived from it) is deterministic.
class RowReducer {
 public:
  explicit RowReducer(int ncols) : ncols_(ncols) {}

  /// Adds a row; returns true if it was independent of the rows so far.
  bool add_row(SparseVector v);
  /// Remainder of v after elimination against the current rows.
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  /// pivot column -> row with coefficient 1 at the pivot.
  const std::map<int, SparseVector>& rows() const { return rows_; }
  std::vector<int> pivot_columns() const;
  std::vector<int> free_columns() const;
  /// Basis of {x : row . x = 0 for all rows}, one vector per free column in
  /// increasing order.
  std::vector<SparseVector> nullspace() const;

 private:
  int ncols_;
  std::map<int, SparseVector> rows_;
};

int rank_of(const std::vector<SparseVector>& rows, int ncols);
std::vector<SparseVector> nullspace(const std::vector<SparseVector>& rows, int ncols);

}  // namespace ybp
