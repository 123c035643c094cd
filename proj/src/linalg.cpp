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

#include "ybp/linalg.hpp"

#include "ybp/error.hpp"

namespace ybp {

void axpy(SparseVector& y, const Scalar& a, const SparseVector& x) {
  if (is_zero(a)) return;
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, a * v);
    if (!inserted) {
      it->second += a * v;
      if (is_zero(it->second)) y.erase(it);
    }
  }
}

SparseVector RowReducer::reduce(SparseVector v) const {
  // Rows are fully reduced, so one pass in increasing pivot order suffices:
  // eliminating pivot p never reintroduces an earlier pivot.
  for (auto it = rows_.begin(); it != rows_.end() && !v.empty(); ++it) {
    const auto hit = v.find(it->first);
    if (hit == v.end()) continue;
    const Scalar f = -hit->second;
    axpy(v, f, it->second);
  }
  return v;
}

bool RowReducer::add_row(SparseVector v) {
  for (const auto& [k, c] : v) {
    if (k < 0 || k >= ncols_) throw InputError("RowReducer: column index out of range");
    (void)c;
  }
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const int pivot = v.begin()->first;
  const Scalar inv = 1 / v.begin()->second;
  for (auto& [k, c] : v) c *= inv;
  for (auto& [p, row] : rows_) {
    const auto hit = row.find(pivot);
    if (hit == row.end()) continue;
    const Scalar f = -hit->second;
    axpy(row, f, v);
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

std::vector<int> RowReducer::pivot_columns() const {
  std::vector<int> out;
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

std::vector<int> RowReducer::free_columns() const {
  std::vector<int> out;
  for (int c = 0; c < ncols_; ++c) {
    if (!rows_.contains(c)) out.push_back(c);
  }
  return out;
}

std::vector<SparseVector> RowReducer::nullspace() const {
  std::vector<SparseVector> basis;
  for (int f : free_columns()) {
    SparseVector x;
    x.emplace(f, Scalar(1));
    for (const auto& [p, row] : rows_) {
      const auto hit = row.find(f);
      if (hit != row.end()) x.emplace(p, -hit->second);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

int rank_of(const std::vector<SparseVector>& rows, int ncols) {
  RowReducer rr(ncols);
  for (const auto& r : rows) rr.add_row(r);
  return rr.rank();
}

std::vector<SparseVector> nullspace(const std::vector<SparseVector>& rows, int ncols) {
  RowReducer rr(ncols);
  for (const auto& r : rows) rr.add_row(r);
  return rr.nullspace();
}

}  // namespace ybp
