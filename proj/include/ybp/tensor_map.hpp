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
#include <string>
#include <tuple>
#include <vector>

#include "ybp/permutation.hpp"
#include "ybp/scalar.hpp"
#include "ybp/tensor.hpp"

namespace ybp {

/// Exact linear map V^{(x)m} -> V^{(x)n} over a fixed basis of V (dim V = dim()).
/// Stored column-wise: each in-word maps to a sparse GradedTensor of out-words.
class TensorMap {
 public:
  TensorMap() = default;
  TensorMap(int dim, int domain_degree, int codomain_degree);

  static TensorMap identity(int dim, int degree);
  /// The slot permutation p acting on V^{(x)p.size()}.
  static TensorMap from_permutation(int dim, const Permutation& p);

  int dim() const { return dim_; }
  int domain_degree() const { return domain_; }
  int codomain_degree() const { return codomain_; }

  void add_entry(const Word& out, const Word& in, const Scalar& c);
  Scalar entry(const Word& out, const Word& in) const;

  const std::map<Word, GradedTensor>& columns() const { return cols_; }
  /// Image of a single basis word (zero if the column is empty).
  GradedTensor column(const Word& in) const;
  GradedTensor apply(const GradedTensor& t) const;

  bool is_zero() const { return cols_.empty(); }
  size_t nnz() const;
  /// (out, in, coefficient) sorted lexicographically on (out, in).
  std::vector<std::tuple<Word, Word, Scalar>> entries() const;

  TensorMap& operator+=(const TensorMap& o);
  TensorMap& operator-=(const TensorMap& o);
  TensorMap& operator*=(const Scalar& s);
  friend TensorMap operator+(TensorMap a, const TensorMap& b) { return a += b; }
  friend TensorMap operator-(TensorMap a, const TensorMap& b) { return a -= b; }
  friend TensorMap operator*(const Scalar& s, TensorMap a) { return a *= s; }
  friend TensorMap operator-(TensorMap a) { return a *= Scalar(-1); }
  friend bool operator==(const TensorMap&, const TensorMap&) = default;

 private:
  void check_word(const Word& w, int degree, const char* role) const;
  void same_shape(const TensorMap& o, const char* op) const;

  int dim_ = 0;
  int domain_ = 0;
  int codomain_ = 0;
  std::map<Word, GradedTensor> cols_;
};

/// f after g.
TensorMap compose(const TensorMap& f, const TensorMap& g);
/// f (x) g acting on concatenated words.
TensorMap tensor_product(const TensorMap& f, const TensorMap& g);
/// p o f o p^{-1} for an endomorphism f of V^{(x)p.size()}.
TensorMap conjugate(const Permutation& p, const TensorMap& f);

/// r^{ij} on V^{(x)n}, 1-based slots, 1 <= i < j <= n: r acts on slots i and j
/// (its first tensor factor in slot i) and the identity elsewhere.
TensorMap embed_components(const TensorMap& r, int i, int j, int n);
/// Same as embed_components but with 0-based distinct slots in either order;
/// r's first factor lands in slot `first`.
TensorMap embed_slots(const TensorMap& r, int first, int second, int n);

/// r^{21} = swap o r o swap.
TensorMap flip(const TensorMap& r);

}  // namespace ybp
