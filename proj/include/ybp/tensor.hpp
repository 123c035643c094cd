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
#include <optional>
#include <string>
#include <vector>

#include "ybp/permutation.hpp"
#include "ybp/scalar.hpp"

namespace ybp {

/// Basis word e_{w_1} (x) ... (x) e_{w_n}; letters are 0-based generator indices.
using Word = std::vector<int>;

std::string format_word(const Word& w);

/// Every word of the given length over an alphabet of size dim, in
/// lexicographic order.
std::vector<Word> all_words(int dim, int length);

/// Letter in slot j moves to slot p(j).
Word permute_word(const Permutation& p, const Word& w);

/// Finitely supported element of the tensor algebra: a sparse map from basis
/// words to exact scalars. Zero coefficients are never stored, so equality is
/// structural equality.
class GradedTensor {
 public:
  GradedTensor() = default;

  static GradedTensor basis(Word w, Scalar c = 1);

  void add_term(const Word& w, const Scalar& c);

  const std::map<Word, Scalar>& terms() const { return terms_; }
  Scalar coefficient(const Word& w) const;
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  /// Common length of every word, if there is one (nullopt for zero or mixed).
  std::optional<int> homogeneous_degree() const;

  GradedTensor& operator+=(const GradedTensor& o);
  GradedTensor& operator-=(const GradedTensor& o);
  GradedTensor& operator*=(const Scalar& s);

  friend GradedTensor operator+(GradedTensor a, const GradedTensor& b) { return a += b; }
  friend GradedTensor operator-(GradedTensor a, const GradedTensor& b) { return a -= b; }
  friend GradedTensor operator*(const Scalar& s, GradedTensor a) { return a *= s; }
  friend GradedTensor operator-(GradedTensor a) { return a *= Scalar(-1); }
  friend bool operator==(const GradedTensor&, const GradedTensor&) = default;

  std::string to_string() const;

 private:
  std::map<Word, Scalar> terms_;
};

/// Concatenation product u (x) w.
GradedTensor tensor_product(const GradedTensor& a, const GradedTensor& b);

/// S_m action by permuting slots. Every term must have degree p.size().
GradedTensor apply_permutation(const Permutation& p, const GradedTensor& t);

}  // namespace ybp
