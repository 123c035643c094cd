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
#include <utility>
#include <vector>

#include "ybp/check.hpp"
#include "ybp/tensor_map.hpp"

namespace ybp {

/// Bracket on the generators of Sym V for an S-module V concentrated in a
/// single degree d.
///
/// d = 1: Sym V is the tensor algebra TV; elements are GradedTensors on words,
///   the product is concatenation and a generator bracket {a, b} must land in
///   V (x) V (so it is the same data as r : V(x)V -> V(x)V).
/// d = 0: Sym V is the ordinary symmetric algebra; elements are GradedTensors
///   whose words are sorted (commutative monomials) and {a, b} may be any
///   polynomial.
class GeneratorBracket {
 public:
  GeneratorBracket() = default;
  GeneratorBracket(int dim, int smodule_degree);
  static GeneratorBracket from_r(const TensorMap& r);

  int dim() const { return dim_; }
  int smodule_degree() const { return degree_; }
  void set(int a, int b, GradedTensor value);
  GradedTensor get(int a, int b) const;
  /// The degree-(1,1) restriction as a map V(x)V -> V(x)V (d = 1 only).
  TensorMap to_r() const;

 private:
  int dim_ = 0;
  int degree_ = 1;
  std::map<std::pair<int, int>, GradedTensor> table_;
};

/// The twisted Poisson bracket on Sym V obtained from a generator bracket by
/// the Leibniz rule. Arguments whose total polynomial degree exceeds
/// max_degree raise TruncationError.
class TwistedPoisson {
 public:
  TwistedPoisson(GeneratorBracket b, int max_degree);

  const GeneratorBracket& generators() const { return gen_; }
  int max_degree() const { return max_degree_; }
  int d() const { return gen_.smodule_degree(); }

  /// Normal form of a monomial: sorted for d = 0, unchanged for d = 1.
  Word normalize(Word w) const;
  GradedTensor normalize(const GradedTensor& t) const;
  /// S-module degree of a monomial (d times its length).
  int degree(const Word& w) const { return d() * static_cast<int>(w.size()); }

  GradedTensor product(const GradedTensor& x, const GradedTensor& y) const;
  /// {v_1...v_m, w_1...w_n} on monomials.
  GradedTensor bracket(const Word& v, const Word& w) const;
  GradedTensor bracket(const GradedTensor& x, const GradedTensor& y) const;

  /// tau^{sizes} applied to t, where sizes are S-module degrees. Identity when
  /// d = 0 (all blocks are empty).
  GradedTensor permute_blocks(const Permutation& tau, const std::vector<Word>& blocks,
                              const GradedTensor& t) const;

  /// {w, v} + (21)^{|v|,|w|}{v, w}
  GradedTensor skew_residual(const Word& v, const Word& w) const;
  /// {u,{v,w}} + (231)^{|v|,|w|,|u|}{v,{w,u}} + (312)^{|w|,|u|,|v|}{w,{u,v}}
  GradedTensor jacobi_residual(const Word& u, const Word& v, const Word& w) const;
  /// {u v, w} - u {v, w} - (213)^{|v|,|u|,|w|}(v {u, w})
  GradedTensor leibniz_residual(const Word& u, const Word& v, const Word& w) const;

  /// Monomials of length 1..max_len in normal form, deterministic order.
  std::vector<Word> monomials(int max_len) const;

  CheckResult check_skew() const;
  CheckResult check_jacobi() const;
  CheckResult check_leibniz() const;

 private:
  void check_cap(size_t total) const;

  GeneratorBracket gen_;
  int max_degree_;
};

/// {e_a, e_b} = sum_k c^k_{ab} e_k as a d = 0 bracket.
GeneratorBracket lie_bracket(int dim, const std::map<std::pair<int, int>, GradedTensor>& table);

/// Degree-(1,1,1) Jacobi residual of the bracket built from r, as a map
/// V^{(x)3} -> V^{(x)3}.
TensorMap jacobi_map_111(const TensorMap& r);

struct Theorem1Report {
  bool skew = false;
  bool cybe_zero = false;
  std::vector<CheckResult> checks;  // twisted skew, Jacobi, Leibniz
  /// skew and CYBE(r) = 0 imply every check passes.
  bool forward = true;
  /// every check passing implies the (1,1) restriction is a skew CYBE solution.
  bool backward = true;
  bool twisted_poisson() const { return all_passed(checks); }
};

Theorem1Report theorem1_roundtrip(const TensorMap& r, int max_degree);

}  // namespace ybp
