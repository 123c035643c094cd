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
#include <span>
#include <string>
#include <vector>

#include "ybp/check.hpp"
#include "ybp/permutation.hpp"
#include "ybp/tensor.hpp"

namespace ybp {

/// Sign of the block permutation sigma^{|a_1|+1, ..., |a_m|+1}: the Koszul
/// sign of reordering a_1 ... a_m into a_{sigma(1)} ... a_{sigma(m)} when each
/// a_i is given the degree |a_i| + 1.
int sign_odd(std::span<const int> degrees, const Permutation& sigma);
/// Koszul sign of the same reordering with the degrees |a_i| themselves.
int koszul_sign(std::span<const int> degrees, const Permutation& sigma);

/// sigma in S_{i+j} with sigma(1) < ... < sigma(i) and
/// sigma(i+1) < ... < sigma(i+j), in lexicographic order.
std::vector<Permutation> shuffles(int i, int j);

/// Sign used both for graded skew-symmetry of the brackets and inside the
/// Jacobi sums. kSignOdd: sign_odd. kKoszul: sign(sigma) * koszul_sign.
enum class SkewSign { kSignOdd, kKoszul };
/// Leibniz rule in slot k: {.., a'a'', ..} = s' a'{.., a'', ..} + s'' a''{.., a', ..}.
/// kLiteral: s' = (-1)^{|a'| P}, s'' = (-1)^{|a''|(P + |a'|)} with P the sum of
/// the degrees of the preceding arguments. kShifted: the same with every
/// preceding degree replaced by degree + 1. kOperator: P also counts the
/// degree 2 - n of the bracket itself (a' passes the operation).
enum class LeibnizSign { kLiteral, kShifted, kOperator };
/// Sign of the (i, j) summand: (-1)^i, (-1)^{i(j-1)}, or +1.
enum class JacobiSign { kMinusOneToI, kIJMinusOne, kPlus };

struct LinftyConvention {
  SkewSign skew = SkewSign::kSignOdd;
  LeibnizSign leibniz = LeibnizSign::kLiteral;
  JacobiSign jacobi = JacobiSign::kMinusOneToI;
  /// Sum over (i, j-1)-shuffles instead of all of S_m. The full sum is the
  /// shuffle sum with summand (i, j) weighted by i!(j-1)!.
  bool shuffles = false;
  std::string describe() const;
  friend bool operator==(const LinftyConvention&, const LinftyConvention&) = default;
};

/// All 36 flag combinations; the first is the literal reading (sign_odd,
/// literal Leibniz, (-1)^i, all of S_m).
std::vector<LinftyConvention> all_conventions();
/// kKoszul, kOperator, kIJMinusOne over shuffles. Among all_conventions()
/// only kKoszul + kOperator + shuffles makes the product terms cancel.
LinftyConvention default_convention();

int skew_sign(SkewSign s, std::span<const int> degrees, const Permutation& sigma);
int jacobi_sign(JacobiSign s, int i, int j);

struct GradedBasis {
  std::vector<int> degrees;
  std::vector<std::string> names;
  int size() const { return static_cast<int>(degrees.size()); }
  std::string name(int i) const;
};

/// Normal form in the supersymmetric algebra on the basis: words sorted
/// ascending with the Koszul sign, words repeating an odd generator dropped.
GradedTensor supersym_normalize(const GradedBasis& b, const GradedTensor& t);
GradedTensor supersym_multiply(const GradedBasis& b, const GradedTensor& x, const GradedTensor& y);
int word_degree(const GradedBasis& b, const Word& w);

/// Operations {}_n on generators with values in SuperSym V, stored on every
/// ordered tuple (skew-symmetry is checked, not assumed). set() rejects values
/// not of degree sum|a_i| + 2 - n.
class MultiBracketFamily {
 public:
  MultiBracketFamily() = default;
  explicit MultiBracketFamily(GradedBasis basis) : basis_(std::move(basis)) {}

  const GradedBasis& basis() const { return basis_; }
  void set(const std::vector<int>& args, const GradedTensor& value);
  /// Sets the value on args and on every reordering by the skew rule.
  void set_skew(const std::vector<int>& args, const GradedTensor& value, SkewSign s);
  GradedTensor get(const std::vector<int>& args) const;
  std::vector<int> arities() const;
  int max_arity() const;
  const std::map<std::vector<int>, GradedTensor>& entries() const { return table_; }

  /// Each value is homogeneous of degree sum|a_i| + 2 - n.
  CheckResult check_degrees() const;
  CheckResult check_skew(SkewSign s) const;

 private:
  GradedBasis basis_;
  std::map<std::vector<int>, GradedTensor> table_;
};

/// Elements of SuperSym V used as bracket arguments: a GradedTensor in
/// supersymmetric normal form.
using SuperElement = GradedTensor;

/// Bracket of arbitrary SuperSym elements via the Leibniz rule.
SuperElement extended_bracket(const MultiBracketFamily& fam, const std::vector<SuperElement>& args,
                              const LinftyConvention& conv);

/// The m-ary Jacobi sum on (arbitrary SuperSym) arguments.
SuperElement linfty_residual(const MultiBracketFamily& fam, const std::vector<SuperElement>& args,
                             const LinftyConvention& conv);

/// The (i, m + 1 - i) summand alone.
SuperElement linfty_summand(const MultiBracketFamily& fam, const std::vector<SuperElement>& args, int i,
                            const LinftyConvention& conv);

/// Jacobi sums for every m <= max_m on every tuple of generators.
CheckResult check_linfty_axioms(const MultiBracketFamily& fam, int max_m, const LinftyConvention& conv);

/// Jacobi sums for m <= max_m on every tuple whose entries are generators or
/// products of two generators.
CheckResult theorem3_check(const MultiBracketFamily& fam, int max_m, const LinftyConvention& conv);

/// Formal expansion of the m-ary Jacobi sum at (a'a'', a_2, ..., a_m) with
/// indeterminate brackets of arities 1..m. Terms of shape +-{...}_i {...}_j
/// are collected with the (i, j) summand they came from.
struct CancellationReport {
  int m = 0;
  std::vector<int> degrees;  // of a', a'', a_2, ..., a_m
  size_t product_terms = 0;  // signed product terms before cancellation
  size_t unmatched = 0;      // left over after pairing (i, j) against (j, i)
  bool derivation_part_ok = false;  // the rest is a' J(a'', ...) +- a'' J(a', ...)
  bool cancels() const { return unmatched == 0 && derivation_part_ok; }
};
CancellationReport theorem3_cancellation(const std::vector<int>& degrees, const LinftyConvention& conv);

/// Every degree pattern in {0, 1}^{m+1} for m = 1..max_m.
bool cancellation_holds(const LinftyConvention& conv, int max_m);

/// Deterministic search for a fixture on generators of degrees (0, 0, 1):
/// {}_1 and {}_2 with entries in {-1, 0, 1} whose binary Jacobiator is nonzero,
/// completed by the exact solution {}_3 of the m = 3 equation, accepted once
/// every Jacobi sum up to m = 5 vanishes.
MultiBracketFamily homotopy_fixture(const LinftyConvention& conv);

}  // namespace ybp
