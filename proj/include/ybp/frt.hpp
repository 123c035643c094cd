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

#include "ybp/check.hpp"
#include "ybp/linalg.hpp"
#include "ybp/permutation.hpp"
#include "ybp/tensor_map.hpp"

namespace ybp {

struct YoungDiagram {
  std::vector<int> rows;
  int size() const;
  /// "(2,1)"
  std::string to_string() const;
  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
};

/// Throws InputError unless rows are positive and weakly decreasing.
YoungDiagram make_diagram(std::vector<int> rows);
/// Partitions of m, largest first in reverse lexicographic order: (m), (m-1,1), ...
std::vector<YoungDiagram> partitions(int m);
int hook_length_dimension(const YoungDiagram& lam);

/// Element of Q[S_m]; the product is (sum a_p p)(sum b_q q) = sum a_p b_q (p * q).
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int m = 0) : m_(m) {}
  static GroupAlgebraElement identity(int m);
  int degree() const { return m_; }
  void add(const Permutation& p, const Scalar& c);
  Scalar coefficient(const Permutation& p) const;
  const std::map<Permutation, Scalar>& terms() const { return terms_; }
  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator*=(const Scalar& s);
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend GroupAlgebraElement operator*(const Scalar& s, GroupAlgebraElement a) { return a *= s; }
  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;
  std::string to_string() const;

 private:
  int m_;
  std::map<Permutation, Scalar> terms_;
};

/// c = a b for the row-major tableau: a sums the row group, b is the signed
/// sum over the column group.
GroupAlgebraElement young_symmetrizer(const YoungDiagram& lam);
/// dim Q[S_m] x: rank of left multiplication by Q[S_m].
int left_ideal_dimension(const GroupAlgebraElement& x);
/// kappa with x^2 = kappa x, if there is one.
std::optional<Scalar> quasi_idempotent_factor(const GroupAlgebraElement& x);

/// The action of S_m on V^{(x)m} generated by (b, b+1) -> tau_{(b,b+1)} R^{b,b+1},
/// with every permutation's map precomputed from a reduced word.
class PermutationAction {
 public:
  int dim() const { return dim_; }
  int degree() const { return m_; }
  const std::vector<TensorMap>& generators() const { return generators_; }
  const TensorMap& of(const Permutation& p) const;
  /// All of S_m, lexicographic.
  const std::map<Permutation, TensorMap>& maps() const { return maps_; }

 private:
  friend PermutationAction r_permutation_action(const TensorMap& R, int m);
  int dim_ = 0;
  int m_ = 0;
  std::vector<TensorMap> generators_;
  std::map<Permutation, TensorMap> maps_;
};

/// The m - 1 maps tau_{(b,b+1)} o R^{b,b+1} with no hypothesis on R.
std::vector<TensorMap> braid_generators(const TensorMap& R, int m);
/// s_b^2 = Id, s_b s_{b+1} s_b = s_{b+1} s_b s_{b+1}, s_b s_c = s_c s_b for |b - c| > 1.
CheckResult check_coxeter(const std::vector<TensorMap>& gens);
/// Throws PreconditionError unless R is unitary, solves the QYBE, and the
/// generators satisfy the Coxeter relations.
PermutationAction r_permutation_action(const TensorMap& R, int m);

TensorMap evaluate_in_action(const GroupAlgebraElement& x, const PermutationAction& action);
int image_dimension(const TensorMap& f);

/// Basis of {X : X g = g X for all g} in End(V^{(x)m}), from the reduced row
/// echelon form (one element per free entry, entries ordered (out, in)).
std::vector<TensorMap> commutant(const std::vector<TensorMap>& gens, int dim, int m);
/// Dimension of the span of the maps.
int span_dimension(const std::vector<TensorMap>& maps);
/// span(a) == span(b).
bool same_span(const std::vector<TensorMap>& a, const std::vector<TensorMap>& b);

struct HrDimension {
  /// n^{2m} minus the rank of the relations R^{12}L^{13}L^{23} - L^{23}L^{13}R^{12}
  /// inserted at every position of words of length m in the L_ij.
  int from_relations = 0;
  /// dim of the commutant of the R-permutation action.
  int from_commutant = 0;
  bool agree() const { return from_relations == from_commutant; }
};
HrDimension hr_graded_dimension(const TensorMap& R, int m);
int hr_dimension_from_relations(const TensorMap& R, int m);

struct PartitionRow {
  YoungDiagram lambda;
  int hook_dimension = 0;         // dim rho_lambda by the hook length formula
  int regular_dimension = 0;      // dim Q[S_m] c_lambda
  int comodule_dimension = 0;     // rank of c_lambda(R)
  int isotypic_dimension = 0;     // hook_dimension * comodule_dimension
  bool invariant = false;         // image of c_lambda(R) stable under the commutant
};

struct DecompositionReport {
  int dim = 0;
  int m = 0;
  std::vector<PartitionRow> rows;
  int total = 0;  // sum of isotypic dimensions
  bool total_matches() const;
  int sr_span_dimension = 0;        // dim SR_m
  int sr_commutant_dimension = 0;   // dim End_{SR_m}, identified with HR_m
  int hr_commutant_dimension = 0;   // dim End_{HR_m}
  bool double_commutant = false;    // End_{HR_m} == SR_m
};

/// Throws BoundsError when (dim V)^{2m} exceeds 4096 or m > 6.
DecompositionReport schur_weyl_decompose(const TensorMap& R, int m);

}  // namespace ybp
