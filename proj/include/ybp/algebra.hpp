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
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ybp/check.hpp"
#include "ybp/linalg.hpp"
#include "ybp/tensor.hpp"

namespace ybp {

struct QuiverEdge {
  std::string label;
  int source = 0;
  int target = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<QuiverEdge> edges;

  /// Throws InputError on bad endpoints or repeated edge labels.
  void validate() const;
  /// Adds e* (reversed, labelled label + "*") for every edge e.
  Quiver doubled() const;
  bool strongly_connected() const;
};

/// Sufficient conditions quoted for primeness/noncommutativity of kQ. These
/// are structural checks on Q only; primeness is not decided from first
/// principles.
struct PrimenessCriteria {
  bool strongly_connected = false;
  bool two_vertices_or_edges = false;
  bool applies() const { return strongly_connected && two_vertices_or_edges; }
};
PrimenessCriteria primeness_criteria(const Quiver& q);

/// kQuotient: products of degree above the cap are zero (the algebra is the
/// quotient by everything above the cap). kWindow: such products are flagged
/// and asking for them raises TruncationError.
enum class TruncationMode { kQuotient, kWindow };

struct AlgebraBasisElement {
  std::string label;
  int degree = 0;
  /// Edge indices of the underlying path (empty for a vertex idempotent).
  std::vector<int> path;
  /// Initial vertex of the path.
  int vertex = 0;
};

/// Finite-dimensional associative algebra given by a basis and structure
/// constants. Elements are SparseVectors over basis indices; elements of
/// A^{(x)k} are GradedTensors whose letters are basis indices.
class TruncatedAlgebra {
 public:
  TruncatedAlgebra() = default;
  TruncatedAlgebra(std::vector<AlgebraBasisElement> basis, int cap, TruncationMode mode);

  int dim() const { return static_cast<int>(basis_.size()); }
  int cap() const { return cap_; }
  TruncationMode mode() const { return mode_; }
  const AlgebraBasisElement& element(int i) const { return basis_.at(static_cast<size_t>(i)); }
  const std::vector<AlgebraBasisElement>& basis() const { return basis_; }
  std::optional<int> find(const std::string& label) const;
  /// Basis index of the element with exactly this path, if any.
  std::optional<int> find_path(int vertex, const std::vector<int>& path) const;

  void set_product(int i, int j, SparseVector v);
  void set_overflow(int i, int j);
  void set_unit(SparseVector u) { unit_ = std::move(u); }

  bool overflows(int i, int j) const { return overflow_.contains({i, j}); }
  SparseVector multiply_basis(int i, int j) const;
  SparseVector multiply(const SparseVector& x, const SparseVector& y) const;
  const SparseVector& unit() const { return unit_; }
  /// Degree-one basis elements.
  std::vector<int> generators() const;

  CheckResult check_associativity() const;
  CheckResult check_unit() const;
  bool is_commutative() const;

  std::string format(const SparseVector& x) const;
  std::string format(const GradedTensor& t) const;

 private:
  std::vector<AlgebraBasisElement> basis_;
  std::map<std::pair<int, int>, SparseVector> mult_;
  std::set<std::pair<int, int>> overflow_;
  SparseVector unit_;
  int cap_ = 0;
  TruncationMode mode_ = TruncationMode::kWindow;
};

/// Paths of length <= cap (vertex idempotents included) with concatenation:
/// pq is the concatenation when the terminal vertex of p is the initial
/// vertex of q, and 0 otherwise.
TruncatedAlgebra path_algebra(const Quiver& q, int cap, TruncationMode mode = TruncationMode::kWindow);

/// k[x]/(x^{cap+1}) as the path algebra of the one-loop quiver.
TruncatedAlgebra truncated_polynomial(int cap, const std::string& var = "x");

/// kQbar / (sum_e ee* - e*e), quotient of the path algebra truncated at cap.
/// Normal forms are the paths that are not leading terms, for the order
/// (length, then edge sequence) with the largest path leading.
TruncatedAlgebra preprojective_algebra(const Quiver& q, int cap);

/// kQbar / (lambda - sum_e ee* - e*e) with lambda = sum_v lambda_v e_v,
/// computed in kQbar modulo paths longer than cap. The relation is not
/// homogeneous, so the truncation is a quotient by a non-graded ideal and the
/// top degrees collapse accordingly.
TruncatedAlgebra deformed_preprojective_algebra(const Quiver& q, int cap, const std::vector<Scalar>& lambda);

/// Left (left = true) or right multiplication of slot `slot` of every term of
/// t in A^{(x)k} by the basis combination a.
GradedTensor multiply_in_slot(const TruncatedAlgebra& A, const GradedTensor& t, int slot, const SparseVector& a,
                              bool left);

}  // namespace ybp
