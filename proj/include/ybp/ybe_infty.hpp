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
#include <utility>
#include <vector>

#include "ybp/algebra.hpp"
#include "ybp/check.hpp"
#include "ybp/linalg.hpp"
#include "ybp/tensor.hpp"
#include "ybp/tensor_map.hpp"

namespace ybp {

/// A finite-dimensional graded algebra given by structure constants:
/// e_a e_b = sum_k c^k_{ab} e_k (or [e_a, e_b] for a Lie algebra).
struct StructureConstants {
  int dim = 0;
  std::vector<int> degrees;  // empty means all zero
  std::vector<std::string> names;
  std::map<std::pair<int, int>, SparseVector> table;

  int degree(int a) const { return degrees.empty() ? 0 : degrees[static_cast<size_t>(a)]; }
  std::string name(int a) const;
  SparseVector product(int a, int b) const;
  void set(int a, int b, SparseVector v);
};

/// [x, y] = -(-1)^{|x||y|}[y, x], graded Jacobi, and the degree of each value.
std::vector<CheckResult> check_graded_lie(const StructureConstants& g);
/// Associativity and the degree of each value.
std::vector<CheckResult> check_associative(const StructureConstants& a);

/// gl_N with basis E_ij at index i*N + j (0-based), bracket the commutator.
StructureConstants gl_structure(int n);
/// The matrix algebra M_N, same basis.
StructureConstants matrix_structure(int n);
/// The one-dimensional algebra k with e e = e.
StructureConstants ground_field_structure();
/// Same table read as a Lie bracket: [x, y] = xy - (-1)^{|x||y|} yx.
StructureConstants commutator_structure(const StructureConstants& a);

/// r_n in g^{(x) n} (words of length n), one per n with r_n nonzero.
class RnFamily {
 public:
  RnFamily() = default;
  explicit RnFamily(int dim, std::vector<int> degrees = {}) : dim_(dim), degrees_(std::move(degrees)) {}
  int dim() const { return dim_; }
  /// Rejects words of the wrong length and terms not of degree 2 - n.
  void set(int n, const GradedTensor& r);
  GradedTensor get(int n) const;
  int max_n() const { return elements_.empty() ? 0 : elements_.rbegin()->first; }
  const std::map<int, GradedTensor>& elements() const { return elements_; }

 private:
  int dim_ = 0;
  std::vector<int> degrees_;
  std::map<int, GradedTensor> elements_;
};

/// Which shuffles index the CYBE-infinity sum.
/// kDefault: sigma in Sh_{i, j-1} inside S_{i+j-1}.
/// kLiteral: sigma in Sh_{i, i+j-1} inside S_{2i+j-1}, keeping those whose
/// first i+j-1 values are slots 1..n.
enum class ShuffleReading { kDefault, kLiteral };
std::string to_string(ShuffleReading r);

/// sum_{i+j=n+1} (-1)^i sum_sigma [r_i^{sigma(1)..sigma(i)}, r_j^{sigma(1), sigma(i+1)..sigma(i+j-1)}]
/// in g^{(x) n}. Throws PreconditionError when g is not a graded Lie algebra.
GradedTensor cybe_infty_residual(const StructureConstants& g, const RnFamily& fam, int n, ShuffleReading reading);

/// sum_{i+j=n+1} (-1)^i sum_{sigma in Z/n} r_i^{sigma(1)..sigma(i)} r_j^{sigma(1), sigma(i+1)..}
/// in A^{(x) n}, sigma running over the rotations (s+1 ... n 1 ... s).
/// Throws PreconditionError when A is not associative.
GradedTensor aybe_infty_residual(const StructureConstants& a, const RnFamily& fam, int n);

struct CybeInfinityReport {
  GradedTensor default_reading;
  GradedTensor literal_reading;
  bool readings_coincide = false;
};
CybeInfinityReport cybe_infty_report(const StructureConstants& g, const RnFamily& fam, int n);

/// E_ij (x) E_kl <-> the matrix unit sending e_j (x) e_l to e_i (x) e_k:
/// a tensor of gl_N (or M_N) words of length m as a map on (k^N)^{(x) m}.
TensorMap matrix_tensor_to_map(const GradedTensor& t, int n, int m);
GradedTensor map_to_matrix_tensor(const TensorMap& f);

/// "equal", "negated", "both zero" or "neither".
std::string relation(const TensorMap& a, const TensorMap& b);

/// Operations {}_n : A^{(x) n} -> A^{(x) n} on a basis of A (dim and degrees
/// as for a TruncatedAlgebra), stored as n -> n TensorMaps.
class DoubleInfinityFamily {
 public:
  DoubleInfinityFamily() = default;
  DoubleInfinityFamily(int dim, std::vector<int> degrees) : dim_(dim), degrees_(std::move(degrees)) {}
  int dim() const { return dim_; }
  int degree(int a) const { return degrees_.empty() ? 0 : degrees_[static_cast<size_t>(a)]; }
  /// Rejects a map whose columns are not of degree sum|a_i| + 2 - n.
  void set(int n, const TensorMap& op);
  const TensorMap* get(int n) const;
  const std::map<int, TensorMap>& ops() const { return ops_; }

 private:
  int dim_ = 0;
  std::vector<int> degrees_;
  std::map<int, TensorMap> ops_;
};

/// sigma {a_sigma(1), ..., a_sigma(n)}_n = sign_odd(a, sigma) {a_1, ..., a_n}_n,
/// sigma acting on the output slots.
CheckResult check_double_infinity_skew(const DoubleInfinityFamily& fam);

/// Cyclic Jacobi-infinity residual on the basis word args. The inner output
/// y_1 (x) .. (x) y_i feeds its last factor to the outer bracket:
/// {y_1 (x) .. (x) y_i, b..}_j = y_1 (x) .. (x) y_{i-1} (x) {y_i, b..}_j, and the
/// rotation sigma is applied to the output slots.
GradedTensor jacobi_infty_residual(const DoubleInfinityFamily& fam, const Word& args);
/// The residual on every basis word of length n, as an n -> n map.
TensorMap jacobi_infty_map(const DoubleInfinityFamily& fam, int n);

/// Sign of the a_n' term pulled out on the right: kPowerN = (-1)^{n|a_n''|},
/// kTrivial = +1.
enum class DoubleLeibnizSign { kPowerN, kTrivial };
/// {a_1, .., a_{n-1}, a'a''}_n = (-1)^{|a'|(|a_1|+..+|a_{n-1}|)} a' {.., a''}_n + s {.., a'}_n a''
/// on basis tuples with a'a'' inside the cap; a' multiplies the first output
/// factor on the left, a'' the last on the right.
CheckResult check_double_leibniz(const DoubleInfinityFamily& fam, const TruncatedAlgebra& A, int n,
                                 DoubleLeibnizSign sign = DoubleLeibnizSign::kPowerN);

}  // namespace ybp
