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

#include "ybp/algebra.hpp"
#include "ybp/check.hpp"
#include "ybp/tensor_map.hpp"
#include "ybp/ybe.hpp"

namespace ybp {

/// A double bracket A (x) A -> A (x) A on a basis of size dim(), stored as a
/// 2 -> 2 TensorMap whose letters are basis indices: {{a, b}} is the column
/// of the word (a, b).
class DoubleBracket {
 public:
  DoubleBracket() = default;
  explicit DoubleBracket(TensorMap table);

  int dim() const { return table_.dim(); }
  const TensorMap& table() const { return table_; }
  GradedTensor operator()(int a, int b) const { return table_.column({a, b}); }
  /// Bilinear extension to elements a (x) b of A (x) A.
  GradedTensor apply(const GradedTensor& t) const { return table_.apply(t); }
  /// {{a, y}} for y a combination of basis elements.
  GradedTensor second(int a, const SparseVector& y) const;
  GradedTensor first(const SparseVector& y, int b) const;

 private:
  TensorMap table_;
};

DoubleBracket double_bracket_from_r(const TensorMap& r);
TensorMap r_from_double_bracket(const DoubleBracket& db);

/// Extends values on pairs of degree-one generators to the whole truncated
/// algebra using {{a, bc}} = (b (x) 1){{a, c}} + {{a, b}}(1 (x) c) in the
/// second argument and the rule it forces through skew-symmetry in the first,
/// {{bc, a}} = (1 (x) b) * {{c, a}} + {{b, a}} * (c (x) 1), where
/// (1 (x) b) * (y' (x) y'') = y' (x) b y'' and (z' (x) z'') * (c (x) 1) = z'c (x) z''.
/// Brackets with vertex idempotents are zero.
DoubleBracket extend_double_bracket(const TruncatedAlgebra& A,
                                    const std::map<std::pair<int, int>, GradedTensor>& on_generators);

/// On k[x]/(x^{n}): {{x, x}} = alpha (x (x) 1 - 1 (x) x) + beta (x^2 (x) 1 - 1 (x) x^2),
/// extended as above. A must be truncated_polynomial(cap) with cap >= 2 when
/// beta != 0.
DoubleBracket one_variable_bracket(const TruncatedAlgebra& A, const Scalar& alpha, const Scalar& beta = 0);

/// sum_{i=0}^{2} (231)^i o {{-, {{-, -}}}} o (231)^{-i}, where
/// {{a, y' (x) y''}} = {{a, y'}} (x) y''; equals r12 r23 + r23 r31 + r31 r12.
TensorMap dbjac_map(const DoubleBracket& db);

/// dbskew and dbjac (the double Lie axioms).
std::vector<CheckResult> check_double_lie(const DoubleBracket& db);
/// dbskew, dbjac, dbpoiss on all basis triples within the cap, and the
/// derived first-argument rule (products above the cap are skipped in window
/// mode).
std::vector<CheckResult> check_double_axioms(const DoubleBracket& db, const TruncatedAlgebra& A);
CheckResult check_dbpoiss(const DoubleBracket& db, const TruncatedAlgebra& A);
CheckResult check_first_argument_rule(const DoubleBracket& db, const TruncatedAlgebra& A);

struct DbjacAybeReport {
  bool skew = false;
  TensorMap dbjac;
  /// -(13) o dbjac o (13), i.e. first and third slots swapped and negated.
  TensorMap transformed;
  YbeReport aybe;
  /// transformed == AYBE(r); only meaningful when skew.
  bool equal = false;
};
DbjacAybeReport dbjac_to_aybe(const DoubleBracket& db);

struct AlmcybeReport {
  CheckResult dbpoiss;
  bool cybe_zero = false;
  /// CYBE(a (x) b1b2 (x) c) = (b1 (x) 1 (x) 1)AYBE(a (x) b2 (x) c)
  ///   - (1 (x) 1 (x) b1)AYBE'(a (x) b2 (x) c) + CYBE(a (x) b1 (x) c)(1 (x) b2 (x) 1)
  CheckResult expansion{"CYBE expansion identity"};
  /// (a (x) 1 (x) 1)AYBE = (1 (x) 1 (x) a)AYBE for all basis a.
  CheckResult almcybe{"almost-CYBE identity"};
  bool aybe_zero = false;
  bool preconditions() const { return dbpoiss.passed && cybe_zero; }
};
AlmcybeReport almcybe_check(const DoubleBracket& db, const TruncatedAlgebra& A);

struct CommutativeRemarkReport {
  bool commutative = false;
  CheckResult dbpoiss;
  CheckResult first_argument;
  CheckResult comder1{"four-way equality"};
  CheckResult comder2{"two-factor equality"};
};
CommutativeRemarkReport commutative_remark_checks(const DoubleBracket& db, const TruncatedAlgebra& A);

}  // namespace ybp
