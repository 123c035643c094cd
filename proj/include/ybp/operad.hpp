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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ybp/linalg.hpp"
#include "ybp/permutation.hpp"

namespace ybp {

enum class Symmetry { kNone, kSymmetric, kSkew };

std::string to_string(Symmetry s);
Symmetry parse_symmetry(const std::string& s);

/// Coefficients of
///   sum_sigma lambda_{sigma,1} b_s1 * (b_s2 * b_s3) + lambda_{sigma,2} (b_s1 * b_s2) * b_s3
/// with sigma running over S_3 in lexicographic one-line order. Unknown k is
/// (sigma = all_permutations(3)[k / 2], shape = k % 2 + 1).
struct QuadraticRelation {
  std::array<Scalar, 12> lambda{};

  static int index(const Permutation& sigma, int shape);
  Scalar& at(const Permutation& sigma, int shape) { return lambda[static_cast<size_t>(index(sigma, shape))]; }
  /// Coordinates in the unknowns of the given symmetry: all 12 for kNone,
  /// otherwise the 3 coefficients of b1*(b2*b3), b2*(b3*b1), b3*(b1*b2) after
  /// rewriting with x*y = eps y*x.
  std::vector<Scalar> coordinates(Symmetry sym) const;
};

int unknown_count(Symmetry sym);
std::string unknown_name(Symmetry sym, int k);

struct Constraint {
  SparseVector row;  // scaled so the first coefficient is 1
  int slot = 0;      // argument that was split as a product
  std::string monomial;  // the (x*y)(z*w) term whose coefficient this is
  std::string to_string(Symmetry sym) const;
};

struct ObstructionSystem {
  Symmetry sym = Symmetry::kNone;
  std::vector<Constraint> constraints;
  /// Basis of the solution space, from the reduced row echelon form.
  std::vector<SparseVector> solution_basis;
};

/// Splits argument `slot` (1..3) as b' b'', expands the relation with the
/// Leibniz rule in both arguments of *, and returns one constraint per
/// distinct (up to scale) coefficient of a monomial (x*y)(z*w).
ObstructionSystem leibniz_obstruction(Symmetry sym, int slot);
/// Union over slots 1, 2, 3 (duplicates removed) with its solution space.
ObstructionSystem full_constraint_system(Symmetry sym);

struct Violation {
  Constraint constraint;
  Scalar value;
};
/// Constraints not satisfied by `coords`, in system order.
std::vector<Violation> violations(const ObstructionSystem& sys, const std::vector<Scalar>& coords);

struct Classification {
  std::string name;
  /// Set when the relation space is not inside the solution space.
  std::optional<Violation> witness;
  int r3_dimension = 0;
};
/// Names the operad F/(R2 + R3) with R2 given by sym and R3 spanned by
/// r3_basis (coordinates in the unknowns of sym).
Classification classify(Symmetry sym, const std::vector<std::vector<Scalar>>& r3_basis);

/// Independent check: a random bilinear * on V (dim V = 8, integer structure
/// constants from the seed, symmetrised or antisymmetrised per sym) is
/// extended to Sym V as a biderivation, and
///   rel(v1 v2, v3, v4) - v1 rel(v2, v3, v4) - v2 rel(v1, v3, v4)
/// (the slot-th argument split) is evaluated. Returns true iff it vanishes.
bool symbolic_expand_oracle(const std::vector<Scalar>& coords, Symmetry sym, int slot, std::uint64_t seed);

}  // namespace ybp
