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

#include <optional>

#include "ybp/tensor_map.hpp"

namespace ybp {

/// One nonzero entry of a residual map.
struct Witness {
  Word out;
  Word in;
  Scalar coefficient;
};

/// Residual of a Yang-Baxter-type equation on V^{(x)3}.
/// is_zero <=> residual has no entries; witness is the lexicographically first
/// (out, in) entry when nonzero.
struct YbeReport {
  TensorMap residual;
  bool is_zero = true;
  std::optional<Witness> witness;
};

YbeReport make_report(TensorMap residual);

/// r + r^{21} = 0, with r^{21} = swap o r o swap.
bool is_skew(const TensorMap& r);

/// [r12, r13] - [r23, r12] + [r13, r23]
YbeReport cybe_residual(const TensorMap& r);
/// r12 r13 - r23 r12 + r13 r23
YbeReport aybe_residual(const TensorMap& r);
/// r13 r12 - r12 r23 + r23 r13, so that CYBE = AYBE - AYBE'.
TensorMap aybe_prime(const TensorMap& r);
/// R12 R13 R23 - R23 R13 R12
YbeReport qybe_residual(const TensorMap& R);
/// R^{21} R = Id
bool unitarity_check(const TensorMap& R);

/// (132) o AYBE(r) o (132), the slot-(2,3) conjugate of the AYBE residual.
TensorMap conjugated_aybe(const TensorMap& r);
/// CYBE(r) == AYBE(r) - (132) AYBE(r) (132). Throws PreconditionError if r is
/// not skew.
bool cae_identity_check(const TensorMap& r);

}  // namespace ybp
