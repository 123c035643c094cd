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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ybp {

/// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Scalar = mpq_class;

/// Parses "p", "-p" or "p/q". Rejects zero denominators, whitespace inside the
/// literal and anything that is not an integer ratio. Throws InputError.
Scalar parse_scalar(std::string_view text);

/// "p/q" when the denominator is not one, otherwise "p".
std::string format_scalar(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

}  // namespace ybp
