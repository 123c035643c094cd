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

#include <cstddef>
#include <string>
#include <vector>

namespace ybp {

/// Outcome of one exhaustive check. Only the first failing case (in the
/// check's deterministic enumeration order) is kept as the witness.
struct CheckResult {
  std::string name;
  bool passed = true;
  size_t cases = 0;
  std::string witness;

  explicit CheckResult(std::string n = {}) : name(std::move(n)) {}
  void fail(std::string w) {
    if (passed) {
      passed = false;
      witness = std::move(w);
    }
  }
};

inline bool all_passed(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace ybp
