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

#include <stdexcept>
#include <string>

namespace ybp {

/// Malformed arguments: degree mismatches, index out of range, bad sizes.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A file or literal could not be parsed. Carries the 1-based line number
/// (0 when not applicable) and the offending field.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, std::string field, const std::string& what)
      : std::runtime_error(locate(line, field, what)),
        line_(line),
        field_(std::move(field)) {}

  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  static std::string locate(int line, const std::string& field,
                            const std::string& what) {
    std::string s = "parse error";
    if (line > 0) s += " at line " + std::to_string(line);
    if (!field.empty()) s += " (field '" + field + "')";
    return s + ": " + what;
  }

  int line_;
  std::string field_;
};

/// An operation's mathematical precondition does not hold for the input.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A product or bracket left the configured degree window.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested computation exceeds the supported desk-scale bounds.
class BoundsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ybp
