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

#include <filesystem>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ybp/algebra.hpp"
#include "ybp/double_poisson.hpp"
#include "ybp/error.hpp"
#include "ybp/linfty.hpp"
#include "ybp/operad.hpp"
#include "ybp/tensor_map.hpp"
#include "ybp/ybe_infty.hpp"

namespace ybp {

// Every file starts with "ybp <kind> 1". '#' starts a comment, ';' separates
// fields, letters of words are 0-based, scalars are "p" or "p/q".

enum class SchemaKind {
  kTensorMap,
  kQuiver,
  kStructure,
  kRelation,
  kLinfty,
  kRnFamily,
  kAlgebra,
  kDoubleBracket,
};
std::string to_string(SchemaKind k);

/// Structure constants plus whether they are read as a Lie bracket or as an
/// associative product.
struct StructureFile {
  StructureConstants constants;
  bool lie = true;
};

/// R3 basis for the operad classifier, in the coordinates of `sym`.
struct RelationFile {
  Symmetry sym = Symmetry::kNone;
  std::vector<std::vector<Scalar>> relations;
};

/// A truncated algebra described by construction.
struct AlgebraSpec {
  std::string type = "path";  // path | preprojective | deformed | polynomial
  Quiver quiver;
  int cap = 0;
  TruncationMode mode = TruncationMode::kWindow;
  std::vector<Scalar> lambda;  // deformed only, one per vertex
  TruncatedAlgebra build() const;
};

/// Values of a double bracket on pairs of generators, by basis label, or the
/// one-variable family on k[x]/(x^n).
struct DoubleBracketSpec {
  struct Term {
    Scalar coefficient;
    std::string left, right;
  };
  std::vector<std::pair<std::pair<std::string, std::string>, std::vector<Term>>> values;
  bool one_variable = false;
  Scalar alpha, beta;
  DoubleBracket build(const TruncatedAlgebra& A) const;
};

using ParsedObject = std::variant<TensorMap, Quiver, StructureFile, RelationFile, MultiBracketFamily, RnFamily,
                                  AlgebraSpec, DoubleBracketSpec>;

SchemaKind schema_kind(const ParsedObject& obj);

/// Parses text; errors are ParseError(line, field).
ParsedObject parse_text(const std::string& text);
/// Reads and parses a file. A missing file is a ParseError at line 0.
ParsedObject parse_inputs(const std::filesystem::path& path);

/// parse_inputs with the kind checked.
template <class T>
T parse_as(const std::filesystem::path& path) {
  ParsedObject obj = parse_inputs(path);
  if (auto* p = std::get_if<T>(&obj)) return std::move(*p);
  throw ParseError(1, "kind", path.string() + ": unexpected schema kind " + to_string(schema_kind(obj)));
}

/// "0 1 2" or "[0 1 2]".
Word parse_word(const std::string& text);

std::string write_tensormap(const TensorMap& f);
std::string write_quiver(const Quiver& q);
std::string write_rn_family(const RnFamily& fam);
/// Every stored ordered tuple, with "complete none".
std::string write_linfty_family(const MultiBracketFamily& fam);

LinftyConvention parse_convention(const std::string& skew, const std::string& leibniz, const std::string& jacobi,
                                  bool full_sum);

}  // namespace ybp
