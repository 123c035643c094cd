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

#include "ybp/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ybp/error.hpp"

namespace ybp {

std::string to_string(SchemaKind k) {
  switch (k) {
    case SchemaKind::kTensorMap: return "tensormap";
    case SchemaKind::kQuiver: return "quiver";
    case SchemaKind::kStructure: return "structure";
    case SchemaKind::kRelation: return "relation";
    case SchemaKind::kLinfty: return "linfty";
    case SchemaKind::kRnFamily: return "rnfamily";
    case SchemaKind::kAlgebra: return "algebra";
    case SchemaKind::kDoubleBracket: return "doublebracket";
  }
  return "?";
}

SchemaKind schema_kind(const ParsedObject& obj) { return static_cast<SchemaKind>(obj.index()); }

namespace {

using Tokens = std::vector<std::string>;

struct Line {
  int number = 0;
  std::vector<Tokens> fields;  // split on ';', then on whitespace
  const std::string& keyword() const { return fields[0][0]; }
};

Tokens split_ws(const std::string& s) {
  Tokens out;
  std::istringstream in(s);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int n = 0;
  while (std::getline(in, raw)) {
    ++n;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    Line l;
    l.number = n;
    size_t start = 0;
    while (true) {
      size_t semi = raw.find(';', start);
      l.fields.push_back(split_ws(raw.substr(start, semi == std::string::npos ? std::string::npos : semi - start)));
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
    if (l.fields.size() == 1 && l.fields[0].empty()) continue;
    if (l.fields[0].empty()) throw ParseError(n, "keyword", "line starts with ';'");
    lines.push_back(std::move(l));
  }
  return lines;
}

Scalar scalar_at(const std::string& tok, int line, const std::string& field) {
  try {
    return parse_scalar(tok);
  } catch (const InputError& e) {
    throw ParseError(line, field, "'" + tok + "' is not a rational literal: " + e.what());
  }
}

int int_at(const std::string& tok, int line, const std::string& field) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) {
    throw ParseError(line, field, "'" + tok + "' is not an integer");
  }
  return v;
}

void expect_count(const Line& l, size_t nfields, const std::string& what) {
  if (l.fields.size() != nfields) {
    throw ParseError(l.number, l.keyword(),
                     "expected " + std::to_string(nfields) + " ';'-separated fields (" + what + ")");
  }
}

int single_int(const Line& l) {
  expect_count(l, 1, l.keyword() + " N");
  if (l.fields[0].size() != 2) throw ParseError(l.number, l.keyword(), "expected '" + l.keyword() + " N'");
  return int_at(l.fields[0][1], l.number, l.keyword());
}

Word word_at(const Tokens& toks, size_t from, int dim, int line, const std::string& field) {
  Word w;
  for (size_t i = from; i < toks.size(); ++i) {
    int a = int_at(toks[i], line, field);
    if (a < 0 || a >= dim) {
      throw ParseError(line, field, "letter " + toks[i] + " outside 0.." + std::to_string(dim - 1));
    }
    w.push_back(a);
  }
  return w;
}

[[noreturn]] void unknown_keyword(const Line& l, const std::string& kind) {
  throw ParseError(l.number, l.keyword(), "unknown keyword for a " + kind + " file");
}

// Runs f, turning InputError into a ParseError at the given line.
template <class F>
auto located(int line, const std::string& field, F&& f) {
  try {
    return f();
  } catch (const InputError& e) {
    throw ParseError(line, field, e.what());
  }
}

TensorMap parse_tensormap(const std::vector<Line>& lines) {
  int dim = -1, dom = -1, cod = -1;
  std::vector<const Line*> entries;
  for (const Line& l : lines) {
    const std::string& k = l.keyword();
    if (k == "dim") dim = single_int(l);
    else if (k == "domain") dom = single_int(l);
    else if (k == "codomain") cod = single_int(l);
    else if (k == "entry") entries.push_back(&l);
    else unknown_keyword(l, "tensormap");
  }
  if (dim < 1) throw ParseError(0, "dim", "tensormap needs 'dim N' with N >= 1");
  if (dom < 0) throw ParseError(0, "domain", "tensormap needs 'domain N'");
  if (cod < 0) throw ParseError(0, "codomain", "tensormap needs 'codomain N'");
  TensorMap f(dim, dom, cod);
  for (const Line* l : entries) {
    expect_count(*l, 3, "entry <out> ; <in> ; <coefficient>");
    Word out = word_at(l->fields[0], 1, dim, l->number, "out");
    if (static_cast<int>(out.size()) != cod) throw ParseError(l->number, "out", "word length differs from codomain");
    Word in = word_at(l->fields[1], 0, dim, l->number, "in");
    if (static_cast<int>(in.size()) != dom) throw ParseError(l->number, "in", "word length differs from domain");
    if (l->fields[2].size() != 1) throw ParseError(l->number, "coefficient", "expected one scalar");
    f.add_entry(out, in, scalar_at(l->fields[2][0], l->number, "coefficient"));
  }
  return f;
}

// vertex / vertices / edge lines; returns false if the keyword is not a quiver one.
bool quiver_line(const Line& l, Quiver& q, std::map<std::string, int>& names) {
  const std::string& k = l.keyword();
  auto add_vertex = [&](const std::string& name) {
    if (!names.emplace(name, static_cast<int>(q.vertices.size())).second) {
      throw ParseError(l.number, "vertex", "repeated vertex '" + name + "'");
    }
    q.vertices.push_back(name);
  };
  if (k == "vertex") {
    if (l.fields.size() != 1 || l.fields[0].size() != 2) throw ParseError(l.number, "vertex", "expected 'vertex NAME'");
    add_vertex(l.fields[0][1]);
  } else if (k == "vertices") {
    int n = single_int(l);
    if (n < 1) throw ParseError(l.number, "vertices", "need at least one vertex");
    for (int i = 1; i <= n; ++i) add_vertex(std::to_string(i));
  } else if (k == "edge") {
    if (l.fields.size() != 1 || l.fields[0].size() != 4) {
      throw ParseError(l.number, "edge", "expected 'edge LABEL SOURCE TARGET'");
    }
    auto vertex = [&](const std::string& name, const char* field) {
      auto it = names.find(name);
      if (it == names.end()) throw ParseError(l.number, field, "unknown vertex '" + name + "'");
      return it->second;
    };
    q.edges.push_back({l.fields[0][1], vertex(l.fields[0][2], "source"), vertex(l.fields[0][3], "target")});
  } else {
    return false;
  }
  return true;
}

Quiver parse_quiver(const std::vector<Line>& lines) {
  Quiver q;
  std::map<std::string, int> names;
  for (const Line& l : lines) {
    if (!quiver_line(l, q, names)) unknown_keyword(l, "quiver");
  }
  if (q.vertices.empty()) throw ParseError(0, "vertex", "quiver has no vertices");
  located(0, "edge", [&] { q.validate(); return 0; });
  return q;
}

StructureFile parse_structure(const std::vector<Line>& lines) {
  StructureFile out;
  bool have_kind = false, builtin = false;
  int dim = -1;
  std::vector<const Line*> products;
  for (const Line& l : lines) {
    const std::string& k = l.keyword();
    const Tokens& t = l.fields[0];
    if (k == "kind") {
      if (t.size() != 2 || (t[1] != "lie" && t[1] != "associative")) {
        throw ParseError(l.number, "kind", "expected 'kind lie' or 'kind associative'");
      }
      out.lie = t[1] == "lie";
      have_kind = true;
    } else if (k == "builtin") {
      if (t.size() == 3 && (t[1] == "gl" || t[1] == "matrix")) {
        int n = int_at(t[2], l.number, "builtin");
        if (n < 1 || n > 3) throw ParseError(l.number, "builtin", "size must be 1..3");
        out.constants = t[1] == "gl" ? gl_structure(n) : matrix_structure(n);
        if (!have_kind) out.lie = t[1] == "gl";
      } else if (t.size() == 2 && t[1] == "field") {
        out.constants = ground_field_structure();
        if (!have_kind) out.lie = false;
      } else {
        throw ParseError(l.number, "builtin", "expected 'builtin gl N', 'builtin matrix N' or 'builtin field'");
      }
      builtin = true;
      dim = out.constants.dim;
    } else if (k == "dim") {
      dim = single_int(l);
      if (dim < 1) throw ParseError(l.number, "dim", "dimension must be positive");
      out.constants.dim = dim;
    } else if (k == "degrees") {
      out.constants.degrees.clear();
      for (size_t i = 1; i < t.size(); ++i) out.constants.degrees.push_back(int_at(t[i], l.number, "degrees"));
    } else if (k == "names") {
      out.constants.names.assign(t.begin() + 1, t.end());
    } else if (k == "product") {
      products.push_back(&l);
    } else {
      unknown_keyword(l, "structure");
    }
  }
  if (dim < 1) throw ParseError(0, "dim", "structure file needs 'dim N' or 'builtin ...'");
  if (!out.constants.degrees.empty() && static_cast<int>(out.constants.degrees.size()) != dim) {
    throw ParseError(0, "degrees", "need one degree per basis element");
  }
  if (!out.constants.names.empty() && static_cast<int>(out.constants.names.size()) != dim) {
    throw ParseError(0, "names", "need one name per basis element");
  }
  if (builtin && !products.empty()) throw ParseError(products[0]->number, "product", "builtin tables are fixed");
  std::map<std::pair<int, int>, SparseVector> table;
  for (const Line* l : products) {
    if (l->fields[0].size() != 3) throw ParseError(l->number, "product", "expected 'product A B ; c K ; ...'");
    Word ab = word_at(l->fields[0], 1, dim, l->number, "product");
    SparseVector& v = table[{ab[0], ab[1]}];
    for (size_t f = 1; f < l->fields.size(); ++f) {
      const Tokens& t = l->fields[f];
      if (t.size() != 2) throw ParseError(l->number, "term", "expected '<coefficient> <index>'");
      Scalar c = scalar_at(t[0], l->number, "term");
      Word kk = word_at(t, 1, dim, l->number, "term");
      axpy(v, c, {{kk[0], Scalar(1)}});
    }
  }
  for (auto& [ab, v] : table) out.constants.set(ab.first, ab.second, v);
  return out;
}

RelationFile parse_relation(const std::vector<Line>& lines) {
  RelationFile out;
  bool have_sym = false;
  // Each relation is kept as raw lambdas or raw coordinates until sym is known.
  struct Pending {
    QuadraticRelation lambdas;
    std::map<int, Scalar> coords;
    bool used_lambda = false, used_coord = false;
    int line = 0;
  };
  std::vector<Pending> pending;
  for (const Line& l : lines) {
    const std::string& k = l.keyword();
    const Tokens& t = l.fields[0];
    if (k == "sym") {
      if (t.size() != 2) throw ParseError(l.number, "sym", "expected 'sym none|sym|skew'");
      out.sym = located(l.number, "sym", [&] { return parse_symmetry(t[1]); });
      have_sym = true;
    } else if (k == "relation") {
      pending.push_back({});
      pending.back().line = l.number;
    } else if (k == "lambda" || k == "coord") {
      if (pending.empty()) throw ParseError(l.number, k, "'" + k + "' before the first 'relation' line");
      Pending& p = pending.back();
      if (k == "lambda") {
        if (t.size() != 4) throw ParseError(l.number, "lambda", "expected 'lambda PERM SHAPE VALUE'");
        Permutation sigma = located(l.number, "permutation", [&] { return parse_permutation(t[1]); });
        if (sigma.size() != 3) throw ParseError(l.number, "permutation", "expected an element of S_3");
        int shape = int_at(t[2], l.number, "shape");
        if (shape != 1 && shape != 2) throw ParseError(l.number, "shape", "shape is 1 or 2");
        p.lambdas.at(sigma, shape) += scalar_at(t[3], l.number, "value");
        p.used_lambda = true;
      } else {
        if (t.size() != 3) throw ParseError(l.number, "coord", "expected 'coord K VALUE'");
        p.coords[int_at(t[1], l.number, "coord")] += scalar_at(t[2], l.number, "value");
        p.used_coord = true;
      }
    } else {
      unknown_keyword(l, "relation");
    }
  }
  if (!have_sym) throw ParseError(0, "sym", "relation file needs 'sym none|sym|skew'");
  const int n = unknown_count(out.sym);
  for (const Pending& p : pending) {
    if (p.used_lambda && p.used_coord) throw ParseError(p.line, "relation", "mixes lambda and coord lines");
    std::vector<Scalar> v = p.lambdas.coordinates(out.sym);
    for (const auto& [k, c] : p.coords) {
      if (k < 0 || k >= n) {
        throw ParseError(p.line, "coord", "coordinate " + std::to_string(k) + " outside 0.." + std::to_string(n - 1));
      }
      v[static_cast<size_t>(k)] += c;
    }
    out.relations.push_back(std::move(v));
  }
  return out;
}

MultiBracketFamily parse_linfty(const std::vector<Line>& lines) {
  GradedBasis basis;
  std::map<std::string, int> names;
  std::string complete = "none";
  std::vector<const Line*> brackets;
  for (const Line& l : lines) {
    const std::string& k = l.keyword();
    const Tokens& t = l.fields[0];
    if (k == "generator") {
      if (l.fields.size() != 1 || t.size() != 3) throw ParseError(l.number, "generator", "expected 'generator NAME DEGREE'");
      if (!brackets.empty()) throw ParseError(l.number, "generator", "generators must precede brackets");
      if (!names.emplace(t[1], basis.size()).second) throw ParseError(l.number, "generator", "repeated name " + t[1]);
      basis.names.push_back(t[1]);
      basis.degrees.push_back(int_at(t[2], l.number, "degree"));
    } else if (k == "complete") {
      if (t.size() != 2 || (t[1] != "none" && t[1] != "koszul" && t[1] != "sign_odd")) {
        throw ParseError(l.number, "complete", "expected 'complete none|koszul|sign_odd'");
      }
      complete = t[1];
    } else if (k == "bracket") {
      brackets.push_back(&l);
    } else {
      unknown_keyword(l, "linfty");
    }
  }
  if (basis.size() == 0) throw ParseError(0, "generator", "no generators");
  auto gen = [&](const std::string& s, int line, const char* field) {
    auto it = names.find(s);
    if (it == names.end()) throw ParseError(line, field, "unknown generator '" + s + "'");
    return it->second;
  };
  MultiBracketFamily fam(basis);
  std::set<std::vector<int>> seen;
  for (const Line* l : brackets) {
    std::vector<int> args;
    for (size_t i = 1; i < l->fields[0].size(); ++i) args.push_back(gen(l->fields[0][i], l->number, "arguments"));
    if (args.empty()) throw ParseError(l->number, "arguments", "bracket needs at least one argument");
    GradedTensor value;
    for (size_t f = 1; f < l->fields.size(); ++f) {
      const Tokens& t = l->fields[f];
      if (t.empty()) throw ParseError(l->number, "term", "empty term");
      Scalar c = scalar_at(t[0], l->number, "term");
      Word w;
      for (size_t i = 1; i < t.size(); ++i) w.push_back(gen(t[i], l->number, "term"));
      value.add_term(w, c);
    }
    value = supersym_normalize(basis, value);
    std::vector<int> key = args;
    if (complete != "none") std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) {
      throw ParseError(l->number, "arguments", complete == "none" ? "bracket given twice" : "bracket given twice up to order");
    }
    located(l->number, "value", [&] {
      if (complete == "none") fam.set(args, value);
      else fam.set_skew(args, value, complete == "koszul" ? SkewSign::kKoszul : SkewSign::kSignOdd);
      return 0;
    });
  }
  return fam;
}

RnFamily parse_rn_family(const std::vector<Line>& lines) {
  int dim = -1;
  std::vector<int> degrees;
  std::map<int, GradedTensor> by_n;
  std::map<int, int> first_line;
  for (const Line& l : lines) {
    const std::string& k = l.keyword();
    const Tokens& t = l.fields[0];
    if (k == "dim") {
      dim = single_int(l);
      if (dim < 1) throw ParseError(l.number, "dim", "dimension must be positive");
    } else if (k == "degrees") {
      for (size_t i = 1; i < t.size(); ++i) degrees.push_back(int_at(t[i], l.number, "degrees"));
    } else if (k == "term") {
      if (dim < 1) throw ParseError(l.number, "term", "'dim' must come first");
      expect_count(l, 2, "term <coefficient> ; <word>");
      if (t.size() != 2) throw ParseError(l.number, "coefficient", "expected 'term COEFF ; WORD'");
      Scalar c = scalar_at(t[1], l.number, "coefficient");
      Word w = word_at(l.fields[1], 0, dim, l.number, "word");
      if (w.empty()) throw ParseError(l.number, "word", "empty word");
      int n = static_cast<int>(w.size());
      by_n[n].add_term(w, c);
      first_line.emplace(n, l.number);
    } else {
      unknown_keyword(l, "rnfamily");
    }
  }
  if (dim < 1) throw ParseError(0, "dim", "rnfamily needs 'dim N'");
  if (!degrees.empty() && static_cast<int>(degrees.size()) != dim) {
    throw ParseError(0, "degrees", "need one degree per basis element");
  }
  RnFamily fam(dim, degrees);
  for (const auto& [n, r] : by_n) {
    located(first_line[n], "term", [&] { fam.set(n, r); return 0; });
  }
  return fam;
}

AlgebraSpec parse_algebra(const std::vector<Line>& lines) {
  AlgebraSpec spec;
  std::map<std::string, int> names;
  std::map<std::string, std::pair<Scalar, int>> lambdas;
  bool have_cap = false;
  for (const Line& l : lines) {
    const std::string& k = l.keyword();
    const Tokens& t = l.fields[0];
    if (quiver_line(l, spec.quiver, names)) continue;
    if (k == "type") {
      if (t.size() != 2 || (t[1] != "path" && t[1] != "preprojective" && t[1] != "deformed" && t[1] != "polynomial")) {
        throw ParseError(l.number, "type", "expected path, preprojective, deformed or polynomial");
      }
      spec.type = t[1];
    } else if (k == "cap") {
      spec.cap = single_int(l);
      if (spec.cap < 0) throw ParseError(l.number, "cap", "negative cap");
      have_cap = true;
    } else if (k == "mode") {
      if (t.size() != 2 || (t[1] != "quotient" && t[1] != "window")) {
        throw ParseError(l.number, "mode", "expected 'mode quotient|window'");
      }
      spec.mode = t[1] == "quotient" ? TruncationMode::kQuotient : TruncationMode::kWindow;
    } else if (k == "lambda") {
      if (t.size() != 3) throw ParseError(l.number, "lambda", "expected 'lambda VERTEX VALUE'");
      lambdas[t[1]] = {scalar_at(t[2], l.number, "value"), l.number};
    } else {
      unknown_keyword(l, "algebra");
    }
  }
  if (!have_cap) throw ParseError(0, "cap", "algebra needs 'cap N'");
  if (spec.type == "polynomial") {
    if (!spec.quiver.vertices.empty()) throw ParseError(0, "type", "polynomial algebras take no quiver");
    return spec;
  }
  if (spec.quiver.vertices.empty()) throw ParseError(0, "vertex", "algebra has no vertices");
  located(0, "edge", [&] { spec.quiver.validate(); return 0; });
  if (spec.type == "deformed") {
    spec.lambda.assign(spec.quiver.vertices.size(), Scalar(0));
    for (const auto& [name, vl] : lambdas) {
      auto it = names.find(name);
      if (it == names.end()) throw ParseError(vl.second, "lambda", "unknown vertex '" + name + "'");
      spec.lambda[static_cast<size_t>(it->second)] = vl.first;
    }
  } else if (!lambdas.empty()) {
    throw ParseError(lambdas.begin()->second.second, "lambda", "lambda only applies to deformed algebras");
  }
  return spec;
}

DoubleBracketSpec parse_double_bracket(const std::vector<Line>& lines) {
  DoubleBracketSpec spec;
  for (const Line& l : lines) {
    const std::string& k = l.keyword();
    const Tokens& t = l.fields[0];
    if (k == "onevariable") {
      if (t.size() != 3) throw ParseError(l.number, "onevariable", "expected 'onevariable ALPHA BETA'");
      spec.one_variable = true;
      spec.alpha = scalar_at(t[1], l.number, "alpha");
      spec.beta = scalar_at(t[2], l.number, "beta");
    } else if (k == "on") {
      if (t.size() != 3) throw ParseError(l.number, "on", "expected 'on A B ; c L R ; ...'");
      std::vector<DoubleBracketSpec::Term> terms;
      for (size_t f = 1; f < l.fields.size(); ++f) {
        const Tokens& u = l.fields[f];
        if (u.size() != 3) throw ParseError(l.number, "term", "expected '<coefficient> <left label> <right label>'");
        terms.push_back({scalar_at(u[0], l.number, "term"), u[1], u[2]});
      }
      spec.values.push_back({{t[1], t[2]}, std::move(terms)});
    } else {
      unknown_keyword(l, "doublebracket");
    }
  }
  if (spec.one_variable && !spec.values.empty()) {
    throw ParseError(0, "on", "'onevariable' and 'on' lines cannot be combined");
  }
  return spec;
}

}  // namespace

TruncatedAlgebra AlgebraSpec::build() const {
  if (type == "polynomial") return truncated_polynomial(cap);
  if (type == "preprojective") return preprojective_algebra(quiver, cap);
  if (type == "deformed") return deformed_preprojective_algebra(quiver, cap, lambda);
  return path_algebra(quiver, cap, mode);
}

DoubleBracket DoubleBracketSpec::build(const TruncatedAlgebra& A) const {
  if (one_variable) return one_variable_bracket(A, alpha, beta);
  auto index = [&](const std::string& label) {
    auto i = A.find(label);
    if (!i) throw InputError("double bracket: no basis element labelled '" + label + "'");
    return *i;
  };
  std::map<std::pair<int, int>, GradedTensor> on;
  for (const auto& [ab, terms] : values) {
    GradedTensor& v = on[{index(ab.first), index(ab.second)}];
    for (const Term& t : terms) v.add_term({index(t.left), index(t.right)}, t.coefficient);
  }
  return extend_double_bracket(A, on);
}

ParsedObject parse_text(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "header", "empty input");
  const Line& h = lines.front();
  if (h.fields.size() != 1 || h.fields[0].size() != 3 || h.fields[0][0] != "ybp") {
    throw ParseError(h.number, "header", "expected 'ybp <kind> <version>'");
  }
  if (h.fields[0][2] != "1") throw ParseError(h.number, "version", "unsupported schema version " + h.fields[0][2]);
  const std::string& kind = h.fields[0][1];
  lines.erase(lines.begin());
  if (kind == "tensormap") return parse_tensormap(lines);
  if (kind == "quiver") return parse_quiver(lines);
  if (kind == "structure") return parse_structure(lines);
  if (kind == "relation") return parse_relation(lines);
  if (kind == "linfty") return parse_linfty(lines);
  if (kind == "rnfamily") return parse_rn_family(lines);
  if (kind == "algebra") return parse_algebra(lines);
  if (kind == "doublebracket") return parse_double_bracket(lines);
  throw ParseError(h.number, "kind", "unknown schema kind '" + kind + "'");
}

ParsedObject parse_inputs(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "path", "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

Word parse_word(const std::string& text) {
  std::string s = text;
  for (char& c : s) {
    if (c == '[' || c == ']' || c == ',') c = ' ';
  }
  Word w;
  for (const std::string& t : split_ws(s)) {
    int a = int_at(t, 0, "word");
    if (a < 0) throw ParseError(0, "word", "negative letter");
    w.push_back(a);
  }
  return w;
}

namespace {

std::string letters(const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

}  // namespace

std::string write_tensormap(const TensorMap& f) {
  std::string s = "ybp tensormap 1\n";
  s += "dim " + std::to_string(f.dim()) + "\n";
  s += "domain " + std::to_string(f.domain_degree()) + "\n";
  s += "codomain " + std::to_string(f.codomain_degree()) + "\n";
  for (const auto& [out, in, c] : f.entries()) {
    s += "entry " + letters(out) + " ; " + letters(in) + " ; " + format_scalar(c) + "\n";
  }
  return s;
}

std::string write_quiver(const Quiver& q) {
  std::string s = "ybp quiver 1\n";
  for (const auto& v : q.vertices) s += "vertex " + v + "\n";
  for (const auto& e : q.edges) {
    s += "edge " + e.label + " " + q.vertices[static_cast<size_t>(e.source)] + " " +
         q.vertices[static_cast<size_t>(e.target)] + "\n";
  }
  return s;
}

std::string write_rn_family(const RnFamily& fam) {
  std::string s = "ybp rnfamily 1\ndim " + std::to_string(fam.dim()) + "\n";
  for (const auto& [n, r] : fam.elements()) {
    for (const auto& [w, c] : r.terms()) s += "term " + format_scalar(c) + " ; " + letters(w) + "\n";
  }
  return s;
}

std::string write_linfty_family(const MultiBracketFamily& fam) {
  const GradedBasis& b = fam.basis();
  std::string s = "ybp linfty 1\n";
  for (int i = 0; i < b.size(); ++i) s += "generator " + b.name(i) + " " + std::to_string(b.degrees[static_cast<size_t>(i)]) + "\n";
  s += "complete none\n";
  for (const auto& [args, value] : fam.entries()) {
    if (value.is_zero()) continue;
    s += "bracket";
    for (int a : args) s += " " + b.name(a);
    for (const auto& [w, c] : value.terms()) {
      s += " ; " + format_scalar(c);
      for (int a : w) s += " " + b.name(a);
    }
    s += "\n";
  }
  return s;
}

LinftyConvention parse_convention(const std::string& skew, const std::string& leibniz, const std::string& jacobi,
                                  bool full_sum) {
  LinftyConvention c;
  if (skew == "koszul") c.skew = SkewSign::kKoszul;
  else if (skew == "sign_odd") c.skew = SkewSign::kSignOdd;
  else throw InputError("skew sign must be koszul or sign_odd");
  if (leibniz == "literal") c.leibniz = LeibnizSign::kLiteral;
  else if (leibniz == "shifted") c.leibniz = LeibnizSign::kShifted;
  else if (leibniz == "operator") c.leibniz = LeibnizSign::kOperator;
  else throw InputError("leibniz sign must be literal, shifted or operator");
  if (jacobi == "minus-one-to-i") c.jacobi = JacobiSign::kMinusOneToI;
  else if (jacobi == "ij-minus-one") c.jacobi = JacobiSign::kIJMinusOne;
  else if (jacobi == "plus") c.jacobi = JacobiSign::kPlus;
  else throw InputError("jacobi sign must be minus-one-to-i, ij-minus-one or plus");
  c.shuffles = !full_sum;
  return c;
}

}  // namespace ybp
