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

#include "ybp/harness.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <set>
#include <sstream>

#include "ybp/double_poisson.hpp"
#include "ybp/error.hpp"
#include "ybp/frt.hpp"
#include "ybp/operad.hpp"
#include "ybp/twisted_poisson.hpp"
#include "ybp/ybe.hpp"

namespace ybp {

std::string version() { return YBP_VERSION; }

ParsedObject JobInput::load() const { return text.empty() ? parse_inputs(path) : parse_text(text); }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kPreconditionUnmet: return "precondition-unmet";
  }
  return "?";
}

bool JobReport::passed() const {
  if (!error.empty()) return false;
  const bool clean =
      std::none_of(entries.begin(), entries.end(), [](const ReportEntry& e) { return e.verdict == Verdict::kFail; });
  return clean != expect_fail;
}

bool Report::passed() const {
  return std::all_of(jobs.begin(), jobs.end(), [](const JobReport& j) { return j.passed(); });
}

bool Report::has_error() const {
  return std::any_of(jobs.begin(), jobs.end(), [](const JobReport& j) { return !j.error.empty(); });
}

std::string Report::to_text() const {
  std::string s = "ybp report 1\nversion " + version() + "\n";
  for (size_t i = 0; i < jobs.size(); ++i) {
    const JobReport& j = jobs[i];
    s += "job " + std::to_string(i + 1) + " " + j.command + "\n";
    for (const auto& in : j.inputs) s += "  input " + in + "\n";
    for (const auto& c : j.conventions) s += "  convention " + c + "\n";
    if (j.expect_fail) s += "  expect fail\n";
    for (const ReportEntry& e : j.entries) {
      s += "  check " + e.check + ": " + to_string(e.verdict) + "\n";
      if (!e.witness.empty()) s += "    witness " + e.witness + "\n";
      for (const auto& d : e.details) s += "    " + d + "\n";
    }
    if (!j.error.empty()) s += "  error " + j.error_kind + ": " + j.error + "\n";
    s += "  result " + std::string(j.passed() ? "pass" : "fail") + "\n";
  }
  s += "result " + std::string(passed() ? "pass" : "fail") + "\n";
  return s;
}

std::string to_string(FixtureKind k) {
  switch (k) {
    case FixtureKind::kSkew: return "skew";
    case FixtureKind::kSkewCybe: return "skew-cybe";
    case FixtureKind::kSkewAybe: return "skew-aybe";
  }
  return "?";
}

FixtureKind parse_fixture_kind(const std::string& s) {
  if (s == "skew") return FixtureKind::kSkew;
  if (s == "skew-cybe") return FixtureKind::kSkewCybe;
  if (s == "skew-aybe") return FixtureKind::kSkewAybe;
  throw InputError("unknown fixture kind '" + s + "' (expected skew, skew-cybe or skew-aybe)");
}

namespace {

// (out, in) representatives of the swap orbits that are not forced to zero.
std::vector<std::pair<Word, Word>> skew_orbits(int dim) {
  std::vector<std::pair<Word, Word>> reps;
  for (const Word& out : all_words(dim, 2)) {
    for (const Word& in : all_words(dim, 2)) {
      std::pair<Word, Word> mate{{out[1], out[0]}, {in[1], in[0]}};
      std::pair<Word, Word> self{out, in};
      if (mate < self || mate == self) continue;
      reps.push_back(self);
    }
  }
  return reps;
}

std::uint64_t saturating_power(std::uint64_t base, size_t exp) {
  std::uint64_t r = 1;
  for (size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

}  // namespace

std::uint64_t fixture_candidates(FixtureKind, int dim, size_t value_count) {
  const size_t d = static_cast<size_t>(dim);
  return saturating_power(value_count, (d * d * d * d - d * d) / 2);
}

std::vector<TensorMap> fixture_search(FixtureKind kind, int dim, const std::vector<Scalar>& values) {
  if (dim < 1 || dim > Bounds::kMaxDim) {
    throw BoundsError("fixture search: dim V = " + std::to_string(dim) + " outside 1.." + std::to_string(Bounds::kMaxDim));
  }
  if (values.empty()) throw InputError("fixture search: empty value set");
  const std::uint64_t cost = fixture_candidates(kind, dim, values.size());
  if (cost > Bounds::kMaxCandidates) {
    throw BoundsError("fixture search: " + std::to_string(values.size()) + " values on " +
                      std::to_string(skew_orbits(dim).size()) + " free entries is about " +
                      (cost == UINT64_MAX ? std::string("2^64+") : std::to_string(cost)) +
                      " candidates, limit " + std::to_string(Bounds::kMaxCandidates));
  }
  const auto reps = skew_orbits(dim);
  std::vector<size_t> digit(reps.size(), 0);
  std::vector<TensorMap> found;
  while (true) {
    TensorMap r(dim, 2, 2);
    for (size_t k = 0; k < reps.size(); ++k) {
      const Scalar& c = values[digit[k]];
      if (is_zero(c)) continue;
      const auto& [out, in] = reps[k];
      r.add_entry(out, in, c);
      r.add_entry({out[1], out[0]}, {in[1], in[0]}, -c);
    }
    bool keep = true;
    if (kind == FixtureKind::kSkewCybe) keep = cybe_residual(r).is_zero;
    if (kind == FixtureKind::kSkewAybe) keep = aybe_residual(r).is_zero;
    if (keep) found.push_back(std::move(r));
    size_t k = reps.size();
    while (k > 0) {
      --k;
      if (++digit[k] < values.size()) break;
      digit[k] = 0;
      if (k == 0) return found;
    }
    if (reps.empty()) return found;
  }
}

namespace {

int int_param(const JobSpec& s, const std::string& key, std::optional<int> fallback = std::nullopt) {
  auto it = s.params.find(key);
  if (it == s.params.end()) {
    if (fallback) return *fallback;
    throw InputError(s.command + ": missing parameter '" + key + "'");
  }
  try {
    size_t pos = 0;
    int v = std::stoi(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::logic_error&) {
    throw InputError(s.command + ": parameter '" + key + "' is not an integer: " + it->second);
  }
}

std::string str_param(const JobSpec& s, const std::string& key, const std::string& fallback = "\x01") {
  auto it = s.params.find(key);
  if (it != s.params.end()) return it->second;
  if (fallback == "\x01") throw InputError(s.command + ": missing parameter '" + key + "'");
  return fallback;
}

const JobInput& input(const JobSpec& s, const std::string& role) {
  for (const auto& in : s.inputs) {
    if (in.role == role) return in;
  }
  throw InputError(s.command + ": missing input '" + role + "'");
}

bool has_input(const JobSpec& s, const std::string& role) {
  return std::any_of(s.inputs.begin(), s.inputs.end(), [&](const JobInput& in) { return in.role == role; });
}

template <class T>
T load_as(const JobSpec& s, const std::string& role) {
  const JobInput& in = input(s, role);
  ParsedObject obj = in.load();
  if (auto* p = std::get_if<T>(&obj)) return std::move(*p);
  throw ParseError(1, "kind", in.path + ": expected a different schema kind than " + to_string(schema_kind(obj)));
}

std::vector<Scalar> parse_values(const std::string& text) {
  std::vector<Scalar> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) out.push_back(parse_scalar(tok));
  return out;
}

void map_bounds(const TensorMap& f, const std::string& what) {
  if (f.dim() > Bounds::kMaxDim) {
    throw BoundsError(what + ": dim V = " + std::to_string(f.dim()) + " exceeds " + std::to_string(Bounds::kMaxDim));
  }
  if (f.domain_degree() > Bounds::kMaxTensorDegree || f.codomain_degree() > Bounds::kMaxTensorDegree) {
    throw BoundsError(what + ": tensor degree exceeds " + std::to_string(Bounds::kMaxTensorDegree));
  }
}

void degree_bound(int v, int limit, const std::string& what) {
  if (v < 0 || v > limit) {
    throw BoundsError(what + " = " + std::to_string(v) + " outside 0.." + std::to_string(limit));
  }
}

std::string witness_text(const TensorMap& f) {
  auto e = f.entries();
  if (e.empty()) return {};
  const auto& [out, in, c] = e.front();
  return format_word(out) + " <- " + format_word(in) + " = " + format_scalar(c);
}

void add_map_lines(ReportEntry& e, const TensorMap& f) {
  std::istringstream in(write_tensormap(f));
  std::string line;
  while (std::getline(in, line)) e.details.push_back("| " + line);
}

ReportEntry from_check(const CheckResult& c) {
  ReportEntry e{c.name, c.passed ? Verdict::kPass : Verdict::kFail, c.witness, {}};
  e.details.push_back("cases " + std::to_string(c.cases));
  return e;
}

ReportEntry verdict(std::string name, bool ok, std::string witness = {}) {
  return {std::move(name), ok ? Verdict::kPass : Verdict::kFail, std::move(witness), {}};
}

ReportEntry info(std::string name, std::vector<std::string> details) {
  return {std::move(name), Verdict::kPass, {}, std::move(details)};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void job_ybe_check(const JobSpec& s, JobReport& rep) {
  const TensorMap r = load_as<TensorMap>(s, "r");
  const std::string kind = str_param(s, "kind");
  YbeReport y;
  if (kind == "cybe") y = cybe_residual(r);
  else if (kind == "aybe") y = aybe_residual(r);
  else if (kind == "qybe") y = qybe_residual(r);
  else throw InputError("ybe.check: kind must be cybe, aybe or qybe");
  ReportEntry e = verdict(kind + "-residual", y.is_zero, witness_text(y.residual));
  e.details.push_back("nonzero entries " + std::to_string(y.residual.nnz()));
  if (s.emit_witness && !y.is_zero) add_map_lines(e, y.residual);
  rep.entries.push_back(std::move(e));
}

void job_ybe_cae(const JobSpec& s, JobReport& rep) {
  const TensorMap r = load_as<TensorMap>(s, "r");
  if (!is_skew(r)) {
    rep.entries.push_back({"cae-identity", Verdict::kPreconditionUnmet, {}, {"r is not skew"}});
    return;
  }
  const TensorMap lhs = cybe_residual(r).residual;
  const TensorMap rhs = aybe_residual(r).residual - conjugated_aybe(r);
  ReportEntry e = verdict("cae-identity", cae_identity_check(r), witness_text(lhs - rhs));
  if (s.emit_witness && lhs != rhs) add_map_lines(e, lhs - rhs);
  rep.entries.push_back(std::move(e));
}

void job_poisson_extend(const JobSpec& s, JobReport& rep) {
  const TensorMap r = load_as<TensorMap>(s, "r");
  const Word lhs = parse_word(str_param(s, "lhs"));
  const Word rhs = parse_word(str_param(s, "rhs"));
  for (const Word* w : {&lhs, &rhs}) {
    for (int a : *w) {
      if (a >= r.dim()) throw InputError("poisson.extend: letter " + std::to_string(a) + " outside the generators");
    }
  }
  const int total = static_cast<int>(lhs.size() + rhs.size());
  degree_bound(total, Bounds::kMaxTensorDegree, "poisson.extend: total degree");
  TwistedPoisson P(GeneratorBracket::from_r(r), total);
  rep.entries.push_back(info("bracket", {"{" + format_word(lhs) + ", " + format_word(rhs) + "} = " +
                                             P.bracket(lhs, rhs).to_string()}));
}

void job_poisson_verify(const JobSpec& s, JobReport& rep) {
  const TensorMap r = load_as<TensorMap>(s, "r");
  const int n = int_param(s, "max-degree", 3);
  const Theorem1Report t = theorem1_roundtrip(r, n);
  rep.entries.push_back(info("hypotheses", {"skew " + yes_no(t.skew), "cybe-zero " + yes_no(t.cybe_zero)}));
  for (const auto& c : t.checks) rep.entries.push_back(from_check(c));
  rep.entries.push_back(verdict("forward", t.forward));
  rep.entries.push_back(verdict("backward", t.backward));
}

TruncatedAlgebra build_algebra(const JobSpec& s) {
  const std::string type = str_param(s, "type");
  const int cap = int_param(s, "cap");
  if (type == "polynomial") return truncated_polynomial(cap);
  const Quiver q = load_as<Quiver>(s, "quiver");
  if (type == "path") return path_algebra(q, cap, TruncationMode::kQuotient);
  if (type == "preprojective") return preprojective_algebra(q, cap);
  if (type == "deformed") {
    std::vector<Scalar> lambda = parse_values(str_param(s, "lambda"));
    return deformed_preprojective_algebra(q, cap, lambda);
  }
  throw InputError("quiver.build: type must be path, preprojective, deformed or polynomial");
}

void job_quiver_build(const JobSpec& s, JobReport& rep) {
  const TruncatedAlgebra A = build_algebra(s);
  std::map<int, int> by_degree;
  for (const auto& b : A.basis()) ++by_degree[b.degree];
  std::vector<std::string> d;
  for (const auto& [deg, n] : by_degree) d.push_back("degree " + std::to_string(deg) + " dim " + std::to_string(n));
  d.push_back("total " + std::to_string(A.dim()));
  std::string basis = "basis";
  for (const auto& b : A.basis()) basis += " " + b.label;
  d.push_back(basis);
  rep.entries.push_back(info("basis", std::move(d)));
  rep.entries.push_back(from_check(A.check_associativity()));
  if (has_input(s, "quiver")) {
    const PrimenessCriteria p = primeness_criteria(load_as<Quiver>(s, "quiver"));
    rep.entries.push_back(info("primeness-criteria",
                               {"strongly connected " + yes_no(p.strongly_connected),
                                "two vertices or edges " + yes_no(p.two_vertices_or_edges),
                                "primeness per the cited criteria, not verified from first principles: " +
                                    yes_no(p.applies())}));
  }
}

void job_double_verify(const JobSpec& s, JobReport& rep) {
  const TruncatedAlgebra A = load_as<AlgebraSpec>(s, "algebra").build();
  const DoubleBracket db = load_as<DoubleBracketSpec>(s, "bracket").build(A);
  for (const auto& c : check_double_axioms(db, A)) rep.entries.push_back(from_check(c));
}

void job_double_almcybe(const JobSpec& s, JobReport& rep) {
  const TruncatedAlgebra A = load_as<AlgebraSpec>(s, "algebra").build();
  const DoubleBracket db = load_as<DoubleBracketSpec>(s, "bracket").build(A);
  const AlmcybeReport a = almcybe_check(db, A);
  rep.entries.push_back(from_check(a.dbpoiss));
  rep.entries.push_back(info("hypotheses", {"cybe-zero " + yes_no(a.cybe_zero), "aybe-zero " + yes_no(a.aybe_zero)}));
  rep.entries.push_back(from_check(a.expansion));
  ReportEntry e = from_check(a.almcybe);
  if (!a.preconditions()) e.verdict = a.almcybe.passed ? Verdict::kPass : Verdict::kPreconditionUnmet;
  rep.entries.push_back(std::move(e));
}

void job_double_aybe(const JobSpec& s, JobReport& rep) {
  const TensorMap r = load_as<TensorMap>(s, "r");
  const DoubleBracket db = double_bracket_from_r(r);
  const auto lie = check_double_lie(db);
  for (const auto& c : lie) rep.entries.push_back(from_check(c));
  const DbjacAybeReport d = dbjac_to_aybe(db);
  rep.entries.push_back(info("hypotheses", {"skew " + yes_no(d.skew), "aybe-zero " + yes_no(d.aybe.is_zero)}));
  rep.entries.push_back(verdict("double-lie-iff-skew-aybe", all_passed(lie) == (d.skew && d.aybe.is_zero)));
  if (d.skew) {
    ReportEntry e = verdict("dbjac-transform-equals-aybe", d.equal, witness_text(d.transformed - d.aybe.residual));
    if (s.emit_witness) add_map_lines(e, d.dbjac);
    rep.entries.push_back(std::move(e));
  } else {
    rep.entries.push_back({"dbjac-transform-equals-aybe", Verdict::kPreconditionUnmet, {}, {"r is not skew"}});
  }
}

std::string format_coords(Symmetry sym, const SparseVector& v) {
  std::string s;
  for (const auto& [k, c] : v) {
    if (!s.empty()) s += " + ";
    s += format_scalar(c) + "*" + unknown_name(sym, k);
  }
  return s.empty() ? "0" : s;
}

void job_operad_nullspace(const JobSpec& s, JobReport& rep) {
  const Symmetry sym = parse_symmetry(str_param(s, "sym"));
  const ObstructionSystem sys = full_constraint_system(sym);
  std::vector<std::string> d{"constraints " + std::to_string(sys.constraints.size()),
                             "nullity " + std::to_string(sys.solution_basis.size())};
  for (const auto& v : sys.solution_basis) d.push_back("basis " + format_coords(sym, v));
  rep.entries.push_back(info("nullspace-" + to_string(sym), std::move(d)));
}

void job_operad_classify(const JobSpec& s, JobReport& rep) {
  RelationFile rf = load_as<RelationFile>(s, "relation");
  if (s.params.contains("sym")) {
    const Symmetry sym = parse_symmetry(str_param(s, "sym"));
    if (sym != rf.sym) throw InputError("operad.classify: --sym differs from the relation file");
  }
  const Classification c = classify(rf.sym, rf.relations);
  ReportEntry e{"classification", c.witness ? Verdict::kFail : Verdict::kPass, {}, {"operad " + c.name}};
  if (!c.witness) {
    e.details.push_back("dim R3 " + std::to_string(c.r3_dimension));
  } else {
    e.witness = c.witness->constraint.to_string(rf.sym) + " value " + format_scalar(c.witness->value);
  }
  rep.entries.push_back(std::move(e));
}

void job_linfty_check(const JobSpec& s, JobReport& rep) {
  const MultiBracketFamily fam = load_as<MultiBracketFamily>(s, "family");
  const int m = int_param(s, "max-m", 3);
  rep.entries.push_back(from_check(fam.check_degrees()));
  rep.entries.push_back(from_check(fam.check_skew(s.linfty.skew)));
  rep.entries.push_back(from_check(check_linfty_axioms(fam, m, s.linfty)));
  if (str_param(s, "products", "no") == "yes") rep.entries.push_back(from_check(theorem3_check(fam, m, s.linfty)));
}

void job_linfty_cancellation(const JobSpec& s, JobReport& rep) {
  const int m = int_param(s, "max-m", 3);
  ReportEntry e = verdict("product-terms-cancel", true);
  size_t patterns = 0, terms = 0;
  for (int k = 1; k <= m; ++k) {
    for (int mask = 0; mask < (1 << (k + 1)); ++mask) {
      std::vector<int> deg;
      for (int b = 0; b <= k; ++b) deg.push_back((mask >> b) & 1);
      const CancellationReport c = theorem3_cancellation(deg, s.linfty);
      ++patterns;
      terms += c.product_terms;
      if (!c.cancels() && e.verdict == Verdict::kPass) {
        e.verdict = Verdict::kFail;
        std::string w = "m=" + std::to_string(k) + " degrees";
        for (int d : deg) w += " " + std::to_string(d);
        w += " unmatched " + std::to_string(c.unmatched) + " derivation-part " + yes_no(c.derivation_part_ok);
        e.witness = w;
      }
    }
  }
  e.details.push_back("degree patterns " + std::to_string(patterns));
  e.details.push_back("product terms " + std::to_string(terms));
  rep.entries.push_back(std::move(e));
}

// N with a == gl_N or M_N (same table), if any.
std::optional<int> matrix_size(const StructureFile& a) {
  for (int n = 1; n * n <= a.constants.dim; ++n) {
    if (n * n != a.constants.dim) continue;
    const StructureConstants ref = a.lie ? gl_structure(n) : matrix_structure(n);
    if (ref.table == a.constants.table) return n;
  }
  return std::nullopt;
}

void job_ybe_infty(const JobSpec& s, JobReport& rep) {
  const StructureFile a = load_as<StructureFile>(s, "algebra");
  const RnFamily fam = load_as<RnFamily>(s, "family");
  if (fam.dim() != a.constants.dim) throw InputError("ybe-infty.check: family and algebra dimensions differ");
  const int n = int_param(s, "n");
  const std::string kind = str_param(s, "kind");
  const auto N = matrix_size(a);
  const bool only_r2 = fam.elements().size() == 1 && fam.elements().begin()->first == 2;
  auto residual_entry = [&](const std::string& name, const GradedTensor& t) {
    ReportEntry e = verdict(name, t.is_zero());
    if (!t.is_zero()) {
      const auto& [w, c] = *t.terms().begin();
      e.witness = format_word(w) + " = " + format_scalar(c);
    }
    e.details.push_back("terms " + std::to_string(t.size()));
    if (s.emit_witness && !t.is_zero()) e.details.push_back("| " + t.to_string());
    return e;
  };
  if (kind == "cybe") {
    if (!a.lie) {
      rep.entries.push_back({"cybe-infty", Verdict::kPreconditionUnmet, {}, {"structure is not a Lie algebra"}});
      return;
    }
    const CybeInfinityReport c = cybe_infty_report(a.constants, fam, n);
    const GradedTensor& chosen =
        s.shuffle_reading == ShuffleReading::kDefault ? c.default_reading : c.literal_reading;
    ReportEntry e = residual_entry("cybe-infty", chosen);
    e.details.push_back("reading " + to_string(s.shuffle_reading));
    e.details.push_back("readings coincide " + yes_no(c.readings_coincide));
    if (N && n == 3 && only_r2) {
      const TensorMap r = matrix_tensor_to_map(fam.get(2), *N, 2);
      e.details.push_back("against cybe(r2) " + relation(matrix_tensor_to_map(chosen, *N, 3), cybe_residual(r).residual));
    }
    rep.entries.push_back(std::move(e));
  } else if (kind == "aybe") {
    if (a.lie) {
      rep.entries.push_back({"aybe-infty", Verdict::kPreconditionUnmet, {}, {"structure is not associative"}});
      return;
    }
    const GradedTensor t = aybe_infty_residual(a.constants, fam, n);
    ReportEntry e = residual_entry("aybe-infty", t);
    if (N && n == 3 && only_r2) {
      const TensorMap r = matrix_tensor_to_map(fam.get(2), *N, 2);
      e.details.push_back("against aybe(r2) " + relation(matrix_tensor_to_map(t, *N, 3), aybe_residual(r).residual));
    }
    rep.entries.push_back(std::move(e));
  } else {
    throw InputError("ybe-infty.check: kind must be cybe or aybe");
  }
}

void job_schurweyl_decompose(const JobSpec& s, JobReport& rep) {
  const TensorMap R = load_as<TensorMap>(s, "R");
  const int m = int_param(s, "m");
  const DecompositionReport d = schur_weyl_decompose(R, m);
  std::vector<std::string> rows;
  for (const auto& row : d.rows) {
    rows.push_back(row.lambda.to_string() + " hook " + std::to_string(row.hook_dimension) + " regular " +
                   std::to_string(row.regular_dimension) + " comodule " + std::to_string(row.comodule_dimension) +
                   " isotypic " + std::to_string(row.isotypic_dimension) + " invariant " + yes_no(row.invariant));
  }
  rep.entries.push_back(info("partitions", std::move(rows)));
  int power = 1;
  for (int i = 0; i < m; ++i) power *= d.dim;
  ReportEntry t = verdict("isotypic-total", d.total_matches(), d.total_matches() ? "" : "total " + std::to_string(d.total));
  t.details.push_back("total " + std::to_string(d.total) + " of " + std::to_string(power));
  rep.entries.push_back(std::move(t));
  ReportEntry dc = verdict("double-commutant", d.double_commutant);
  dc.details.push_back("dim SR " + std::to_string(d.sr_span_dimension));
  dc.details.push_back("dim HR " + std::to_string(d.sr_commutant_dimension));
  dc.details.push_back("dim End_HR " + std::to_string(d.hr_commutant_dimension));
  rep.entries.push_back(std::move(dc));
}

void job_schurweyl_hrdim(const JobSpec& s, JobReport& rep) {
  const TensorMap R = load_as<TensorMap>(s, "R");
  const int m = int_param(s, "m");
  const HrDimension h = hr_graded_dimension(R, m);
  ReportEntry e = verdict("hr-dimension-oracles", h.agree());
  e.details.push_back("relations " + std::to_string(h.from_relations));
  e.details.push_back("commutant " + std::to_string(h.from_commutant));
  rep.entries.push_back(std::move(e));
}

std::string compact(const TensorMap& f) {
  std::string s;
  for (const auto& [out, in, c] : f.entries()) {
    if (!s.empty()) s += ' ';
    s += format_word(out) + format_word(in) + "=" + format_scalar(c);
  }
  return s.empty() ? "0" : s;
}

void job_fixture_search(const JobSpec& s, JobReport& rep) {
  const FixtureKind kind = parse_fixture_kind(str_param(s, "kind"));
  const int dim = int_param(s, "dim");
  const auto values = parse_values(str_param(s, "values", "-1,0,1"));
  const auto found = fixture_search(kind, dim, values);
  std::vector<std::string> d{"candidates " + std::to_string(fixture_candidates(kind, dim, values.size())),
                             "solutions " + std::to_string(found.size())};
  for (const auto& r : found) d.push_back("r " + compact(r));
  rep.entries.push_back(info("fixture-search-" + to_string(kind), std::move(d)));
}

std::vector<std::string> conventions_of(const JobSpec& s) {
  return {"shuffle-reading " + to_string(s.shuffle_reading), "linfty " + s.linfty.describe(),
          std::string("double-leibniz ") + (s.double_sign == DoubleLeibnizSign::kPowerN ? "power-n" : "trivial")};
}

}  // namespace

void check_bounds(const JobSpec& s) {
  const std::string& c = s.command;
  for (const JobInput& in : s.inputs) {
    if (in.role == "r" || in.role == "R") {
      ParsedObject obj = in.load();
      if (auto* f = std::get_if<TensorMap>(&obj)) map_bounds(*f, c);
    }
  }
  if (c == "poisson.verify") degree_bound(int_param(s, "max-degree", 3), Bounds::kMaxTensorDegree, c + ": max-degree");
  if (c == "quiver.build") degree_bound(int_param(s, "cap"), Bounds::kMaxTensorDegree, c + ": cap");
  if (c == "linfty.check" || c == "linfty.cancellation") degree_bound(int_param(s, "max-m", 3), Bounds::kMaxM, c + ": m");
  if (c == "ybe-infty.check") degree_bound(int_param(s, "n"), Bounds::kMaxTensorDegree, c + ": n");
  if (c == "schurweyl.decompose" || c == "schurweyl.hrdim") {
    const int m = int_param(s, "m");
    degree_bound(m, Bounds::kMaxM, c + ": m");
    ParsedObject obj = input(s, "R").load();
    if (auto* f = std::get_if<TensorMap>(&obj)) {
      double unknowns = 1;
      for (int i = 0; i < 2 * m; ++i) unknowns *= f->dim();
      if (unknowns > 4096) {
        throw BoundsError(c + ": the commutant system has " + std::to_string(static_cast<long long>(unknowns)) +
                          " unknowns, limit 4096");
      }
    }
  }
  if (c == "fixture.search") {
    const int dim = int_param(s, "dim");
    degree_bound(dim, Bounds::kMaxDim, c + ": dim V");
    const auto kind = parse_fixture_kind(str_param(s, "kind"));
    const auto n = parse_values(str_param(s, "values", "-1,0,1")).size();
    const auto cost = fixture_candidates(kind, dim, n);
    if (cost > Bounds::kMaxCandidates) {
      throw BoundsError(c + ": about " + (cost == UINT64_MAX ? std::string("2^64+") : std::to_string(cost)) +
                        " candidates, limit " + std::to_string(Bounds::kMaxCandidates));
    }
  }
}

JobReport run_job(const JobSpec& s) {
  check_bounds(s);
  JobReport rep;
  rep.command = s.command;
  for (const auto& in : s.inputs) rep.inputs.push_back(in.role + " " + in.path);
  rep.conventions = conventions_of(s);
  rep.expect_fail = s.expect_fail;
  using Handler = void (*)(const JobSpec&, JobReport&);
  static const std::map<std::string, Handler> handlers{
      {"ybe.check", job_ybe_check},
      {"ybe.cae", job_ybe_cae},
      {"poisson.extend", job_poisson_extend},
      {"poisson.verify", job_poisson_verify},
      {"quiver.build", job_quiver_build},
      {"double.verify", job_double_verify},
      {"double.almcybe", job_double_almcybe},
      {"double.aybe", job_double_aybe},
      {"operad.classify", job_operad_classify},
      {"operad.nullspace", job_operad_nullspace},
      {"linfty.check", job_linfty_check},
      {"linfty.cancellation", job_linfty_cancellation},
      {"ybe-infty.check", job_ybe_infty},
      {"schurweyl.decompose", job_schurweyl_decompose},
      {"schurweyl.hrdim", job_schurweyl_hrdim},
      {"fixture.search", job_fixture_search},
  };
  auto it = handlers.find(s.command);
  if (it == handlers.end()) throw InputError("unknown command '" + s.command + "'");
  it->second(s, rep);
  return rep;
}

namespace {

std::string classify_error(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const InputError*>(&e)) return "input";
  if (dynamic_cast<const PreconditionError*>(&e)) return "precondition";
  if (dynamic_cast<const BoundsError*>(&e)) return "bounds";
  if (dynamic_cast<const TruncationError*>(&e)) return "truncation";
  return "internal";
}

}  // namespace

Report run_suite(const std::vector<JobSpec>& jobs) {
  std::vector<std::future<JobReport>> running;
  for (const JobSpec& s : jobs) {
    running.push_back(std::async(std::launch::async, [&s] {
      try {
        return run_job(s);
      } catch (const std::exception& e) {
        JobReport r;
        r.error_kind = classify_error(e);
        r.command = s.command;
        for (const auto& in : s.inputs) r.inputs.push_back(in.role + " " + in.path);
        r.conventions = conventions_of(s);
        r.expect_fail = s.expect_fail;
        r.error = e.what();
        return r;
      }
    }));
  }
  Report rep;
  for (size_t i = 0; i < jobs.size(); ++i) {
    rep.jobs.push_back(running[i].get());
  }
  return rep;
}

void set_job_option(JobSpec& spec, const std::string& key, const std::string& value) {
  static const std::set<std::string> roles{"r", "R", "algebra", "bracket", "relation", "family", "quiver"};
  if (roles.contains(key)) {
    auto it = std::find_if(spec.inputs.begin(), spec.inputs.end(), [&](const JobInput& in) { return in.role == key; });
    if (it == spec.inputs.end()) spec.inputs.push_back({key, value, {}});
    else *it = {key, value, {}};
  } else if (key == "shuffle") {
    if (value == "default") spec.shuffle_reading = ShuffleReading::kDefault;
    else if (value == "literal") spec.shuffle_reading = ShuffleReading::kLiteral;
    else throw InputError("shuffle must be default or literal");
  } else if (key == "skew" || key == "leibniz" || key == "jacobi" || key == "sum") {
    LinftyConvention c = spec.linfty;
    const std::string skew = c.skew == SkewSign::kKoszul ? "koszul" : "sign_odd";
    const std::string leib = c.leibniz == LeibnizSign::kLiteral   ? "literal"
                             : c.leibniz == LeibnizSign::kShifted ? "shifted"
                                                                  : "operator";
    const std::string jac = c.jacobi == JacobiSign::kMinusOneToI  ? "minus-one-to-i"
                            : c.jacobi == JacobiSign::kIJMinusOne ? "ij-minus-one"
                                                                  : "plus";
    bool full = !c.shuffles;
    if (key == "sum") {
      if (value != "all" && value != "shuffles") throw InputError("sum must be all or shuffles");
      full = value == "all";
    }
    spec.linfty = parse_convention(key == "skew" ? value : skew, key == "leibniz" ? value : leib,
                                   key == "jacobi" ? value : jac, full);
  } else if (key == "double-leibniz") {
    if (value == "power-n") spec.double_sign = DoubleLeibnizSign::kPowerN;
    else if (value == "trivial") spec.double_sign = DoubleLeibnizSign::kTrivial;
    else throw InputError("double-leibniz must be power-n or trivial");
  } else if (key == "emit-witness") {
    if (value != "yes" && value != "no") throw InputError("emit-witness must be yes or no");
    spec.emit_witness = value == "yes";
  } else if (key == "expect") {
    if (value != "pass" && value != "fail") throw InputError("expect must be pass or fail");
    spec.expect_fail = value == "fail";
  } else if (key == "output") {
    spec.output = value;
  } else {
    spec.params[key] = value;
  }
}

std::vector<JobSpec> parse_suite(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "path", "cannot open " + path);
  const std::filesystem::path base = std::filesystem::path(path).parent_path();
  std::vector<JobSpec> jobs;
  std::string raw;
  int n = 0;
  bool header = false;
  while (std::getline(in, raw)) {
    ++n;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::vector<std::string> fields;
    std::stringstream ss(raw);
    std::string f;
    while (std::getline(ss, f, ';')) {
      const auto b = f.find_first_not_of(" \t\r");
      const auto e = f.find_last_not_of(" \t\r");
      fields.push_back(b == std::string::npos ? "" : f.substr(b, e - b + 1));
    }
    if (fields.empty() || (fields.size() == 1 && fields[0].empty())) continue;
    if (!header) {
      if (fields.size() != 1 || fields[0] != "ybp suite 1") throw ParseError(n, "header", "expected 'ybp suite 1'");
      header = true;
      continue;
    }
    if (fields[0].rfind("job ", 0) != 0) throw ParseError(n, "job", "expected 'job <command> ; key=value ...'");
    JobSpec spec;
    spec.command = fields[0].substr(4);
    for (size_t i = 1; i < fields.size(); ++i) {
      const auto eq = fields[i].find('=');
      if (eq == std::string::npos) throw ParseError(n, fields[i], "expected key=value");
      const std::string key = fields[i].substr(0, eq);
      std::string value = fields[i].substr(eq + 1);
      static const std::set<std::string> roles{"r", "R", "algebra", "bracket", "relation", "family", "quiver"};
      if (roles.contains(key) && std::filesystem::path(value).is_relative()) value = (base / value).string();
      try {
        set_job_option(spec, key, value);
      } catch (const InputError& e) {
        throw ParseError(n, key, e.what());
      }
    }
    jobs.push_back(std::move(spec));
  }
  if (!header) throw ParseError(1, "header", "expected 'ybp suite 1'");
  return jobs;
}

namespace {

JobSpec job(std::string command, std::vector<JobInput> inputs, std::map<std::string, std::string> params) {
  JobSpec s;
  s.command = std::move(command);
  s.inputs = std::move(inputs);
  s.params = std::move(params);
  return s;
}

}  // namespace

std::vector<JobSpec> builtin_suite() {
  const auto cybe = fixture_search(FixtureKind::kSkewCybe, 2, {Scalar(-1), Scalar(0), Scalar(1)});
  const auto aybe = fixture_search(FixtureKind::kSkewAybe, 2, {Scalar(-1), Scalar(0), Scalar(1)});
  const auto skew = fixture_search(FixtureKind::kSkew, 2, {Scalar(-1), Scalar(0), Scalar(1)});
  const auto nonzero = [](const std::vector<TensorMap>& v) {
    for (const auto& r : v) {
      if (!r.is_zero()) return r;
    }
    throw PreconditionError("builtin suite: no nonzero fixture");
  };
  const TensorMap r_cybe = nonzero(cybe);
  const TensorMap r_aybe = nonzero(aybe);
  TensorMap r_bad;
  for (const auto& r : skew) {
    if (!cybe_residual(r).is_zero) {
      r_bad = r;
      break;
    }
  }
  const auto map_in = [](const std::string& role, const std::string& name, const TensorMap& f) {
    return JobInput{role, "builtin:" + name, write_tensormap(f)};
  };
  const auto text_in = [](const std::string& role, const std::string& name, const std::string& text) {
    return JobInput{role, "builtin:" + name, text};
  };
  TensorMap diag(2, 2, 2);
  for (const Word& w : all_words(2, 2)) diag.add_entry(w, w, w == Word{1, 1} ? Scalar(-1) : Scalar(1));
  const std::string a2 = "ybp quiver 1\nvertices 2\nedge a 1 2\n";
  const std::string loop = "ybp quiver 1\nvertices 1\nedge x 1 1\n";
  RnFamily gl_fam(4), m_fam(4);
  gl_fam.set(2, map_to_matrix_tensor(r_cybe));
  m_fam.set(2, map_to_matrix_tensor(r_aybe));

  std::vector<JobSpec> jobs;
  jobs.push_back(job("fixture.search", {}, {{"kind", "skew-cybe"}, {"dim", "2"}}));
  jobs.push_back(job("fixture.search", {}, {{"kind", "skew-aybe"}, {"dim", "2"}}));
  jobs.push_back(job("ybe.check", {map_in("r", "skew-cybe", r_cybe)}, {{"kind", "cybe"}}));
  jobs.push_back(job("ybe.check", {map_in("r", "skew-aybe", r_aybe)}, {{"kind", "aybe"}}));
  jobs.push_back(job("ybe.cae", {map_in("r", "skew-non-solution", r_bad)}, {}));
  jobs.push_back(job("poisson.verify", {map_in("r", "skew-cybe", r_cybe)}, {{"max-degree", "3"}}));
  jobs.push_back(job("poisson.verify", {map_in("r", "skew-non-solution", r_bad)}, {{"max-degree", "3"}}));
  jobs.back().expect_fail = true;
  jobs.push_back(job("quiver.build", {text_in("quiver", "a2", a2)}, {{"type", "preprojective"}, {"cap", "2"}}));
  jobs.push_back(job("quiver.build", {text_in("quiver", "one-loop", loop)}, {{"type", "preprojective"}, {"cap", "2"}}));
  jobs.push_back(job("double.aybe", {map_in("r", "skew-aybe", r_aybe)}, {}));
  jobs.push_back(job("double.aybe", {map_in("r", "skew-non-solution", r_bad)}, {}));
  jobs.back().expect_fail = true;
  jobs.push_back(job("double.almcybe",
                     {text_in("algebra", "k[x]/(x^5)", "ybp algebra 1\ntype polynomial\ncap 4\n"),
                      text_in("bracket", "one-variable", "ybp doublebracket 1\nonevariable 1 0\n")},
                     {}));
  for (const char* sym : {"none", "sym", "skew"}) jobs.push_back(job("operad.nullspace", {}, {{"sym", sym}}));
  jobs.push_back(job("operad.classify",
                     {text_in("relation", "associativity",
                              "ybp relation 1\nsym none\nrelation\nlambda (123) 1 1\nlambda (123) 2 -1\n")},
                     {}));
  jobs.back().expect_fail = true;
  jobs.push_back(job("operad.classify",
                     {text_in("relation", "jacobi", "ybp relation 1\nsym skew\nrelation\ncoord 0 1\ncoord 1 1\ncoord 2 1\n")},
                     {}));
  jobs.push_back(job("linfty.cancellation", {}, {{"max-m", "4"}}));
  jobs.push_back(job("linfty.check",
                     {text_in("family", "homotopy-fixture", write_linfty_family(homotopy_fixture(default_convention())))},
                     {{"max-m", "3"}, {"products", "yes"}}));
  for (const char* reading : {"default", "literal"}) {
    JobSpec s = job("ybe-infty.check",
                    {text_in("algebra", "gl2", "ybp structure 1\nkind lie\nbuiltin gl 2\n"),
                     text_in("family", "r2-skew-cybe", write_rn_family(gl_fam))},
                    {{"kind", "cybe"}, {"n", "3"}});
    set_job_option(s, "shuffle", reading);
    jobs.push_back(std::move(s));
  }
  RnFamily bad_fam(4);
  bad_fam.set(2, map_to_matrix_tensor(r_bad));
  for (const char* reading : {"default", "literal"}) {
    JobSpec s = job("ybe-infty.check",
                    {text_in("algebra", "gl2", "ybp structure 1\nkind lie\nbuiltin gl 2\n"),
                     text_in("family", "r2-skew-non-solution", write_rn_family(bad_fam))},
                    {{"kind", "cybe"}, {"n", "3"}});
    set_job_option(s, "shuffle", reading);
    s.expect_fail = true;
    jobs.push_back(std::move(s));
  }
  jobs.push_back(job("ybe-infty.check",
                     {text_in("algebra", "M2", "ybp structure 1\nkind associative\nbuiltin matrix 2\n"),
                      text_in("family", "r2-skew-non-solution", write_rn_family(bad_fam))},
                     {{"kind", "aybe"}, {"n", "3"}}));
  jobs.back().expect_fail = true;
  jobs.push_back(job("ybe-infty.check",
                     {text_in("algebra", "M2", "ybp structure 1\nkind associative\nbuiltin matrix 2\n"),
                      text_in("family", "r2-skew-aybe", write_rn_family(m_fam))},
                     {{"kind", "aybe"}, {"n", "3"}}));
  jobs.push_back(job("schurweyl.decompose", {map_in("R", "identity", TensorMap::identity(2, 2))}, {{"m", "3"}}));
  jobs.push_back(job("schurweyl.decompose", {map_in("R", "diag(1,1,1,-1)", diag)}, {{"m", "3"}}));
  for (const char* m : {"1", "2", "3"}) {
    jobs.push_back(job("schurweyl.hrdim", {map_in("R", "identity", TensorMap::identity(2, 2))}, {{"m", m}}));
  }
  return jobs;
}

}  // namespace ybp
