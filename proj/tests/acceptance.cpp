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

// Acceptance run: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "ybp/double_poisson.hpp"
#include "ybp/frt.hpp"
#include "ybp/harness.hpp"
#include "ybp/linfty.hpp"
#include "ybp/operad.hpp"
#include "ybp/twisted_poisson.hpp"
#include "ybp/ybe.hpp"
#include "ybp/ybe_infty.hpp"

namespace ybp {
namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

const std::vector<Scalar> kSmall{-1, 0, 1};

Outcome cae() {
  Outcome o;
  std::mt19937_64 rng(2024);
  int n = 0;
  for (int dim = 1; dim <= 3; ++dim) {
    for (int trial = 0; trial < 40; ++trial, ++n) {
      const TensorMap r = test::random_skew(rng, dim, 5);
      const TensorMap s = TensorMap::from_permutation(dim, Permutation::from_one_line({1, 3, 2}));
      const TensorMap a = aybe_residual(r).residual;
      const bool eq = cybe_residual(r).residual == a - compose(compose(s, a), s);
      o.require(eq && cae_identity_check(r), "identity fails at dim " + std::to_string(dim));
    }
  }
  if (o.ok) o.detail = std::to_string(n) + " random skew r";
  return o;
}

Outcome theorem1() {
  Outcome o;
  const auto sols = fixture_search(FixtureKind::kSkewCybe, 2, kSmall);
  for (const TensorMap& r : sols) {
    const Theorem1Report t = theorem1_roundtrip(r, 4);
    o.require(t.skew && t.cybe_zero && t.twisted_poisson() && t.forward && t.backward, "solution " + write_tensormap(r));
  }
  int nonsol = 0;
  for (const TensorMap& r : fixture_search(FixtureKind::kSkew, 2, kSmall)) {
    if (cybe_residual(r).is_zero) continue;
    ++nonsol;
    o.require(!jacobi_map_111(r).is_zero(), "non-solution with zero (1,1,1) Jacobi residual");
  }
  if (o.ok) o.detail = std::to_string(sols.size()) + " solutions, " + std::to_string(nonsol) + " non-solutions";
  return o;
}

Outcome double_lie() {
  Outcome o;
  int lie = 0, all = 0;
  for (const TensorMap& r : fixture_search(FixtureKind::kSkew, 2, kSmall)) {
    ++all;
    const DoubleBracket db = double_bracket_from_r(r);
    const bool passed = all_passed(check_double_lie(db));
    o.require(passed == aybe_residual(r).is_zero, "equivalence fails");
    const DbjacAybeReport d = dbjac_to_aybe(db);
    o.require(d.skew && d.equal, "transformed dbjac differs from AYBE");
    lie += passed;
  }
  // non-skew tables are never double Lie
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const TensorMap r = test::random_map(rng, 2, 2, 2, 3);
    const bool passed = all_passed(check_double_lie(double_bracket_from_r(r)));
    o.require(passed == (is_skew(r) && aybe_residual(r).is_zero), "equivalence fails on a random table");
  }
  if (o.ok) o.detail = std::to_string(lie) + " of " + std::to_string(all) + " skew tables are double Lie";
  return o;
}

Outcome almcybe() {
  Outcome o;
  const TruncatedAlgebra A = truncated_polynomial(4);
  int used = 0;
  for (int al = -2; al <= 2; ++al) {
    for (int be = -2; be <= 2; ++be) {
      const AlmcybeReport a = almcybe_check(one_variable_bracket(A, al, be), A);
      if (!a.preconditions()) continue;
      ++used;
      o.require(a.almcybe.passed, "almcybe fails at alpha=" + std::to_string(al) + " beta=" + std::to_string(be));
    }
  }
  o.require(used > 0, "no fixture meets the hypotheses");
  for (int l = 1; l <= 3; ++l) {
    o.require(aybe_residual(one_variable_bracket(A, l).table()).is_zero, "lambda-solution has AYBE != 0");
  }
  if (o.ok) o.detail = "k[x]/(x^5), " + std::to_string(used) + " brackets with dbpoiss and CYBE = 0";
  return o;
}

Outcome operad() {
  Outcome o;
  const auto none = full_constraint_system(Symmetry::kNone);
  const auto sym = full_constraint_system(Symmetry::kSymmetric);
  const auto skew = full_constraint_system(Symmetry::kSkew);
  o.require(none.solution_basis.size() == 1, "free case nullity");
  o.require(sym.solution_basis.empty(), "symmetric case nullity");
  o.require(skew.solution_basis.size() == 1, "skew case nullity");
  if (skew.solution_basis.size() == 1) {
    const Classification c = classify(Symmetry::kSkew, {{1, 1, 1}});
    o.require(c.name == "Lie" && !c.witness, "Jacobi line");
  }
  QuadraticRelation assoc;
  assoc.at(Permutation::identity(3), 1) = 1;
  assoc.at(Permutation::identity(3), 2) = -1;
  const Classification c = classify(Symmetry::kNone, {assoc.coordinates(Symmetry::kNone)});
  o.require(c.witness.has_value(), "associativity accepted");
  if (o.ok) o.detail = "nullities 1/0/1, associativity violates " + c.witness->constraint.to_string(Symmetry::kNone);
  return o;
}

Outcome linfty() {
  Outcome o;
  const LinftyConvention conv = default_convention();
  const MultiBracketFamily f = homotopy_fixture(conv);
  o.require(f.max_arity() == 3, "fixture has no ternary bracket");
  o.require(check_linfty_axioms(f, 3, conv).passed, "fixture is not L-infinity");
  o.require(theorem3_check(f, 3, conv).passed, "extension fails on products");
  o.require(cancellation_holds(conv, 3), "term multiset does not cancel");
  if (o.ok) o.detail = conv.describe();
  return o;
}

Outcome identity_decomposition() {
  Outcome o;
  const DecompositionReport d = schur_weyl_decompose(TensorMap::identity(2, 2), 3);
  const std::vector<std::pair<int, int>> want{{1, 4}, {2, 2}, {1, 0}};
  o.require(d.rows.size() == 3, "partition count");
  for (size_t k = 0; k < d.rows.size() && k < want.size(); ++k) {
    o.require(d.rows[k].hook_dimension == want[k].first && d.rows[k].comodule_dimension == want[k].second,
              "row " + std::to_string(k));
  }
  o.require(d.total == 8 && d.total_matches(), "total");
  int m2 = 0;
  for (int m = 1; m <= 3; ++m) {
    const HrDimension h = hr_graded_dimension(TensorMap::identity(2, 2), m);
    o.require(h.agree(), "HR oracles disagree at m=" + std::to_string(m));
    if (m == 2) m2 = h.from_relations;
  }
  o.require(m2 == 10, "HR_2 = " + std::to_string(m2));
  if (o.ok) o.detail = "(3)->(1,4) (2,1)->(2,2) (1,1,1)->(1,0), total 8, dim HR_2 = 10";
  return o;
}

Outcome double_commutant() {
  Outcome o;
  TensorMap diag(2, 2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) diag.add_entry({i, j}, {i, j}, i == 1 && j == 1 ? -1 : 1);
  for (const TensorMap& R : {TensorMap::identity(2, 2), diag}) {
    for (int m = 1; m <= 3; ++m) {
      const PermutationAction act = r_permutation_action(R, m);
      std::vector<TensorMap> span;
      for (const auto& [p, f] : act.maps()) span.push_back(f);
      const auto c1 = commutant(act.generators(), 2, m);
      const auto c2 = commutant(c1, 2, m);
      o.require(same_span(c2, span), "m=" + std::to_string(m));
    }
  }
  if (o.ok) o.detail = "Id and diag(1,1,1,-1), m = 1..3";
  return o;
}

std::string infty_summary() {
  const StructureConstants g = gl_structure(2), a = matrix_structure(2);
  std::map<std::string, int> cybe, aybe;
  int coincide = 0, n = 0;
  for (const TensorMap& r : fixture_search(FixtureKind::kSkew, 2, kSmall)) {
    ++n;
    RnFamily fam(4);
    fam.set(2, map_to_matrix_tensor(r));
    const CybeInfinityReport rep = cybe_infty_report(g, fam, 3);
    coincide += rep.readings_coincide;
    ++cybe[relation(matrix_tensor_to_map(rep.default_reading, 2, 3), cybe_residual(r).residual)];
    ++aybe[relation(matrix_tensor_to_map(aybe_infty_residual(a, fam, 3), 2, 3), aybe_residual(r).residual)];
  }
  std::ostringstream s;
  s << n << " skew r2; readings " << to_string(ShuffleReading::kDefault) << " and "
    << to_string(ShuffleReading::kLiteral) << " coincide on " << coincide << "; CYBE-inf vs CYBE:";
  for (const auto& [k, v] : cybe) s << " " << k << " " << v;
  s << "; AYBE-inf vs AYBE:";
  for (const auto& [k, v] : aybe) s << " " << k << " " << v;
  return s.str();
}

Outcome infty() {
  Outcome o;
  const std::string first = infty_summary();
  o.require(first == infty_summary(), "not deterministic");
  if (o.ok) o.detail = first;
  return o;
}

Outcome determinism() {
  Outcome o;
  const auto jobs = builtin_suite();
  const Report a = run_suite(jobs), b = run_suite(jobs);
  o.require(a.to_text() == b.to_text(), "reports differ");
  if (o.ok) o.detail = std::to_string(a.jobs.size()) + " jobs, " + std::to_string(a.to_text().size()) + " bytes";
  return o;
}

struct Criterion {
  const char* name;
  double limit;  // seconds, 0 for none
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace ybp

int main() {
  using namespace ybp;
  const std::vector<Criterion> all{
      {"cae identity", 10, cae},
      {"twisted Poisson forward/backward", 60, theorem1},
      {"double Lie iff skew AYBE", 0, double_lie},
      {"almost-CYBE on k[x]/(x^5)", 0, almcybe},
      {"operad classifier", 1, operad},
      {"L-infinity Leibniz extension", 0, linfty},
      {"Schur-Weyl for R = Id", 30, identity_decomposition},
      {"double commutant", 0, double_commutant},
      {"CYBE-inf / AYBE-inf evaluators", 0, infty},
      {"suite determinism", 0, determinism},
  };
  int failed = 0;
  for (size_t i = 0; i < all.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = all[i].run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && all[i].limit > 0 && secs > all[i].limit) {
      o.ok = false;
      o.detail = "over the time limit";
    }
    failed += !o.ok;
    std::printf("%s %2zu %s: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", i + 1, all[i].name, o.detail.c_str(), secs);
  }
  std::printf("%s %d/%zu\n", failed ? "FAIL" : "PASS", static_cast<int>(all.size()) - failed, all.size());
  return failed ? 1 : 0;
}
