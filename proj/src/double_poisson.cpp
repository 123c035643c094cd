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

#include "ybp/double_poisson.hpp"

#include <functional>

#include "ybp/error.hpp"

namespace ybp {

DoubleBracket::DoubleBracket(TensorMap table) : table_(std::move(table)) {
  if (table_.domain_degree() != 2 || table_.codomain_degree() != 2) {
    throw InputError("double bracket: table must be 2 -> 2");
  }
}

GradedTensor DoubleBracket::second(int a, const SparseVector& y) const {
  GradedTensor out;
  for (const auto& [b, c] : y) out += c * (*this)(a, b);
  return out;
}

GradedTensor DoubleBracket::first(const SparseVector& y, int b) const {
  GradedTensor out;
  for (const auto& [a, c] : y) out += c * (*this)(a, b);
  return out;
}

DoubleBracket double_bracket_from_r(const TensorMap& r) { return DoubleBracket(r); }

TensorMap r_from_double_bracket(const DoubleBracket& db) { return db.table(); }

namespace {

SparseVector unit_vector(int i) { return {{i, Scalar(1)}}; }

// Splits a basis path of degree >= 2 as (first edge) * (rest).
std::pair<int, int> split_first(const TruncatedAlgebra& A, int i) {
  const auto& el = A.element(i);
  const auto g = A.find_path(el.vertex, {el.path.front()});
  const auto rest = A.find_path(-1, std::vector<int>(el.path.begin() + 1, el.path.end()));
  if (!g || !rest || A.multiply_basis(*g, *rest) != unit_vector(i)) {
    throw PreconditionError("double bracket extension: basis element " + el.label +
                            " is not (generator) * (basis element)");
  }
  return {*g, *rest};
}

}  // namespace

DoubleBracket extend_double_bracket(const TruncatedAlgebra& A,
                                    const std::map<std::pair<int, int>, GradedTensor>& on_generators) {
  for (const auto& [ab, val] : on_generators) {
    if (A.element(ab.first).degree != 1 || A.element(ab.second).degree != 1) {
      throw InputError("double bracket extension: values must be given on degree-one generators");
    }
    for (const auto& [w, c] : val.terms()) {
      if (w.size() != 2 || w[0] < 0 || w[1] < 0 || w[0] >= A.dim() || w[1] >= A.dim()) {
        throw InputError("double bracket extension: value is not in A (x) A");
      }
    }
  }
  std::map<std::pair<int, int>, GradedTensor> memo;
  std::function<GradedTensor(int, int)> br = [&](int i, int j) -> GradedTensor {
    if (A.element(i).degree == 0 || A.element(j).degree == 0) return {};
    if (const auto it = memo.find({i, j}); it != memo.end()) return it->second;
    GradedTensor out;
    if (A.element(j).degree > 1) {
      const auto [g, rest] = split_first(A, j);
      out = multiply_in_slot(A, br(i, rest), 0, unit_vector(g), true) +
            multiply_in_slot(A, br(i, g), 1, unit_vector(rest), false);
    } else if (A.element(i).degree > 1) {
      const auto [g, rest] = split_first(A, i);
      out = multiply_in_slot(A, br(rest, j), 1, unit_vector(g), true) +
            multiply_in_slot(A, br(g, j), 0, unit_vector(rest), false);
    } else if (const auto it = on_generators.find({i, j}); it != on_generators.end()) {
      out = it->second;
    }
    memo.emplace(std::make_pair(i, j), out);
    return out;
  };
  TensorMap table(A.dim(), 2, 2);
  for (int i = 0; i < A.dim(); ++i) {
    for (int j = 0; j < A.dim(); ++j) {
      const GradedTensor v = br(i, j);
      for (const auto& [w, c] : v.terms()) table.add_entry(w, {i, j}, c);
    }
  }
  return DoubleBracket(std::move(table));
}

DoubleBracket one_variable_bracket(const TruncatedAlgebra& A, const Scalar& alpha, const Scalar& beta) {
  const auto e = A.find_path(0, {});
  const auto x = A.find_path(0, {0});
  if (!e || !x) throw InputError("one-variable bracket: algebra is not a truncated polynomial ring");
  GradedTensor v;
  v.add_term({*x, *e}, alpha);
  v.add_term({*e, *x}, -alpha);
  if (!is_zero(beta)) {
    const auto x2 = A.find_path(0, {0, 0});
    if (!x2) throw InputError("one-variable bracket: x^2 is not in the algebra");
    v.add_term({*x2, *e}, beta);
    v.add_term({*e, *x2}, -beta);
  }
  return extend_double_bracket(A, {{{*x, *x}, v}});
}

TensorMap dbjac_map(const DoubleBracket& db) {
  const TensorMap& r = db.table();
  const TensorMap inner = compose(embed_components(r, 1, 2, 3), embed_components(r, 2, 3, 3));
  const Permutation p = Permutation::from_one_line({2, 3, 1});
  return inner + conjugate(p, inner) + conjugate(p * p, inner);
}

namespace {

CheckResult check_dbskew(const DoubleBracket& db, const std::function<std::string(const Word&)>& name) {
  CheckResult res("double skew-symmetry");
  const TensorMap resid = db.table() + flip(db.table());
  res.cases = static_cast<size_t>(db.dim()) * static_cast<size_t>(db.dim());
  if (!resid.is_zero()) {
    const auto [out, in, c] = resid.entries().front();
    res.fail("{{" + name({in[0]}) + ", " + name({in[1]}) + "}} + (21){{" + name({in[1]}) + ", " + name({in[0]}) +
             "}} has coefficient " + format_scalar(c) + " at " + name(out));
  }
  return res;
}

CheckResult check_dbjac(const DoubleBracket& db, const std::function<std::string(const Word&)>& name) {
  CheckResult res("double Jacobi");
  const TensorMap resid = dbjac_map(db);
  res.cases = static_cast<size_t>(db.dim()) * static_cast<size_t>(db.dim()) * static_cast<size_t>(db.dim());
  if (!resid.is_zero()) {
    const auto [out, in, c] = resid.entries().front();
    res.fail("residual on " + name(in) + " has coefficient " + format_scalar(c) + " at " + name(out));
  }
  return res;
}

std::function<std::string(const Word&)> plain_names() { return [](const Word& w) { return format_word(w); }; }

std::function<std::string(const Word&)> algebra_names(const TruncatedAlgebra& A) {
  return [&A](const Word& w) {
    std::string s = "[";
    for (size_t k = 0; k < w.size(); ++k) {
      if (k) s += ", ";
      s += A.element(w[k]).label;
    }
    return s + "]";
  };
}

}  // namespace

std::vector<CheckResult> check_double_lie(const DoubleBracket& db) {
  return {check_dbskew(db, plain_names()), check_dbjac(db, plain_names())};
}

CheckResult check_dbpoiss(const DoubleBracket& db, const TruncatedAlgebra& A) {
  CheckResult res("double Leibniz (second argument)");
  for (int a = 0; a < A.dim(); ++a) {
    for (int b = 0; b < A.dim(); ++b) {
      for (int c = 0; c < A.dim(); ++c) {
        GradedTensor lhs, rhs;
        try {
          lhs = db.second(a, A.multiply_basis(b, c));
          rhs = multiply_in_slot(A, db(a, c), 0, unit_vector(b), true) +
                multiply_in_slot(A, db(a, b), 1, unit_vector(c), false);
        } catch (const TruncationError&) {
          continue;
        }
        ++res.cases;
        if (lhs != rhs) {
          const auto& el = A.basis();
          res.fail("{{" + el[a].label + ", " + el[b].label + " " + el[c].label + "}} = " + A.format(lhs) +
                   " but the rule gives " + A.format(rhs));
        }
      }
    }
  }
  return res;
}

CheckResult check_first_argument_rule(const DoubleBracket& db, const TruncatedAlgebra& A) {
  CheckResult res("double Leibniz (first argument, derived)");
  for (int a = 0; a < A.dim(); ++a) {
    for (int b = 0; b < A.dim(); ++b) {
      for (int c = 0; c < A.dim(); ++c) {
        GradedTensor lhs, rhs;
        try {
          lhs = db.first(A.multiply_basis(b, c), a);
          rhs = multiply_in_slot(A, db(c, a), 1, unit_vector(b), true) +
                multiply_in_slot(A, db(b, a), 0, unit_vector(c), false);
        } catch (const TruncationError&) {
          continue;
        }
        ++res.cases;
        if (lhs != rhs) {
          const auto& el = A.basis();
          res.fail("{{" + el[b].label + " " + el[c].label + ", " + el[a].label + "}} = " + A.format(lhs) +
                   " but the rule gives " + A.format(rhs));
        }
      }
    }
  }
  return res;
}

std::vector<CheckResult> check_double_axioms(const DoubleBracket& db, const TruncatedAlgebra& A) {
  if (db.dim() != A.dim()) throw InputError("double bracket and algebra have different dimensions");
  const auto names = algebra_names(A);
  return {check_dbskew(db, names), check_dbjac(db, names), check_dbpoiss(db, A), check_first_argument_rule(db, A)};
}

DbjacAybeReport dbjac_to_aybe(const DoubleBracket& db) {
  DbjacAybeReport rep;
  rep.skew = is_skew(db.table());
  rep.dbjac = dbjac_map(db);
  rep.transformed = -conjugate(Permutation::from_one_line({3, 2, 1}), rep.dbjac);
  rep.aybe = aybe_residual(db.table());
  rep.equal = rep.transformed == rep.aybe.residual;
  return rep;
}

namespace {

GradedTensor apply_word(const TensorMap& f, const Word& w) { return f.column(w); }

}  // namespace

AlmcybeReport almcybe_check(const DoubleBracket& db, const TruncatedAlgebra& A) {
  if (db.dim() != A.dim()) throw InputError("double bracket and algebra have different dimensions");
  AlmcybeReport rep;
  rep.dbpoiss = check_dbpoiss(db, A);
  const YbeReport cybe = cybe_residual(db.table());
  const YbeReport aybe = aybe_residual(db.table());
  const TensorMap aybe_p = aybe_prime(db.table());
  rep.cybe_zero = cybe.is_zero;
  rep.aybe_zero = aybe.is_zero;
  const auto& el = A.basis();
  const int n = A.dim();

  for (int a = 0; a < n; ++a) {
    for (int b1 = 0; b1 < n; ++b1) {
      for (int b2 = 0; b2 < n; ++b2) {
        for (int c = 0; c < n; ++c) {
          GradedTensor lhs, rhs;
          try {
            for (const auto& [m, k] : A.multiply_basis(b1, b2)) lhs += k * apply_word(cybe.residual, {a, m, c});
            rhs = multiply_in_slot(A, apply_word(aybe.residual, {a, b2, c}), 0, unit_vector(b1), true) -
                  multiply_in_slot(A, apply_word(aybe_p, {a, b2, c}), 2, unit_vector(b1), true) +
                  multiply_in_slot(A, apply_word(cybe.residual, {a, b1, c}), 1, unit_vector(b2), false);
          } catch (const TruncationError&) {
            continue;
          }
          ++rep.expansion.cases;
          if (lhs != rhs) {
            rep.expansion.fail("a=" + el[a].label + " b1=" + el[b1].label + " b2=" + el[b2].label +
                               " c=" + el[c].label + ": " + A.format(lhs) + " vs " + A.format(rhs));
          }
        }
      }
    }
  }

  for (int a = 0; a < n; ++a) {
    for (const Word& in : all_words(n, 3)) {
      const GradedTensor col = aybe.residual.column(in);
      GradedTensor left, right;
      try {
        left = multiply_in_slot(A, col, 0, unit_vector(a), true);
        right = multiply_in_slot(A, col, 2, unit_vector(a), true);
      } catch (const TruncationError&) {
        continue;
      }
      ++rep.almcybe.cases;
      if (left != right) {
        rep.almcybe.fail("a=" + el[a].label + " on " + algebra_names(A)(in) + ": " + A.format(left) + " vs " +
                         A.format(right));
      }
    }
  }
  return rep;
}

CommutativeRemarkReport commutative_remark_checks(const DoubleBracket& db, const TruncatedAlgebra& A) {
  if (db.dim() != A.dim()) throw InputError("double bracket and algebra have different dimensions");
  CommutativeRemarkReport rep;
  rep.commutative = A.is_commutative();
  rep.dbpoiss = check_dbpoiss(db, A);
  rep.first_argument = check_first_argument_rule(db, A);
  const int n = A.dim();
  const auto& el = A.basis();
  // (a (x) 1 - 1 (x) a) t
  const auto delta = [&](int a, const GradedTensor& t) {
    return multiply_in_slot(A, t, 0, unit_vector(a), true) - multiply_in_slot(A, t, 1, unit_vector(a), true);
  };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        GradedTensor x1, x2, x3, x4;
        try {
          x1 = delta(a, db(b, c));
          x2 = delta(c, db(b, a));
          x3 = delta(b, db(c, a));
          x4 = delta(a, db(c, b));
        } catch (const TruncationError&) {
          continue;
        }
        ++rep.comder1.cases;
        if (x1 != x2 || x2 != x3 || x3 != x4) {
          rep.comder1.fail("a=" + el[a].label + " b=" + el[b].label + " c=" + el[c].label + ": " + A.format(x1) +
                           " | " + A.format(x2) + " | " + A.format(x3) + " | " + A.format(x4));
        }
      }
    }
  }
  for (int a1 = 0; a1 < n; ++a1) {
    for (int a2 = 0; a2 < n; ++a2) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          GradedTensor lhs, rhs;
          try {
            lhs = delta(a1, delta(a2, db(b, c)));
            rhs = delta(b, delta(c, db(a1, a2)));
          } catch (const TruncationError&) {
            continue;
          }
          ++rep.comder2.cases;
          if (lhs != rhs) {
            rep.comder2.fail("a1=" + el[a1].label + " a2=" + el[a2].label + " b=" + el[b].label +
                             " c=" + el[c].label + ": " + A.format(lhs) + " vs " + A.format(rhs));
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace ybp
