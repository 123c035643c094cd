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

#include "ybp/operad.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "ybp/error.hpp"
#include "ybp/tensor.hpp"

namespace ybp {

std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::kNone: return "none";
    case Symmetry::kSymmetric: return "sym";
    case Symmetry::kSkew: return "skew";
  }
  return "?";
}

Symmetry parse_symmetry(const std::string& s) {
  if (s == "none") return Symmetry::kNone;
  if (s == "sym" || s == "symmetric") return Symmetry::kSymmetric;
  if (s == "skew") return Symmetry::kSkew;
  throw InputError("unknown symmetry '" + s + "' (expected none, sym or skew)");
}

namespace {

int epsilon(Symmetry sym) { return sym == Symmetry::kSymmetric ? 1 : -1; }

const std::vector<Permutation>& s3() {
  static const std::vector<Permutation> perms = all_permutations(3);
  return perms;
}

}  // namespace

int QuadraticRelation::index(const Permutation& sigma, int shape) {
  if (shape != 1 && shape != 2) throw InputError("relation: shape must be 1 or 2");
  const auto& perms = s3();
  const auto it = std::find(perms.begin(), perms.end(), sigma);
  if (it == perms.end()) throw InputError("relation: sigma must lie in S_3");
  return 2 * static_cast<int>(it - perms.begin()) + shape - 1;
}

std::vector<Scalar> QuadraticRelation::coordinates(Symmetry sym) const {
  if (sym == Symmetry::kNone) return {lambda.begin(), lambda.end()};
  const Scalar eps = epsilon(sym);
  // outer symbol a with inner pair in cyclic order (a+1, a+2) is unknown a.
  const auto cyclic_sign = [&](int a, int b) { return b == (a + 1) % 3 ? Scalar(1) : eps; };
  std::vector<Scalar> out(3);
  for (size_t k = 0; k < s3().size(); ++k) {
    const Permutation& s = s3()[k];
    // b_s0 * (b_s1 * b_s2)
    out[s(0)] += lambda[2 * k] * cyclic_sign(s(0), s(1));
    // (b_s0 * b_s1) * b_s2 = eps b_s2 * (b_s0 * b_s1)
    out[s(2)] += lambda[2 * k + 1] * eps * cyclic_sign(s(2), s(0));
  }
  return out;
}

int unknown_count(Symmetry sym) { return sym == Symmetry::kNone ? 12 : 3; }

std::string unknown_name(Symmetry sym, int k) {
  if (sym != Symmetry::kNone) return "lambda" + std::to_string(k + 1);
  return "lambda[" + s3()[static_cast<size_t>(k / 2)].to_string() + "," + std::to_string(k % 2 + 1) + "]";
}

std::string Constraint::to_string(Symmetry sym) const {
  std::string s;
  for (const auto& [k, c] : row) {
    if (s.empty()) {
      if (c == -1) s += "-";
      else if (c != 1) s += format_scalar(c) + " ";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
      const Scalar a = abs(c);
      if (a != 1) s += format_scalar(a) + " ";
    }
    s += unknown_name(sym, k);
  }
  return s + " = 0";
}

namespace {

// Commutative polynomials whose variables are "factors": an atom "0".."3" or
// a product "(f*g)" of two factors. A monomial is a sorted list of factors.
using Monomial = std::vector<std::string>;
using Poly = std::map<Monomial, Scalar>;

void add(Poly& p, const Monomial& m, const Scalar& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = p.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) p.erase(it);
  }
}

Monomial mono_mul(Monomial a, const Monomial& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

class StarAlgebra {
 public:
  explicit StarAlgebra(Symmetry sym) : sym_(sym) {}

  Poly atom(int i) const { return {{{std::to_string(i)}, Scalar(1)}}; }

  Poly mul(const Poly& p, const Poly& q) const {
    Poly out;
    for (const auto& [m, a] : p) {
      for (const auto& [n, b] : q) add(out, mono_mul(m, n), a * b);
    }
    return out;
  }

  Poly star(const Poly& p, const Poly& q) const {
    Poly out;
    for (const auto& [m, a] : p) {
      for (const auto& [n, b] : q) {
        for (const auto& [k, c] : star_mono(m, n)) add(out, k, a * b * c);
      }
    }
    return out;
  }

 private:
  // (u m') * n = u (m' * n) + m' (u * n);  m * (v n') = v (m * n') + n' (m * v)
  Poly star_mono(const Monomial& m, const Monomial& n) const {
    if (m.empty() || n.empty()) return {};
    if (m.size() > 1) {
      const Monomial u{m.front()};
      const Monomial rest(m.begin() + 1, m.end());
      Poly out = mul({{u, Scalar(1)}}, star_mono(rest, n));
      for (const auto& [k, c] : mul({{rest, Scalar(1)}}, star_mono(u, n))) add(out, k, c);
      return out;
    }
    if (n.size() > 1) {
      const Monomial v{n.front()};
      const Monomial rest(n.begin() + 1, n.end());
      Poly out = mul({{v, Scalar(1)}}, star_mono(m, rest));
      for (const auto& [k, c] : mul({{rest, Scalar(1)}}, star_mono(m, v))) add(out, k, c);
      return out;
    }
    const std::string& f = m.front();
    const std::string& g = n.front();
    if (sym_ == Symmetry::kNone || f < g) return {{{"(" + f + "*" + g + ")"}, Scalar(1)}};
    if (f == g) {
      if (sym_ == Symmetry::kSkew) return {};
      return {{{"(" + f + "*" + g + ")"}, Scalar(1)}};
    }
    return {{{"(" + g + "*" + f + ")"}, Scalar(epsilon(sym_))}};
  }

  Symmetry sym_;
};

// The relation term for unknown k evaluated on (x1, x2, x3).
Poly relation_term(const StarAlgebra& alg, Symmetry sym, int k, const std::array<Poly, 3>& x) {
  if (sym == Symmetry::kNone) {
    const Permutation& s = s3()[static_cast<size_t>(k / 2)];
    if (k % 2 == 0) return alg.star(x[s(0)], alg.star(x[s(1)], x[s(2)]));
    return alg.star(alg.star(x[s(0)], x[s(1)]), x[s(2)]);
  }
  return alg.star(x[k], alg.star(x[(k + 1) % 3], x[(k + 2) % 3]));
}

bool is_obstruction(const Monomial& m) {
  if (m.size() != 2) return false;
  for (const auto& f : m) {
    if (f.size() != 5 || f.front() != '(') return false;
  }
  return true;
}

std::string display_monomial(const Monomial& m, const std::array<std::string, 4>& names) {
  std::string s;
  for (const auto& f : m) {
    for (char ch : f) {
      if (ch >= '0' && ch <= '3') {
        s += names[static_cast<size_t>(ch - '0')];
      } else {
        s += ch;
      }
    }
  }
  return s;
}

SparseVector normalized(SparseVector row) {
  const Scalar lead = row.begin()->second;
  for (auto& [k, c] : row) c /= lead;
  return row;
}

}  // namespace

ObstructionSystem leibniz_obstruction(Symmetry sym, int slot) {
  if (slot < 1 || slot > 3) throw InputError("leibniz_obstruction: slot must be 1, 2 or 3");
  const StarAlgebra alg(sym);
  // atoms: 0 = b', 1 = b'' (the split argument), 2 and 3 = the other two.
  std::array<Poly, 3> x;
  std::array<std::string, 4> names;
  const std::string b = "b" + std::to_string(slot);
  names[0] = b + "'";
  names[1] = b + "''";
  int next = 2;
  for (int i = 0; i < 3; ++i) {
    if (i == slot - 1) {
      x[i] = alg.mul(alg.atom(0), alg.atom(1));
    } else {
      names[static_cast<size_t>(next)] = "b" + std::to_string(i + 1);
      x[i] = alg.atom(next++);
    }
  }

  std::map<Monomial, SparseVector> rows;
  for (int k = 0; k < unknown_count(sym); ++k) {
    for (const auto& [m, c] : relation_term(alg, sym, k, x)) {
      if (is_obstruction(m)) axpy(rows[m], c, {{k, Scalar(1)}});
    }
  }

  ObstructionSystem sys;
  sys.sym = sym;
  std::vector<SparseVector> seen;
  for (const auto& [m, row] : rows) {
    if (row.empty()) continue;
    SparseVector n = normalized(row);
    if (std::find(seen.begin(), seen.end(), n) != seen.end()) continue;
    seen.push_back(n);
    sys.constraints.push_back({n, slot, display_monomial(m, names)});
  }
  RowReducer rr(unknown_count(sym));
  for (const auto& c : sys.constraints) rr.add_row(c.row);
  sys.solution_basis = rr.nullspace();
  return sys;
}

ObstructionSystem full_constraint_system(Symmetry sym) {
  ObstructionSystem sys;
  sys.sym = sym;
  RowReducer rr(unknown_count(sym));
  for (int slot = 1; slot <= 3; ++slot) {
    for (const auto& c : leibniz_obstruction(sym, slot).constraints) {
      const bool dup = std::any_of(sys.constraints.begin(), sys.constraints.end(),
                                   [&](const Constraint& o) { return o.row == c.row; });
      if (dup) continue;
      sys.constraints.push_back(c);
      rr.add_row(c.row);
    }
  }
  sys.solution_basis = rr.nullspace();
  return sys;
}

std::vector<Violation> violations(const ObstructionSystem& sys, const std::vector<Scalar>& coords) {
  if (static_cast<int>(coords.size()) != unknown_count(sys.sym)) {
    throw InputError("relation has " + std::to_string(coords.size()) + " coordinates, expected " +
                     std::to_string(unknown_count(sys.sym)));
  }
  std::vector<Violation> out;
  for (const auto& c : sys.constraints) {
    Scalar v = 0;
    for (const auto& [k, a] : c.row) v += a * coords[static_cast<size_t>(k)];
    if (!is_zero(v)) out.push_back({c, v});
  }
  return out;
}

Classification classify(Symmetry sym, const std::vector<std::vector<Scalar>>& r3_basis) {
  const ObstructionSystem sys = full_constraint_system(sym);
  Classification cl;
  RowReducer span(unknown_count(sym));
  for (const auto& v : r3_basis) {
    const auto bad = violations(sys, v);
    if (!bad.empty()) {
      cl.name = "not distributive";
      cl.witness = bad.front();
      return cl;
    }
    SparseVector row;
    for (size_t k = 0; k < v.size(); ++k) {
      if (!is_zero(v[k])) row.emplace(static_cast<int>(k), v[k]);
    }
    span.add_row(row);
  }
  cl.r3_dimension = span.rank();
  const bool r3_zero = cl.r3_dimension == 0;
  switch (sym) {
    case Symmetry::kNone: cl.name = r3_zero ? "magma (free operad)" : "Lie-admissible"; break;
    case Symmetry::kSkew: cl.name = r3_zero ? "skew-symmetric magma" : "Lie"; break;
    case Symmetry::kSymmetric: cl.name = "symmetric magma"; break;
  }
  return cl;
}

namespace {

// Polynomials in Sym V as sorted words; * extended as a biderivation:
// P * Q = sum_{i,j} d_i P d_j Q (e_i * e_j).
class OracleAlgebra {
 public:
  OracleAlgebra(int dim, Symmetry sym, std::uint64_t seed) : dim_(dim), table_(static_cast<size_t>(dim * dim)) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        if (sym != Symmetry::kNone && j < i) {
          GradedTensor t = table_[static_cast<size_t>(j * dim + i)];
          if (sym == Symmetry::kSkew) t *= Scalar(-1);
          table_[static_cast<size_t>(i * dim + j)] = t;
          continue;
        }
        GradedTensor t;
        if (!(sym == Symmetry::kSkew && i == j)) {
          for (int k = 0; k < dim; ++k) t.add_term({k}, coef(rng));
        }
        table_[static_cast<size_t>(i * dim + j)] = t;
      }
    }
  }

  GradedTensor var(int i) const { return GradedTensor::basis({i}); }

  GradedTensor mul(const GradedTensor& p, const GradedTensor& q) const {
    GradedTensor out;
    for (const auto& [m, a] : p.terms()) {
      for (const auto& [n, b] : q.terms()) {
        Word w = m;
        w.insert(w.end(), n.begin(), n.end());
        std::sort(w.begin(), w.end());
        out.add_term(w, a * b);
      }
    }
    return out;
  }

  GradedTensor derivative(const GradedTensor& p, int i) const {
    GradedTensor out;
    for (const auto& [m, a] : p.terms()) {
      const auto cnt = std::count(m.begin(), m.end(), i);
      if (cnt == 0) continue;
      Word w = m;
      w.erase(std::find(w.begin(), w.end(), i));
      out.add_term(w, a * Scalar(static_cast<long>(cnt)));
    }
    return out;
  }

  GradedTensor star(const GradedTensor& p, const GradedTensor& q) const {
    GradedTensor out;
    for (int i = 0; i < dim_; ++i) {
      const GradedTensor dp = derivative(p, i);
      if (dp.is_zero()) continue;
      for (int j = 0; j < dim_; ++j) {
        const GradedTensor dq = derivative(q, j);
        if (dq.is_zero()) continue;
        out += mul(mul(dp, dq), table_[static_cast<size_t>(i * dim_ + j)]);
      }
    }
    return out;
  }

 private:
  int dim_;
  std::vector<GradedTensor> table_;
};

GradedTensor oracle_relation(const OracleAlgebra& alg, Symmetry sym, const std::vector<Scalar>& coords,
                             const std::array<GradedTensor, 3>& x) {
  GradedTensor out;
  for (int k = 0; k < unknown_count(sym); ++k) {
    const Scalar& c = coords[static_cast<size_t>(k)];
    if (is_zero(c)) continue;
    GradedTensor t;
    if (sym == Symmetry::kNone) {
      const Permutation& s = s3()[static_cast<size_t>(k / 2)];
      t = k % 2 == 0 ? alg.star(x[s(0)], alg.star(x[s(1)], x[s(2)])) : alg.star(alg.star(x[s(0)], x[s(1)]), x[s(2)]);
    } else {
      t = alg.star(x[k], alg.star(x[(k + 1) % 3], x[(k + 2) % 3]));
    }
    out += c * t;
  }
  return out;
}

}  // namespace

bool symbolic_expand_oracle(const std::vector<Scalar>& coords, Symmetry sym, int slot, std::uint64_t seed) {
  if (static_cast<int>(coords.size()) != unknown_count(sym)) throw InputError("oracle: wrong coordinate count");
  if (slot < 1 || slot > 3) throw InputError("oracle: slot must be 1, 2 or 3");
  const OracleAlgebra alg(8, sym, seed);
  const GradedTensor u = alg.var(0), v = alg.var(1);
  std::array<GradedTensor, 3> whole, with_u, with_v;
  int next = 2;
  for (int i = 0; i < 3; ++i) {
    if (i == slot - 1) {
      whole[i] = alg.mul(u, v);
      with_u[i] = u;
      with_v[i] = v;
    } else {
      whole[i] = with_u[i] = with_v[i] = alg.var(next++);
    }
  }
  GradedTensor d = oracle_relation(alg, sym, coords, whole);
  d -= alg.mul(u, oracle_relation(alg, sym, coords, with_v));
  d -= alg.mul(v, oracle_relation(alg, sym, coords, with_u));
  return d.is_zero();
}

}  // namespace ybp
