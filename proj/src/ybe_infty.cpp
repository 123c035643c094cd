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

#include "ybp/ybe_infty.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "ybp/error.hpp"
#include "ybp/linfty.hpp"

namespace ybp {

namespace {

int parity(int d) { return ((d % 2) + 2) % 2; }
int pow_m1(int e) { return parity(e) == 0 ? 1 : -1; }

void require_index(int dim, int a, const char* what) {
  if (a < 0 || a >= dim) throw InputError(std::string(what) + ": basis index out of range");
}

std::string format_vector(const StructureConstants& s, const SparseVector& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : v) {
    if (!out.empty()) out += " + ";
    out += format_scalar(c) + "*" + s.name(k);
  }
  return out;
}

}  // namespace

std::string StructureConstants::name(int a) const {
  if (a >= 0 && a < static_cast<int>(names.size())) return names[static_cast<size_t>(a)];
  return "e" + std::to_string(a + 1);
}

SparseVector StructureConstants::product(int a, int b) const {
  require_index(dim, a, "structure constants");
  require_index(dim, b, "structure constants");
  const auto it = table.find({a, b});
  return it == table.end() ? SparseVector{} : it->second;
}

void StructureConstants::set(int a, int b, SparseVector v) {
  require_index(dim, a, "structure constants");
  require_index(dim, b, "structure constants");
  for (auto it = v.begin(); it != v.end();) {
    require_index(dim, it->first, "structure constants");
    it = is_zero(it->second) ? v.erase(it) : std::next(it);
  }
  if (v.empty()) table.erase({a, b});
  else table[{a, b}] = std::move(v);
}

namespace {

SparseVector bilinear(const StructureConstants& s, const SparseVector& x, const SparseVector& y) {
  SparseVector out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) axpy(out, ca * cb, s.product(a, b));
  }
  return out;
}

SparseVector unit_vector(int a) { return {{a, Scalar(1)}}; }

CheckResult check_value_degrees(const StructureConstants& s) {
  CheckResult r("degrees of structure constants");
  for (const auto& [ab, v] : s.table) {
    ++r.cases;
    for (const auto& [k, c] : v) {
      if (s.degree(k) != s.degree(ab.first) + s.degree(ab.second)) {
        r.fail(s.name(ab.first) + " " + s.name(ab.second) + " has a component " + s.name(k) + " of the wrong degree");
      }
    }
  }
  return r;
}

}  // namespace

std::vector<CheckResult> check_graded_lie(const StructureConstants& g) {
  CheckResult skew("graded antisymmetry");
  CheckResult jac("graded Jacobi identity");
  for (int a = 0; a < g.dim; ++a) {
    for (int b = 0; b < g.dim; ++b) {
      ++skew.cases;
      SparseVector sum = g.product(a, b);
      axpy(sum, pow_m1(g.degree(a) * g.degree(b)), g.product(b, a));
      if (!sum.empty()) skew.fail("[" + g.name(a) + ", " + g.name(b) + "] + sign [" + g.name(b) + ", " + g.name(a) + "] = " + format_vector(g, sum));
      for (int c = 0; c < g.dim; ++c) {
        ++jac.cases;
        // [a,[b,c]] - [[a,b],c] - (-1)^{|a||b|} [b,[a,c]]
        SparseVector res = bilinear(g, unit_vector(a), g.product(b, c));
        axpy(res, -1, bilinear(g, g.product(a, b), unit_vector(c)));
        axpy(res, -pow_m1(g.degree(a) * g.degree(b)), bilinear(g, unit_vector(b), g.product(a, c)));
        if (!res.empty()) jac.fail("at (" + g.name(a) + ", " + g.name(b) + ", " + g.name(c) + "): " + format_vector(g, res));
      }
    }
  }
  return {skew, jac, check_value_degrees(g)};
}

std::vector<CheckResult> check_associative(const StructureConstants& s) {
  CheckResult assoc("associativity");
  for (int a = 0; a < s.dim; ++a) {
    for (int b = 0; b < s.dim; ++b) {
      for (int c = 0; c < s.dim; ++c) {
        ++assoc.cases;
        SparseVector res = bilinear(s, s.product(a, b), unit_vector(c));
        axpy(res, -1, bilinear(s, unit_vector(a), s.product(b, c)));
        if (!res.empty()) assoc.fail("at (" + s.name(a) + ", " + s.name(b) + ", " + s.name(c) + "): " + format_vector(s, res));
      }
    }
  }
  return {assoc, check_value_degrees(s)};
}

StructureConstants matrix_structure(int n) {
  if (n < 1) throw InputError("matrix algebra: size must be positive");
  StructureConstants s;
  s.dim = n * n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) s.set(i * n + j, j * n + l, unit_vector(i * n + l));
  return s;
}

StructureConstants commutator_structure(const StructureConstants& a) {
  StructureConstants g = a;
  g.table.clear();
  for (int x = 0; x < a.dim; ++x) {
    for (int y = 0; y < a.dim; ++y) {
      SparseVector v = a.product(x, y);
      axpy(v, -pow_m1(a.degree(x) * a.degree(y)), a.product(y, x));
      g.set(x, y, v);
    }
  }
  return g;
}

StructureConstants gl_structure(int n) { return commutator_structure(matrix_structure(n)); }

StructureConstants ground_field_structure() {
  StructureConstants s;
  s.dim = 1;
  s.names = {"1"};
  s.set(0, 0, unit_vector(0));
  return s;
}

void RnFamily::set(int n, const GradedTensor& r) {
  if (n < 1) throw InputError("r_n: n must be at least 1");
  for (const auto& [w, c] : r.terms()) {
    if (static_cast<int>(w.size()) != n) throw InputError("r_" + std::to_string(n) + ": word of length " + std::to_string(w.size()));
    int d = 0;
    for (int x : w) {
      require_index(dim_, x, "r_n");
      d += degrees_.empty() ? 0 : degrees_[static_cast<size_t>(x)];
    }
    if (d != 2 - n) throw InputError("r_" + std::to_string(n) + " must have degree " + std::to_string(2 - n));
  }
  if (r.is_zero()) elements_.erase(n);
  else elements_[n] = r;
}

GradedTensor RnFamily::get(int n) const {
  const auto it = elements_.find(n);
  return it == elements_.end() ? GradedTensor{} : it->second;
}

std::string to_string(ShuffleReading r) { return r == ShuffleReading::kDefault ? "Sh(i,j-1)" : "Sh(i,i+j-1) literal"; }

namespace {

// x placed in slots sx, y in slots sy (sx and sy together cover 0..n-1 and
// share exactly slot s = sx[0] = sy[0]). combine(a, b) gives the overlap slot.
GradedTensor slot_product(const StructureConstants& alg, const GradedTensor& x, const std::vector<int>& sx,
                          const GradedTensor& y, const std::vector<int>& sy, int n,
                          const std::function<SparseVector(int, int)>& combine) {
  GradedTensor out;
  for (const auto& [wx, cx] : x.terms()) {
    for (const auto& [wy, cy] : y.terms()) {
      std::vector<int> xs(static_cast<size_t>(n), -1);
      std::vector<int> ys(static_cast<size_t>(n), -1);
      for (size_t k = 0; k < sx.size(); ++k) xs[static_cast<size_t>(sx[k])] = wx[k];
      for (size_t k = 0; k < sy.size(); ++k) ys[static_cast<size_t>(sy[k])] = wy[k];
      // (x_1 (x) .. )(y_1 (x) ..): y_l passes x_k for k > l
      int e = 0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < k; ++l) {
          if (xs[static_cast<size_t>(k)] >= 0 && ys[static_cast<size_t>(l)] >= 0)
            e += alg.degree(xs[static_cast<size_t>(k)]) * alg.degree(ys[static_cast<size_t>(l)]);
        }
      const int s = sx.front();
      const SparseVector mid = combine(xs[static_cast<size_t>(s)], ys[static_cast<size_t>(s)]);
      for (const auto& [m, cm] : mid) {
        Word w(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) {
          const int a = xs[static_cast<size_t>(k)] >= 0 ? xs[static_cast<size_t>(k)] : ys[static_cast<size_t>(k)];
          w[static_cast<size_t>(k)] = k == s ? m : a;
        }
        out.add_term(w, cx * cy * cm * pow_m1(e));
      }
    }
  }
  return out;
}

void require_lie(const StructureConstants& g) {
  for (const auto& r : check_graded_lie(g)) {
    if (!r.passed) throw PreconditionError("not a graded Lie algebra: " + r.name + " fails " + r.witness);
  }
}

void require_assoc(const StructureConstants& a) {
  for (const auto& r : check_associative(a)) {
    if (!r.passed) throw PreconditionError("not a graded associative algebra: " + r.name + " fails " + r.witness);
  }
}

void check_family(const StructureConstants& s, const RnFamily& fam, int n) {
  if (fam.dim() != s.dim) throw InputError("r_n family and algebra have different dimensions");
  if (n < 1) throw InputError("n must be at least 1");
}

// Index lists (sigma(1..i), sigma(1) sigma(i+1..i+j-1)), 0-based slots.
using SlotPair = std::pair<std::vector<int>, std::vector<int>>;

std::vector<SlotPair> shuffle_slots(int i, int j, int n, ShuffleReading reading) {
  std::vector<SlotPair> out;
  const auto perms = reading == ShuffleReading::kDefault ? shuffles(i, j - 1) : shuffles(i, i + j - 1);
  for (const auto& p : perms) {
    bool inside = true;
    for (int k = 0; k < n; ++k) inside = inside && p(k) < n;
    if (!inside) continue;
    SlotPair sp;
    for (int k = 0; k < i; ++k) sp.first.push_back(p(k));
    sp.second.push_back(p(0));
    for (int k = i; k < n; ++k) sp.second.push_back(p(k));
    out.push_back(sp);
  }
  return out;
}

}  // namespace

GradedTensor cybe_infty_residual(const StructureConstants& g, const RnFamily& fam, int n, ShuffleReading reading) {
  check_family(g, fam, n);
  require_lie(g);
  GradedTensor out;
  const auto bracket = [&](int a, int b) { return g.product(a, b); };
  for (int i = 1; i <= n; ++i) {
    const int j = n + 1 - i;
    const GradedTensor ri = fam.get(i);
    const GradedTensor rj = fam.get(j);
    if (ri.is_zero() || rj.is_zero()) continue;
    for (const auto& [sx, sy] : shuffle_slots(i, j, n, reading)) {
      // supercommutator of single-overlap tensors: the Lie bracket in the shared slot
      out += Scalar(pow_m1(i)) * slot_product(g, ri, sx, rj, sy, n, bracket);
    }
  }
  return out;
}

GradedTensor aybe_infty_residual(const StructureConstants& a, const RnFamily& fam, int n) {
  check_family(a, fam, n);
  require_assoc(a);
  GradedTensor out;
  const auto mult = [&](int x, int y) { return a.product(x, y); };
  for (int i = 1; i <= n; ++i) {
    const int j = n + 1 - i;
    const GradedTensor ri = fam.get(i);
    const GradedTensor rj = fam.get(j);
    if (ri.is_zero() || rj.is_zero()) continue;
    for (int s = 0; s < n; ++s) {
      // sigma(k) = k + s mod n
      std::vector<int> sx;
      std::vector<int> sy{s};
      for (int k = 0; k < i; ++k) sx.push_back((k + s) % n);
      for (int k = i; k < n; ++k) sy.push_back((k + s) % n);
      out += Scalar(pow_m1(i)) * slot_product(a, ri, sx, rj, sy, n, mult);
    }
  }
  return out;
}

CybeInfinityReport cybe_infty_report(const StructureConstants& g, const RnFamily& fam, int n) {
  CybeInfinityReport rep;
  rep.default_reading = cybe_infty_residual(g, fam, n, ShuffleReading::kDefault);
  rep.literal_reading = cybe_infty_residual(g, fam, n, ShuffleReading::kLiteral);
  rep.readings_coincide = rep.default_reading == rep.literal_reading;
  return rep;
}

TensorMap matrix_tensor_to_map(const GradedTensor& t, int n, int m) {
  TensorMap f(n, m, m);
  for (const auto& [w, c] : t.terms()) {
    if (static_cast<int>(w.size()) != m) throw InputError("matrix tensor: word length mismatch");
    Word out;
    Word in;
    for (int x : w) {
      require_index(n * n, x, "matrix tensor");
      out.push_back(x / n);
      in.push_back(x % n);
    }
    f.add_entry(out, in, c);
  }
  return f;
}

GradedTensor map_to_matrix_tensor(const TensorMap& f) {
  if (f.domain_degree() != f.codomain_degree()) throw InputError("matrix tensor: map must be an endomorphism");
  GradedTensor t;
  const int n = f.dim();
  for (const auto& [out, in, c] : f.entries()) {
    Word w;
    for (size_t k = 0; k < out.size(); ++k) w.push_back(out[k] * n + in[k]);
    t.add_term(w, c);
  }
  return t;
}

std::string relation(const TensorMap& a, const TensorMap& b) {
  if (a.is_zero() && b.is_zero()) return "both zero";
  if (a == b) return "equal";
  if (a == -b) return "negated";
  return "neither";
}

void DoubleInfinityFamily::set(int n, const TensorMap& op) {
  if (n < 1) throw InputError("double bracket family: n must be at least 1");
  if (op.dim() != dim_ || op.domain_degree() != n || op.codomain_degree() != n)
    throw InputError("{}_" + std::to_string(n) + " must map A^(x)" + std::to_string(n) + " to itself");
  for (const auto& [out, in, c] : op.entries()) {
    int din = 2 - n;
    int dout = 0;
    for (int x : in) din += degree(x);
    for (int x : out) dout += degree(x);
    if (din != dout) throw InputError("{}_" + std::to_string(n) + " must have degree " + std::to_string(2 - n));
  }
  if (op.is_zero()) ops_.erase(n);
  else ops_[n] = op;
}

const TensorMap* DoubleInfinityFamily::get(int n) const {
  const auto it = ops_.find(n);
  return it == ops_.end() ? nullptr : &it->second;
}

namespace {

std::vector<int> word_degrees(const DoubleInfinityFamily& fam, const Word& w) {
  std::vector<int> d;
  for (int x : w) d.push_back(fam.degree(x));
  return d;
}

}  // namespace

CheckResult check_double_infinity_skew(const DoubleInfinityFamily& fam) {
  CheckResult r("double skew-symmetry");
  for (const auto& [n, op] : fam.ops()) {
    for (const auto& a : all_words(fam.dim(), n)) {
      const GradedTensor base = op.column(a);
      for (const auto& sigma : all_permutations(n)) {
        ++r.cases;
        Word permuted;
        for (int k = 0; k < n; ++k) permuted.push_back(a[static_cast<size_t>(sigma(k))]);
        const GradedTensor lhs = apply_permutation(sigma, op.column(permuted));
        const GradedTensor rhs = Scalar(sign_odd(word_degrees(fam, a), sigma)) * base;
        if (lhs != rhs) {
          r.fail("n = " + std::to_string(n) + ", a = " + format_word(a) + ", sigma = " + sigma.to_string() + ": " +
                 lhs.to_string() + " vs " + rhs.to_string());
        }
      }
    }
  }
  return r;
}

GradedTensor jacobi_infty_residual(const DoubleInfinityFamily& fam, const Word& args) {
  const int n = static_cast<int>(args.size());
  if (n < 1) throw InputError("Jacobi-infinity: need at least one argument");
  for (int x : args) require_index(fam.dim(), x, "Jacobi-infinity");
  const std::vector<int> degs = word_degrees(fam, args);
  GradedTensor out;
  for (int i = 1; i <= n; ++i) {
    const int j = n + 1 - i;
    const TensorMap* inner = fam.get(i);
    const TensorMap* outer = fam.get(j);
    if (!inner || !outer) continue;
    for (int s = 0; s < n; ++s) {
      std::vector<int> img;
      for (int k = 0; k < n; ++k) img.push_back((k + s) % n);
      const Permutation sigma(img);
      Word b;
      for (int k = 0; k < n; ++k) b.push_back(args[static_cast<size_t>(sigma(k))]);
      const GradedTensor in_val = inner->column(Word(b.begin(), b.begin() + i));
      GradedTensor term;
      for (const auto& [y, cy] : in_val.terms()) {
        Word outer_args{y.back()};
        outer_args.insert(outer_args.end(), b.begin() + i, b.end());
        const GradedTensor o = outer->column(outer_args);
        for (const auto& [z, cz] : o.terms()) {
          Word w(y.begin(), y.end() - 1);
          w.insert(w.end(), z.begin(), z.end());
          term.add_term(w, cy * cz);
        }
      }
      out += Scalar(pow_m1(i) * sign_odd(degs, sigma)) * apply_permutation(sigma, term);
    }
  }
  return out;
}

TensorMap jacobi_infty_map(const DoubleInfinityFamily& fam, int n) {
  TensorMap f(fam.dim(), n, n);
  for (const auto& a : all_words(fam.dim(), n)) {
    const GradedTensor res = jacobi_infty_residual(fam, a);
    for (const auto& [w, c] : res.terms()) f.add_entry(w, a, c);
  }
  return f;
}

CheckResult check_double_leibniz(const DoubleInfinityFamily& fam, const TruncatedAlgebra& A, int n,
                                 DoubleLeibnizSign sign) {
  CheckResult r("double Leibniz rule");
  if (A.dim() != fam.dim()) throw InputError("double Leibniz: algebra and family have different dimensions");
  const TensorMap* op = fam.get(n);
  if (!op) return r;
  const auto bracket_of = [&](const Word& prefix, const SparseVector& last) {
    GradedTensor t;
    for (const auto& [x, c] : last) {
      Word w = prefix;
      w.push_back(x);
      t += c * op->column(w);
    }
    return t;
  };
  // multiplies slot 0 on the left (left = true) or the last slot on the right
  const auto act = [&](const GradedTensor& t, int a, bool left) {
    GradedTensor out;
    for (const auto& [w, c] : t.terms()) {
      const size_t slot = left ? 0 : w.size() - 1;
      if (left ? A.overflows(a, w[slot]) : A.overflows(w[slot], a)) return std::optional<GradedTensor>{};
      const SparseVector p = left ? A.multiply_basis(a, w[slot]) : A.multiply_basis(w[slot], a);
      for (const auto& [x, cx] : p) {
        Word v = w;
        v[slot] = x;
        out.add_term(v, c * cx);
      }
    }
    return std::optional<GradedTensor>{out};
  };
  for (const auto& prefix : all_words(fam.dim(), n - 1)) {
    int before = 0;
    for (int x : prefix) before += fam.degree(x);
    for (int a1 = 0; a1 < A.dim(); ++a1) {
      for (int a2 = 0; a2 < A.dim(); ++a2) {
        if (A.overflows(a1, a2)) continue;
        const auto left = act(bracket_of(prefix, {{a2, Scalar(1)}}), a1, true);
        const auto right = act(bracket_of(prefix, {{a1, Scalar(1)}}), a2, false);
        if (!left || !right) continue;
        ++r.cases;
        const GradedTensor lhs = bracket_of(prefix, A.multiply_basis(a1, a2));
        const int s2 = sign == DoubleLeibnizSign::kPowerN ? pow_m1(n * fam.degree(a2)) : 1;
        const GradedTensor rhs = Scalar(pow_m1(fam.degree(a1) * before)) * *left + Scalar(s2) * *right;
        if (lhs != rhs) {
          r.fail("prefix " + format_word(prefix) + ", a' = " + A.element(a1).label + ", a'' = " + A.element(a2).label +
                 ": " + lhs.to_string() + " vs " + rhs.to_string());
        }
      }
    }
  }
  return r;
}

}  // namespace ybp
