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

#include "ybp/algebra.hpp"

#include <algorithm>

#include "ybp/error.hpp"

namespace ybp {

void Quiver::validate() const {
  std::set<std::string> labels;
  const int n = static_cast<int>(vertices.size());
  for (const auto& e : edges) {
    if (e.source < 0 || e.source >= n || e.target < 0 || e.target >= n) {
      throw InputError("quiver: edge '" + e.label + "' has an endpoint outside the vertex list");
    }
    if (e.label.empty()) throw InputError("quiver: empty edge label");
    if (!labels.insert(e.label).second) throw InputError("quiver: repeated edge label '" + e.label + "'");
  }
}

Quiver Quiver::doubled() const {
  Quiver d = *this;
  for (const auto& e : edges) d.edges.push_back({e.label + "*", e.target, e.source});
  d.validate();
  return d;
}

bool Quiver::strongly_connected() const {
  const int n = static_cast<int>(vertices.size());
  if (n == 0) return false;
  for (int s = 0; s < n; ++s) {
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& e : edges) {
        if (e.source == v && !seen[e.target]) {
          seen[e.target] = true;
          stack.push_back(e.target);
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
  }
  return true;
}

PrimenessCriteria primeness_criteria(const Quiver& q) {
  q.validate();
  PrimenessCriteria c;
  c.strongly_connected = q.strongly_connected();
  c.two_vertices_or_edges = q.vertices.size() >= 2 || q.edges.size() >= 2;
  return c;
}

TruncatedAlgebra::TruncatedAlgebra(std::vector<AlgebraBasisElement> basis, int cap, TruncationMode mode)
    : basis_(std::move(basis)), cap_(cap), mode_(mode) {
  if (cap < 0) throw InputError("truncated algebra: negative degree cap");
}

std::optional<int> TruncatedAlgebra::find(const std::string& label) const {
  for (int i = 0; i < dim(); ++i) {
    if (basis_[i].label == label) return i;
  }
  return std::nullopt;
}

std::optional<int> TruncatedAlgebra::find_path(int vertex, const std::vector<int>& path) const {
  for (int i = 0; i < dim(); ++i) {
    if (basis_[i].path == path && (!path.empty() || basis_[i].vertex == vertex)) return i;
  }
  return std::nullopt;
}

void TruncatedAlgebra::set_product(int i, int j, SparseVector v) {
  if (v.empty()) {
    mult_.erase({i, j});
  } else {
    mult_[{i, j}] = std::move(v);
  }
  overflow_.erase({i, j});
}

void TruncatedAlgebra::set_overflow(int i, int j) {
  mult_.erase({i, j});
  overflow_.insert({i, j});
}

SparseVector TruncatedAlgebra::multiply_basis(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim() || j >= dim()) throw InputError("algebra: basis index out of range");
  if (overflows(i, j)) {
    throw TruncationError("product " + basis_[i].label + " * " + basis_[j].label + " exceeds the degree cap " +
                          std::to_string(cap_));
  }
  const auto it = mult_.find({i, j});
  return it == mult_.end() ? SparseVector{} : it->second;
}

SparseVector TruncatedAlgebra::multiply(const SparseVector& x, const SparseVector& y) const {
  SparseVector out;
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : y) axpy(out, a * b, multiply_basis(i, j));
  }
  return out;
}

std::vector<int> TruncatedAlgebra::generators() const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i) {
    if (basis_[i].degree == 1) out.push_back(i);
  }
  return out;
}

CheckResult TruncatedAlgebra::check_associativity() const {
  CheckResult res("associativity");
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) {
      for (int k = 0; k < dim(); ++k) {
        SparseVector lhs, rhs;
        try {
          lhs = multiply(multiply_basis(i, j), {{k, Scalar(1)}});
          rhs = multiply({{i, Scalar(1)}}, multiply_basis(j, k));
        } catch (const TruncationError&) {
          continue;
        }
        ++res.cases;
        if (lhs != rhs) {
          res.fail("(" + basis_[i].label + " " + basis_[j].label + ") " + basis_[k].label + " = " + format(lhs) +
                   " but " + basis_[i].label + " (" + basis_[j].label + " " + basis_[k].label + ") = " + format(rhs));
        }
      }
    }
  }
  return res;
}

CheckResult TruncatedAlgebra::check_unit() const {
  CheckResult res("unit");
  for (int i = 0; i < dim(); ++i) {
    const SparseVector b{{i, Scalar(1)}};
    ++res.cases;
    if (multiply(unit_, b) != b || multiply(b, unit_) != b) res.fail("unit fails on " + basis_[i].label);
  }
  return res;
}

bool TruncatedAlgebra::is_commutative() const {
  for (int i = 0; i < dim(); ++i) {
    for (int j = i + 1; j < dim(); ++j) {
      if (overflows(i, j) != overflows(j, i)) return false;
      if (!overflows(i, j) && multiply_basis(i, j) != multiply_basis(j, i)) return false;
    }
  }
  return true;
}

std::string TruncatedAlgebra::format(const SparseVector& x) const {
  if (x.empty()) return "0";
  std::string s;
  for (const auto& [i, c] : x) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += format_scalar(c) + " ";
    s += basis_[i].label;
  }
  return s;
}

std::string TruncatedAlgebra::format(const GradedTensor& t) const {
  if (t.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : t.terms()) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += format_scalar(c) + " ";
    s += "[";
    for (size_t k = 0; k < w.size(); ++k) {
      if (k) s += ", ";
      s += basis_[w[k]].label;
    }
    s += "]";
  }
  return s;
}

namespace {

struct Path {
  int vertex = 0;
  std::vector<int> edges;
  int length() const { return static_cast<int>(edges.size()); }
};

int path_end(const Quiver& q, const Path& p) {
  return p.edges.empty() ? p.vertex : q.edges[p.edges.back()].target;
}

// Ordered by length, then by the edge sequence; idempotents by vertex.
std::vector<Path> enumerate_paths(const Quiver& q, int cap) {
  std::vector<Path> out;
  for (int v = 0; v < static_cast<int>(q.vertices.size()); ++v) out.push_back({v, {}});
  size_t begin = 0;
  for (int len = 1; len <= cap; ++len) {
    const size_t end = out.size();
    for (size_t k = begin; k < end; ++k) {
      for (int e = 0; e < static_cast<int>(q.edges.size()); ++e) {
        if (q.edges[e].source != path_end(q, out[k])) continue;
        Path p = out[k];
        p.edges.push_back(e);
        out.push_back(std::move(p));
      }
    }
    begin = end;
  }
  return out;
}

std::optional<Path> concat(const Quiver& q, const Path& a, const Path& b) {
  if (path_end(q, a) != b.vertex) return std::nullopt;
  Path p = a;
  p.edges.insert(p.edges.end(), b.edges.begin(), b.edges.end());
  return p;
}

AlgebraBasisElement element_for(const Quiver& q, const Path& p) {
  AlgebraBasisElement b;
  b.degree = p.length();
  b.path = p.edges;
  b.vertex = p.vertex;
  if (p.edges.empty()) {
    b.label = "e" + q.vertices[p.vertex];
  } else {
    for (int e : p.edges) b.label += q.edges[e].label;
  }
  return b;
}

using PathIndex = std::map<std::pair<int, std::vector<int>>, int>;

PathIndex index_paths(const std::vector<Path>& paths) {
  PathIndex idx;
  for (int i = 0; i < static_cast<int>(paths.size()); ++i) idx[{paths[i].vertex, paths[i].edges}] = i;
  return idx;
}

using PathCombination = std::vector<std::pair<Path, Scalar>>;

TruncatedAlgebra quotient_algebra(const Quiver& qbar, int cap, const PathCombination& relation) {
  const auto paths = enumerate_paths(qbar, cap);
  const auto idx = index_paths(paths);
  const int n = static_cast<int>(paths.size());
  const auto col = [n](int i) { return n - 1 - i; };

  RowReducer rr(n);
  for (const Path& p : paths) {
    for (const Path& q : paths) {
      if (p.length() + q.length() > cap) continue;
      SparseVector row;
      for (const auto& [t, c] : relation) {
        const auto pt = concat(qbar, p, t);
        if (!pt) continue;
        const auto ptq = concat(qbar, *pt, q);
        if (!ptq || ptq->length() > cap) continue;
        axpy(row, c, {{col(idx.at({ptq->vertex, ptq->edges})), Scalar(1)}});
      }
      if (!row.empty()) rr.add_row(std::move(row));
    }
  }

  std::vector<AlgebraBasisElement> basis;
  std::map<int, int> basis_of_col;
  for (int i = 0; i < n; ++i) {
    if (rr.rows().contains(col(i))) continue;
    basis_of_col[col(i)] = static_cast<int>(basis.size());
    basis.push_back(element_for(qbar, paths[i]));
  }
  const auto normal_form = [&](const Path& p) {
    SparseVector out;
    for (const auto& [c, v] : rr.reduce({{col(idx.at({p.vertex, p.edges})), Scalar(1)}})) {
      out.emplace(basis_of_col.at(c), v);
    }
    return out;
  };

  TruncatedAlgebra A(basis, cap, TruncationMode::kQuotient);
  for (int i = 0; i < A.dim(); ++i) {
    for (int j = 0; j < A.dim(); ++j) {
      const Path a{basis[i].vertex, basis[i].path};
      const Path b{basis[j].vertex, basis[j].path};
      const auto ab = concat(qbar, a, b);
      if (!ab || ab->length() > cap) continue;
      A.set_product(i, j, normal_form(*ab));
    }
  }
  SparseVector unit;
  for (int v = 0; v < static_cast<int>(qbar.vertices.size()); ++v) axpy(unit, Scalar(1), normal_form({v, {}}));
  A.set_unit(std::move(unit));
  return A;
}

PathCombination preprojective_relation(const Quiver& q, const Quiver& qbar) {
  PathCombination rel;
  const int m = static_cast<int>(q.edges.size());
  for (int e = 0; e < m; ++e) {
    rel.push_back({Path{qbar.edges[e].source, {e, e + m}}, Scalar(1)});
    rel.push_back({Path{qbar.edges[e + m].source, {e + m, e}}, Scalar(-1)});
  }
  return rel;
}

}  // namespace

TruncatedAlgebra path_algebra(const Quiver& q, int cap, TruncationMode mode) {
  q.validate();
  if (cap < 0) throw InputError("path algebra: negative degree cap");
  const auto paths = enumerate_paths(q, cap);
  const auto idx = index_paths(paths);
  std::vector<AlgebraBasisElement> basis;
  for (const Path& p : paths) basis.push_back(element_for(q, p));
  TruncatedAlgebra A(std::move(basis), cap, mode);
  const int n = static_cast<int>(paths.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto ab = concat(q, paths[i], paths[j]);
      if (!ab) continue;
      if (ab->length() > cap) {
        if (mode == TruncationMode::kWindow) A.set_overflow(i, j);
        continue;
      }
      A.set_product(i, j, {{idx.at({ab->vertex, ab->edges}), Scalar(1)}});
    }
  }
  SparseVector unit;
  for (int v = 0; v < static_cast<int>(q.vertices.size()); ++v) unit.emplace(v, Scalar(1));
  A.set_unit(std::move(unit));
  return A;
}

TruncatedAlgebra truncated_polynomial(int cap, const std::string& var) {
  Quiver q;
  q.vertices = {"1"};
  q.edges = {{var, 0, 0}};
  return path_algebra(q, cap, TruncationMode::kQuotient);
}

TruncatedAlgebra preprojective_algebra(const Quiver& q, int cap) {
  q.validate();
  if (cap < 0) throw InputError("preprojective algebra: negative degree cap");
  const Quiver qbar = q.doubled();
  return quotient_algebra(qbar, cap, preprojective_relation(q, qbar));
}

TruncatedAlgebra deformed_preprojective_algebra(const Quiver& q, int cap, const std::vector<Scalar>& lambda) {
  q.validate();
  if (cap < 0) throw InputError("deformed preprojective algebra: negative degree cap");
  if (lambda.size() != q.vertices.size()) {
    throw InputError("deformed preprojective algebra: need one lambda per vertex (" +
                     std::to_string(q.vertices.size()) + "), got " + std::to_string(lambda.size()));
  }
  const Quiver qbar = q.doubled();
  PathCombination rel;
  for (int v = 0; v < static_cast<int>(lambda.size()); ++v) {
    if (!is_zero(lambda[v])) rel.push_back({Path{v, {}}, lambda[v]});
  }
  for (auto [p, c] : preprojective_relation(q, qbar)) rel.push_back({p, -c});
  return quotient_algebra(qbar, cap, rel);
}

GradedTensor multiply_in_slot(const TruncatedAlgebra& A, const GradedTensor& t, int slot, const SparseVector& a,
                              bool left) {
  GradedTensor out;
  for (const auto& [w, c] : t.terms()) {
    if (slot < 0 || slot >= static_cast<int>(w.size())) throw InputError("multiply_in_slot: slot out of range");
    for (const auto& [k, ak] : a) {
      const SparseVector prod = left ? A.multiply_basis(k, w[slot]) : A.multiply_basis(w[slot], k);
      for (const auto& [m, pm] : prod) {
        Word nw = w;
        nw[slot] = m;
        out.add_term(nw, c * ak * pm);
      }
    }
  }
  return out;
}

}  // namespace ybp
