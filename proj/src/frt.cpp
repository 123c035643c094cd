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

#include "ybp/frt.hpp"

#include <algorithm>
#include <functional>

#include "ybp/error.hpp"
#include "ybp/ybe.hpp"

namespace ybp {

int YoungDiagram::size() const {
  int s = 0;
  for (int r : rows) s += r;
  return s;
}

std::string YoungDiagram::to_string() const {
  std::string s = "(";
  for (size_t k = 0; k < rows.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(rows[k]);
  }
  return s + ")";
}

YoungDiagram make_diagram(std::vector<int> rows) {
  if (rows.empty()) throw InputError("Young diagram: no rows");
  for (size_t k = 0; k < rows.size(); ++k) {
    if (rows[k] <= 0) throw InputError("Young diagram: rows must be positive");
    if (k && rows[k] > rows[k - 1]) throw InputError("Young diagram: rows must be weakly decreasing");
  }
  return YoungDiagram{std::move(rows)};
}

std::vector<YoungDiagram> partitions(int m) {
  if (m < 1) throw InputError("partitions: m must be positive");
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(YoungDiagram{cur});
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

int hook_length_dimension(const YoungDiagram& lam) {
  const int m = lam.size();
  std::vector<int> cols(static_cast<size_t>(lam.rows.front()), 0);
  for (int r : lam.rows)
    for (int c = 0; c < r; ++c) ++cols[static_cast<size_t>(c)];
  mpz_class num = 1;
  mpz_class den = 1;
  for (int k = 2; k <= m; ++k) num *= k;
  for (size_t i = 0; i < lam.rows.size(); ++i) {
    for (int j = 0; j < lam.rows[i]; ++j) {
      den *= (lam.rows[i] - j - 1) + (cols[static_cast<size_t>(j)] - static_cast<int>(i) - 1) + 1;
    }
  }
  return static_cast<int>(mpz_class(num / den).get_si());
}

GroupAlgebraElement GroupAlgebraElement::identity(int m) {
  GroupAlgebraElement e(m);
  e.add(Permutation::identity(m), 1);
  return e;
}

void GroupAlgebraElement::add(const Permutation& p, const Scalar& c) {
  if (p.size() != m_) throw InputError("group algebra: permutation of the wrong size");
  if (is_zero(c)) return;
  Scalar& slot = terms_[p];
  slot += c;
  if (is_zero(slot)) terms_.erase(p);
}

Scalar GroupAlgebraElement::coefficient(const Permutation& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? Scalar(0) : it->second;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  if (o.m_ != m_) throw InputError("group algebra: degree mismatch");
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Scalar& s) {
  if (is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= s;
  return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.m_ != b.m_) throw InputError("group algebra: degree mismatch");
  GroupAlgebraElement out(a.m_);
  for (const auto& [p, cp] : a.terms_)
    for (const auto& [q, cq] : b.terms_) out.add(p * q, cp * cq);
  return out;
}

std::string GroupAlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += format_scalar(c) + "*" + p.to_string();
  }
  return s;
}

namespace {

// All permutations of the given values among themselves, as elements of S_m.
std::vector<Permutation> subgroup_on_blocks(int m, const std::vector<std::vector<int>>& blocks) {
  std::vector<Permutation> out{Permutation::identity(m)};
  for (const auto& block : blocks) {
    std::vector<Permutation> next;
    for (const auto& local : all_permutations(static_cast<int>(block.size()))) {
      std::vector<int> img(static_cast<size_t>(m));
      for (int k = 0; k < m; ++k) img[static_cast<size_t>(k)] = k;
      for (size_t k = 0; k < block.size(); ++k) img[static_cast<size_t>(block[k])] = block[static_cast<size_t>(local(static_cast<int>(k)))];
      const Permutation g(img);
      for (const auto& h : out) next.push_back(h * g);
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

GroupAlgebraElement young_symmetrizer(const YoungDiagram& lam) {
  const YoungDiagram d = make_diagram(lam.rows);
  const int m = d.size();
  std::vector<std::vector<int>> row_blocks;
  std::vector<std::vector<int>> col_blocks(static_cast<size_t>(d.rows.front()));
  int next = 0;
  for (int r : d.rows) {
    std::vector<int> row;
    for (int c = 0; c < r; ++c) {
      row.push_back(next);
      col_blocks[static_cast<size_t>(c)].push_back(next);
      ++next;
    }
    row_blocks.push_back(row);
  }
  GroupAlgebraElement a(m);
  for (const auto& p : subgroup_on_blocks(m, row_blocks)) a.add(p, 1);
  GroupAlgebraElement b(m);
  for (const auto& q : subgroup_on_blocks(m, col_blocks)) b.add(q, q.sign());
  return a * b;
}

int left_ideal_dimension(const GroupAlgebraElement& x) {
  const auto perms = all_permutations(x.degree());
  std::map<Permutation, int> index;
  for (size_t k = 0; k < perms.size(); ++k) index[perms[k]] = static_cast<int>(k);
  RowReducer rr(static_cast<int>(perms.size()));
  for (const auto& g : perms) {
    SparseVector row;
    for (const auto& [p, c] : x.terms()) row[index.at(g * p)] += c;
    rr.add_row(row);
  }
  return rr.rank();
}

std::optional<Scalar> quasi_idempotent_factor(const GroupAlgebraElement& x) {
  if (x.terms().empty()) return std::nullopt;
  const GroupAlgebraElement sq = x * x;
  const auto& [p, c] = *x.terms().begin();
  const Scalar kappa = sq.coefficient(p) / c;
  if (kappa * x == sq) return kappa;
  return std::nullopt;
}

const TensorMap& PermutationAction::of(const Permutation& p) const {
  const auto it = maps_.find(p);
  if (it == maps_.end()) throw InputError("permutation action: permutation not in S_" + std::to_string(m_));
  return it->second;
}

std::vector<TensorMap> braid_generators(const TensorMap& R, int m) {
  if (R.domain_degree() != 2 || R.codomain_degree() != 2) throw InputError("R must map V(x)V to itself");
  if (m < 1) throw InputError("m must be positive");
  std::vector<TensorMap> out;
  for (int b = 0; b + 1 < m; ++b) {
    out.push_back(compose(TensorMap::from_permutation(R.dim(), Permutation::transposition(m, b, b + 1)),
                          embed_slots(R, b, b + 1, m)));
  }
  return out;
}

CheckResult check_coxeter(const std::vector<TensorMap>& gens) {
  CheckResult r("Coxeter relations");
  if (gens.empty()) return r;
  const TensorMap id = TensorMap::identity(gens.front().dim(), gens.front().domain_degree());
  for (size_t b = 0; b < gens.size(); ++b) {
    ++r.cases;
    if (compose(gens[b], gens[b]) != id) r.fail("s" + std::to_string(b + 1) + "^2 != Id");
    for (size_t c = b + 1; c < gens.size(); ++c) {
      ++r.cases;
      if (c == b + 1) {
        if (compose(gens[b], compose(gens[c], gens[b])) != compose(gens[c], compose(gens[b], gens[c])))
          r.fail("braid relation fails for s" + std::to_string(b + 1) + ", s" + std::to_string(c + 1));
      } else if (compose(gens[b], gens[c]) != compose(gens[c], gens[b])) {
        r.fail("s" + std::to_string(b + 1) + " and s" + std::to_string(c + 1) + " do not commute");
      }
    }
  }
  return r;
}

PermutationAction r_permutation_action(const TensorMap& R, int m) {
  if (m < 1 || m > 6) throw BoundsError("permutation action: m must lie in 1..6");
  if (!unitarity_check(R)) throw PreconditionError("R is not unitary: R^21 R != Id");
  const YbeReport q = qybe_residual(R);
  if (!q.is_zero) throw PreconditionError("R does not solve the QYBE: residual has " + std::to_string(q.residual.nnz()) + " nonzero entries");
  PermutationAction act;
  act.dim_ = R.dim();
  act.m_ = m;
  act.generators_ = braid_generators(R, m);
  const CheckResult cox = check_coxeter(act.generators_);
  if (!cox.passed) throw PreconditionError("generators fail the Coxeter relations: " + cox.witness);
  // sigma = sigma' s_k for a descent k of sigma, with fewer inversions in sigma'
  std::function<const TensorMap&(const Permutation&)> build = [&](const Permutation& p) -> const TensorMap& {
    if (const auto it = act.maps_.find(p); it != act.maps_.end()) return it->second;
    if (p.is_identity()) return act.maps_.emplace(p, TensorMap::identity(R.dim(), m)).first->second;
    int k = 0;
    while (p(k) < p(k + 1)) ++k;
    const Permutation s = Permutation::transposition(m, k, k + 1);
    const TensorMap f = compose(build(p * s), act.generators_[static_cast<size_t>(k)]);
    return act.maps_.emplace(p, f).first->second;
  };
  for (const auto& p : all_permutations(m)) build(p);
  return act;
}

TensorMap evaluate_in_action(const GroupAlgebraElement& x, const PermutationAction& action) {
  if (x.degree() != action.degree()) throw InputError("group algebra element and action have different m");
  TensorMap f(action.dim(), action.degree(), action.degree());
  for (const auto& [p, c] : x.terms()) f += c * action.of(p);
  return f;
}

namespace {

int word_index(const Word& w, int dim) {
  int idx = 0;
  for (int x : w) idx = idx * dim + x;
  return idx;
}

Word index_word(int idx, int dim, int len) {
  Word w(static_cast<size_t>(len));
  for (int k = len - 1; k >= 0; --k) {
    w[static_cast<size_t>(k)] = idx % dim;
    idx /= dim;
  }
  return w;
}

int checked_size(int dim, int m) {
  long long n = 1;
  for (int k = 0; k < m; ++k) n *= dim;
  if (n * n > 4096) throw BoundsError("End(V^(x)m) has more than 4096 entries");
  return static_cast<int>(n);
}

SparseVector flatten(const TensorMap& f) {
  const int n = checked_size(f.dim(), f.domain_degree());
  SparseVector v;
  for (const auto& [out, in, c] : f.entries()) v[word_index(out, f.dim()) * n + word_index(in, f.dim())] = c;
  return v;
}

TensorMap unflatten(const SparseVector& v, int dim, int m) {
  const int n = checked_size(dim, m);
  TensorMap f(dim, m, m);
  for (const auto& [k, c] : v) f.add_entry(index_word(k / n, dim, m), index_word(k % n, dim, m), c);
  return f;
}

}  // namespace

namespace {

std::vector<SparseVector> column_vectors(const TensorMap& f) {
  std::vector<SparseVector> cols;
  for (const auto& [in, col] : f.columns()) {
    SparseVector v;
    for (const auto& [w, c] : col.terms()) v[word_index(w, f.dim())] = c;
    cols.push_back(v);
  }
  return cols;
}

int codomain_size(const TensorMap& f) {
  int n = 1;
  for (int k = 0; k < f.codomain_degree(); ++k) n *= f.dim();
  return n;
}

}  // namespace

int image_dimension(const TensorMap& f) { return rank_of(column_vectors(f), codomain_size(f)); }

std::vector<TensorMap> commutant(const std::vector<TensorMap>& gens, int dim, int m) {
  const int n = checked_size(dim, m);
  std::vector<SparseVector> rows;
  for (const auto& g : gens) {
    if (g.dim() != dim || g.domain_degree() != m || g.codomain_degree() != m)
      throw InputError("commutant: generators must be endomorphisms of V^(x)m");
    std::vector<std::vector<std::pair<int, Scalar>>> by_row(static_cast<size_t>(n));
    std::vector<std::vector<std::pair<int, Scalar>>> by_col(static_cast<size_t>(n));
    for (const auto& [out, in, c] : g.entries()) {
      by_row[static_cast<size_t>(word_index(out, dim))].push_back({word_index(in, dim), c});
      by_col[static_cast<size_t>(word_index(in, dim))].push_back({word_index(out, dim), c});
    }
    // (X g - g X)_{o,i} = sum_k X_{o,k} g_{k,i} - g_{o,k} X_{k,i}
    for (int o = 0; o < n; ++o) {
      for (int i = 0; i < n; ++i) {
        SparseVector row;
        for (const auto& [k, c] : by_col[static_cast<size_t>(i)]) row[o * n + k] += c;
        for (const auto& [k, c] : by_row[static_cast<size_t>(o)]) row[k * n + i] -= c;
        for (auto it = row.begin(); it != row.end();) it = is_zero(it->second) ? row.erase(it) : std::next(it);
        if (!row.empty()) rows.push_back(row);
      }
    }
  }
  std::vector<TensorMap> out;
  for (const auto& v : nullspace(rows, n * n)) out.push_back(unflatten(v, dim, m));
  return out;
}

int span_dimension(const std::vector<TensorMap>& maps) {
  if (maps.empty()) return 0;
  const int n = checked_size(maps.front().dim(), maps.front().domain_degree());
  std::vector<SparseVector> rows;
  for (const auto& f : maps) rows.push_back(flatten(f));
  return rank_of(rows, n * n);
}

bool same_span(const std::vector<TensorMap>& a, const std::vector<TensorMap>& b) {
  std::vector<TensorMap> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const int d = span_dimension(both);
  return span_dimension(a) == d && span_dimension(b) == d;
}

int hr_dimension_from_relations(const TensorMap& R, int m) {
  if (R.domain_degree() != 2 || R.codomain_degree() != 2) throw InputError("R must map V(x)V to itself");
  const int n = R.dim();
  const int letters = n * n;  // L_ij at i*n + j
  long long cols = 1;
  for (int k = 0; k < m; ++k) cols *= letters;
  if (m < 1 || cols > 4096) throw BoundsError("H_R[m]: more than 4096 words of length m");
  if (m == 1) return letters;
  const auto L = [&](int i, int j) { return i * n + j; };
  // relation (a,b),(j,l): sum_{c,d} R_{(a,b),(c,d)} L_cj L_dl - sum_{c,d} R_{(c,d),(j,l)} L_bd L_ac
  std::vector<std::map<std::pair<int, int>, Scalar>> relations;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          std::map<std::pair<int, int>, Scalar> rel;
          for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d) {
              rel[{L(c, j), L(d, l)}] += R.entry({a, b}, {c, d});
              rel[{L(b, d), L(a, c)}] -= R.entry({c, d}, {j, l});
            }
          relations.push_back(rel);
        }
  RowReducer rr(static_cast<int>(cols));
  const int side = static_cast<int>(cols / (letters * letters));
  for (int pos = 0; pos + 1 < m; ++pos) {
    for (int ctx = 0; ctx < side; ++ctx) {
      const Word around = index_word(ctx, letters, m - 2);
      for (const auto& rel : relations) {
        SparseVector row;
        for (const auto& [xy, c] : rel) {
          if (is_zero(c)) continue;
          Word w(around.begin(), around.begin() + pos);
          w.push_back(xy.first);
          w.push_back(xy.second);
          w.insert(w.end(), around.begin() + pos, around.end());
          row[word_index(w, letters)] += c;
        }
        for (auto it = row.begin(); it != row.end();) it = is_zero(it->second) ? row.erase(it) : std::next(it);
        if (!row.empty()) rr.add_row(row);
      }
    }
  }
  return static_cast<int>(cols) - rr.rank();
}

HrDimension hr_graded_dimension(const TensorMap& R, int m) {
  HrDimension d;
  d.from_relations = hr_dimension_from_relations(R, m);
  const PermutationAction act = r_permutation_action(R, m);
  d.from_commutant = static_cast<int>(commutant(act.generators(), R.dim(), m).size());
  return d;
}

bool DecompositionReport::total_matches() const {
  long long n = 1;
  for (int k = 0; k < m; ++k) n *= dim;
  return total == n;
}

DecompositionReport schur_weyl_decompose(const TensorMap& R, int m) {
  checked_size(R.dim(), m);
  const PermutationAction act = r_permutation_action(R, m);
  DecompositionReport rep;
  rep.dim = R.dim();
  rep.m = m;
  std::vector<TensorMap> sr;
  for (const auto& [p, f] : act.maps()) sr.push_back(f);
  rep.sr_span_dimension = span_dimension(sr);
  const std::vector<TensorMap> hr = commutant(act.generators(), R.dim(), m);
  rep.sr_commutant_dimension = static_cast<int>(hr.size());
  const std::vector<TensorMap> back = commutant(hr, R.dim(), m);
  rep.hr_commutant_dimension = static_cast<int>(back.size());
  rep.double_commutant = same_span(back, sr);
  for (const auto& lam : partitions(m)) {
    PartitionRow row;
    row.lambda = lam;
    row.hook_dimension = hook_length_dimension(lam);
    const GroupAlgebraElement c = young_symmetrizer(lam);
    row.regular_dimension = left_ideal_dimension(c);
    const TensorMap cr = evaluate_in_action(c, act);
    row.comodule_dimension = image_dimension(cr);
    row.isotypic_dimension = row.hook_dimension * row.comodule_dimension;
    // image(X c) lies in image(c) iff adding its columns keeps the rank
    row.invariant = true;
    const std::vector<SparseVector> base = column_vectors(cr);
    for (const auto& x : hr) {
      std::vector<SparseVector> cols = base;
      for (auto& v : column_vectors(compose(x, cr))) cols.push_back(std::move(v));
      if (rank_of(cols, codomain_size(cr)) != row.comodule_dimension) {
        row.invariant = false;
        break;
      }
    }
    rep.total += row.isotypic_dimension;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace ybp
