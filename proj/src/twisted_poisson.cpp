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

#include "ybp/twisted_poisson.hpp"

#include <algorithm>
#include <numeric>

#include "ybp/error.hpp"
#include "ybp/ybe.hpp"

namespace ybp {

GeneratorBracket::GeneratorBracket(int dim, int smodule_degree) : dim_(dim), degree_(smodule_degree) {
  if (dim < 0) throw InputError("generator bracket: negative dimension");
  if (smodule_degree != 0 && smodule_degree != 1) {
    throw InputError("generator bracket: S-module degree must be 0 or 1, got " + std::to_string(smodule_degree));
  }
}

GeneratorBracket GeneratorBracket::from_r(const TensorMap& r) {
  if (r.domain_degree() != 2 || r.codomain_degree() != 2) throw InputError("from_r: r must be 2 -> 2");
  GeneratorBracket b(r.dim(), 1);
  for (const auto& [in, col] : r.columns()) b.set(in[0], in[1], col);
  return b;
}

void GeneratorBracket::set(int a, int b, GradedTensor value) {
  if (a < 0 || b < 0 || a >= dim_ || b >= dim_) throw InputError("generator bracket: index out of range");
  GradedTensor v;
  for (const auto& [w, c] : value.terms()) {
    for (int l : w) {
      if (l < 0 || l >= dim_) throw InputError("generator bracket: letter out of range in value");
    }
    if (degree_ == 1 && w.size() != 2) {
      throw InputError("generator bracket: for d = 1 values must lie in V(x)V, got word " + format_word(w));
    }
    Word s = w;
    if (degree_ == 0) std::sort(s.begin(), s.end());
    v.add_term(s, c);
  }
  if (v.is_zero()) {
    table_.erase({a, b});
  } else {
    table_[{a, b}] = std::move(v);
  }
}

GradedTensor GeneratorBracket::get(int a, int b) const {
  const auto it = table_.find({a, b});
  return it == table_.end() ? GradedTensor{} : it->second;
}

TensorMap GeneratorBracket::to_r() const {
  if (degree_ != 1) throw InputError("to_r: only defined for d = 1");
  TensorMap r(dim_, 2, 2);
  for (const auto& [ab, val] : table_) {
    for (const auto& [w, c] : val.terms()) r.add_entry(w, {ab.first, ab.second}, c);
  }
  return r;
}

TwistedPoisson::TwistedPoisson(GeneratorBracket b, int max_degree) : gen_(std::move(b)), max_degree_(max_degree) {
  if (max_degree < 1) throw InputError("twisted Poisson: max degree must be positive");
}

Word TwistedPoisson::normalize(Word w) const {
  if (d() == 0) std::sort(w.begin(), w.end());
  return w;
}

GradedTensor TwistedPoisson::normalize(const GradedTensor& t) const {
  if (d() == 1) return t;
  GradedTensor out;
  for (const auto& [w, c] : t.terms()) out.add_term(normalize(w), c);
  return out;
}

GradedTensor TwistedPoisson::product(const GradedTensor& x, const GradedTensor& y) const {
  return normalize(tensor_product(x, y));
}

void TwistedPoisson::check_cap(size_t total) const {
  if (static_cast<int>(total) > max_degree_) {
    throw TruncationError("bracket arguments of total degree " + std::to_string(total) +
                          " exceed the truncation degree " + std::to_string(max_degree_));
  }
}

GradedTensor TwistedPoisson::bracket(const Word& v, const Word& w) const {
  check_cap(v.size() + w.size());
  const int m = static_cast<int>(v.size());
  const int n = static_cast<int>(w.size());
  std::vector<int> target(static_cast<size_t>(m + n));
  std::iota(target.begin(), target.end(), 0);
  GradedTensor out;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const GradedTensor head = gen_.get(v[i], w[j]);
      if (head.is_zero()) continue;
      Word rest;
      std::vector<std::pair<int, int>> current{{i, d()}, {m + j, d()}};
      for (int k = 0; k < m; ++k) {
        if (k == i) continue;
        rest.push_back(v[k]);
        current.emplace_back(k, d());
      }
      for (int l = 0; l < n; ++l) {
        if (l == j) continue;
        rest.push_back(w[l]);
        current.emplace_back(m + l, d());
      }
      if (d() == 0) {
        out += product(head, GradedTensor::basis(rest));
        continue;
      }
      const Permutation sp = sigma_prime(target, current);
      for (const auto& [hw, c] : head.terms()) {
        Word full = hw;
        full.insert(full.end(), rest.begin(), rest.end());
        out.add_term(permute_word(sp, full), c);
      }
    }
  }
  return out;
}

GradedTensor TwistedPoisson::bracket(const GradedTensor& x, const GradedTensor& y) const {
  GradedTensor out;
  for (const auto& [v, a] : x.terms()) {
    for (const auto& [w, b] : y.terms()) {
      GradedTensor t = bracket(v, w);
      t *= a * b;
      out += t;
    }
  }
  return out;
}

GradedTensor TwistedPoisson::permute_blocks(const Permutation& tau, const std::vector<Word>& blocks,
                                            const GradedTensor& t) const {
  if (d() == 0) return t;
  std::vector<int> sizes;
  for (const Word& b : blocks) sizes.push_back(degree(b));
  return apply_permutation(block_permutation_expand(tau, sizes), t);
}

GradedTensor TwistedPoisson::skew_residual(const Word& v, const Word& w) const {
  return bracket(w, v) + permute_blocks(Permutation::from_one_line({2, 1}), {v, w}, bracket(v, w));
}

GradedTensor TwistedPoisson::jacobi_residual(const Word& u, const Word& v, const Word& w) const {
  const GradedTensor U = GradedTensor::basis(u), V = GradedTensor::basis(v), W = GradedTensor::basis(w);
  GradedTensor out = bracket(U, bracket(V, W));
  out += permute_blocks(Permutation::from_one_line({2, 3, 1}), {v, w, u}, bracket(V, bracket(W, U)));
  out += permute_blocks(Permutation::from_one_line({3, 1, 2}), {w, u, v}, bracket(W, bracket(U, V)));
  return out;
}

GradedTensor TwistedPoisson::leibniz_residual(const Word& u, const Word& v, const Word& w) const {
  const GradedTensor U = GradedTensor::basis(u), V = GradedTensor::basis(v), W = GradedTensor::basis(w);
  GradedTensor out = bracket(product(U, V), W);
  out -= product(U, bracket(V, W));
  out -= permute_blocks(Permutation::from_one_line({2, 1, 3}), {v, u, w}, product(V, bracket(U, W)));
  return out;
}

std::vector<Word> TwistedPoisson::monomials(int max_len) const {
  std::vector<Word> out;
  for (int len = 1; len <= max_len; ++len) {
    for (const Word& w : all_words(gen_.dim(), len)) {
      if (d() == 0 && !std::is_sorted(w.begin(), w.end())) continue;
      out.push_back(w);
    }
  }
  return out;
}

namespace {

std::string args_text(std::initializer_list<const Word*> args) {
  std::string s;
  const char* names[] = {"u", "v", "w"};
  size_t k = 0;
  for (const Word* a : args) {
    if (k) s += ' ';
    s += std::string(names[k++]) + "=" + format_word(*a);
  }
  return s;
}

}  // namespace

CheckResult TwistedPoisson::check_skew() const {
  CheckResult res("twisted skew-symmetry");
  const auto mons = monomials(max_degree_ - 1);
  for (const Word& v : mons) {
    for (const Word& w : mons) {
      if (static_cast<int>(v.size() + w.size()) > max_degree_) continue;
      ++res.cases;
      const GradedTensor r = skew_residual(v, w);
      if (!r.is_zero()) res.fail(args_text({&v, &w}) + ": " + r.to_string());
    }
  }
  return res;
}

CheckResult TwistedPoisson::check_jacobi() const {
  CheckResult res("twisted Jacobi");
  const auto mons = monomials(max_degree_ - 2);
  for (const Word& u : mons) {
    for (const Word& v : mons) {
      for (const Word& w : mons) {
        if (static_cast<int>(u.size() + v.size() + w.size()) > max_degree_) continue;
        ++res.cases;
        const GradedTensor r = jacobi_residual(u, v, w);
        if (!r.is_zero()) res.fail(args_text({&u, &v, &w}) + ": " + r.to_string());
      }
    }
  }
  return res;
}

CheckResult TwistedPoisson::check_leibniz() const {
  CheckResult res("twisted Leibniz");
  const auto mons = monomials(max_degree_ - 2);
  for (const Word& u : mons) {
    for (const Word& v : mons) {
      for (const Word& w : mons) {
        if (static_cast<int>(u.size() + v.size() + w.size()) > max_degree_) continue;
        ++res.cases;
        const GradedTensor r = leibniz_residual(u, v, w);
        if (!r.is_zero()) res.fail(args_text({&u, &v, &w}) + ": " + r.to_string());
      }
    }
  }
  return res;
}

GeneratorBracket lie_bracket(int dim, const std::map<std::pair<int, int>, GradedTensor>& table) {
  GeneratorBracket b(dim, 0);
  for (const auto& [ab, val] : table) b.set(ab.first, ab.second, val);
  return b;
}

TensorMap jacobi_map_111(const TensorMap& r) {
  const TwistedPoisson tp(GeneratorBracket::from_r(r), 3);
  TensorMap out(r.dim(), 3, 3);
  for (const Word& w : all_words(r.dim(), 3)) {
    const GradedTensor col = tp.jacobi_residual({w[0]}, {w[1]}, {w[2]});
    for (const auto& [o, c] : col.terms()) out.add_entry(o, w, c);
  }
  return out;
}

Theorem1Report theorem1_roundtrip(const TensorMap& r, int max_degree) {
  Theorem1Report rep;
  rep.skew = is_skew(r);
  rep.cybe_zero = cybe_residual(r).is_zero;
  const TwistedPoisson tp(GeneratorBracket::from_r(r), max_degree);
  rep.checks = {tp.check_skew(), tp.check_jacobi(), tp.check_leibniz()};
  const bool poisson = rep.twisted_poisson();
  rep.forward = !(rep.skew && rep.cybe_zero) || poisson;
  if (poisson) {
    const TensorMap back = tp.generators().to_r();
    rep.backward = is_skew(back) && cybe_residual(back).is_zero;
  }
  return rep;
}

}  // namespace ybp
