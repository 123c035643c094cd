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

#include "ybp/tensor_map.hpp"

#include "ybp/error.hpp"

namespace ybp {

TensorMap::TensorMap(int dim, int domain_degree, int codomain_degree)
    : dim_(dim), domain_(domain_degree), codomain_(codomain_degree) {
  if (dim < 0 || domain_degree < 0 || codomain_degree < 0) {
    throw InputError("TensorMap: negative dimension or degree");
  }
}

TensorMap TensorMap::identity(int dim, int degree) {
  TensorMap id(dim, degree, degree);
  for (const Word& w : all_words(dim, degree)) id.add_entry(w, w, 1);
  return id;
}

TensorMap TensorMap::from_permutation(int dim, const Permutation& p) {
  TensorMap m(dim, p.size(), p.size());
  for (const Word& w : all_words(dim, p.size())) m.add_entry(permute_word(p, w), w, 1);
  return m;
}

void TensorMap::check_word(const Word& w, int degree, const char* role) const {
  if (static_cast<int>(w.size()) != degree) {
    throw InputError(std::string("TensorMap: ") + role + "-word " + format_word(w) + " has degree " +
                     std::to_string(w.size()) + ", expected " + std::to_string(degree));
  }
  for (int letter : w) {
    if (letter < 0 || letter >= dim_) {
      throw InputError(std::string("TensorMap: letter ") + std::to_string(letter) + " out of range for dim " +
                       std::to_string(dim_));
    }
  }
}

void TensorMap::same_shape(const TensorMap& o, const char* op) const {
  if (dim_ != o.dim_ || domain_ != o.domain_ || codomain_ != o.codomain_) {
    throw InputError(std::string("TensorMap ") + op + ": shape mismatch");
  }
}

void TensorMap::add_entry(const Word& out, const Word& in, const Scalar& c) {
  check_word(out, codomain_, "out");
  check_word(in, domain_, "in");
  if (ybp::is_zero(c)) return;
  auto& col = cols_[in];
  col.add_term(out, c);
  if (col.is_zero()) cols_.erase(in);
}

Scalar TensorMap::entry(const Word& out, const Word& in) const {
  const auto it = cols_.find(in);
  return it == cols_.end() ? Scalar(0) : it->second.coefficient(out);
}

GradedTensor TensorMap::column(const Word& in) const {
  const auto it = cols_.find(in);
  return it == cols_.end() ? GradedTensor{} : it->second;
}

GradedTensor TensorMap::apply(const GradedTensor& t) const {
  GradedTensor out;
  for (const auto& [w, c] : t.terms()) {
    check_word(w, domain_, "argument");
    const auto it = cols_.find(w);
    if (it == cols_.end()) continue;
    for (const auto& [o, k] : it->second.terms()) out.add_term(o, c * k);
  }
  return out;
}

size_t TensorMap::nnz() const {
  size_t n = 0;
  for (const auto& [in, col] : cols_) n += col.size();
  return n;
}

std::vector<std::tuple<Word, Word, Scalar>> TensorMap::entries() const {
  std::map<std::pair<Word, Word>, Scalar> sorted;
  for (const auto& [in, col] : cols_) {
    for (const auto& [out, c] : col.terms()) sorted.emplace(std::make_pair(out, in), c);
  }
  std::vector<std::tuple<Word, Word, Scalar>> out;
  out.reserve(sorted.size());
  for (const auto& [key, c] : sorted) out.emplace_back(key.first, key.second, c);
  return out;
}

TensorMap& TensorMap::operator+=(const TensorMap& o) {
  same_shape(o, "+");
  for (const auto& [in, col] : o.cols_) {
    auto& mine = cols_[in];
    mine += col;
    if (mine.is_zero()) cols_.erase(in);
  }
  return *this;
}

TensorMap& TensorMap::operator-=(const TensorMap& o) {
  same_shape(o, "-");
  for (const auto& [in, col] : o.cols_) {
    auto& mine = cols_[in];
    mine -= col;
    if (mine.is_zero()) cols_.erase(in);
  }
  return *this;
}

TensorMap& TensorMap::operator*=(const Scalar& s) {
  if (ybp::is_zero(s)) {
    cols_.clear();
    return *this;
  }
  for (auto& [in, col] : cols_) col *= s;
  return *this;
}

TensorMap compose(const TensorMap& f, const TensorMap& g) {
  if (f.dim() != g.dim() || f.domain_degree() != g.codomain_degree()) {
    throw InputError("compose: degree mismatch (" + std::to_string(f.domain_degree()) + " vs " +
                     std::to_string(g.codomain_degree()) + ")");
  }
  TensorMap out(f.dim(), g.domain_degree(), f.codomain_degree());
  for (const auto& [in, col] : g.columns()) {
    const GradedTensor image = f.apply(col);
    for (const auto& [o, c] : image.terms()) out.add_entry(o, in, c);
  }
  return out;
}

TensorMap tensor_product(const TensorMap& f, const TensorMap& g) {
  if (f.dim() != g.dim()) throw InputError("tensor_product: dimension mismatch");
  TensorMap out(f.dim(), f.domain_degree() + g.domain_degree(), f.codomain_degree() + g.codomain_degree());
  for (const auto& [in1, col1] : f.columns()) {
    for (const auto& [in2, col2] : g.columns()) {
      Word in = in1;
      in.insert(in.end(), in2.begin(), in2.end());
      const GradedTensor image = tensor_product(col1, col2);
      for (const auto& [o, c] : image.terms()) out.add_entry(o, in, c);
    }
  }
  return out;
}

TensorMap conjugate(const Permutation& p, const TensorMap& f) {
  if (f.domain_degree() != p.size() || f.codomain_degree() != p.size()) {
    throw InputError("conjugate: permutation size does not match map degrees");
  }
  TensorMap out(f.dim(), p.size(), p.size());
  // (p f p^{-1})(p w) = p (f w)
  for (const auto& [in, col] : f.columns()) {
    const Word pin = permute_word(p, in);
    for (const auto& [o, c] : col.terms()) out.add_entry(permute_word(p, o), pin, c);
  }
  return out;
}

TensorMap embed_slots(const TensorMap& r, int first, int second, int n) {
  if (r.domain_degree() != 2 || r.codomain_degree() != 2) throw InputError("embed: r must be 2 -> 2");
  if (first == second || first < 0 || second < 0 || first >= n || second >= n) {
    throw InputError("embed: bad slots " + std::to_string(first + 1) + "," + std::to_string(second + 1) +
                     " for n = " + std::to_string(n));
  }
  TensorMap out(r.dim(), n, n);
  for (const Word& w : all_words(r.dim(), n)) {
    const auto col = r.column({w[first], w[second]});
    for (const auto& [ab, c] : col.terms()) {
      Word o = w;
      o[first] = ab[0];
      o[second] = ab[1];
      out.add_entry(o, w, c);
    }
  }
  return out;
}

TensorMap embed_components(const TensorMap& r, int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n)) {
    throw InputError("embed_components: need 1 <= i < j <= n, got i=" + std::to_string(i) +
                     " j=" + std::to_string(j) + " n=" + std::to_string(n));
  }
  return embed_slots(r, i - 1, j - 1, n);
}

TensorMap flip(const TensorMap& r) {
  return conjugate(Permutation::from_one_line({2, 1}), r);
}

}  // namespace ybp
