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

#include "ybp/tensor.hpp"

#include "ybp/error.hpp"

namespace ybp {

std::string format_word(const Word& w) {
  std::string s = "[";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s + "]";
}

std::vector<Word> all_words(int dim, int length) {
  if (dim < 0 || length < 0) throw InputError("all_words: negative argument");
  std::vector<Word> out;
  Word w(static_cast<size_t>(length), 0);
  if (dim == 0 && length > 0) return out;
  while (true) {
    out.push_back(w);
    int k = length - 1;
    while (k >= 0 && w[k] == dim - 1) w[k--] = 0;
    if (k < 0) break;
    ++w[k];
  }
  return out;
}

Word permute_word(const Permutation& p, const Word& w) {
  if (static_cast<int>(w.size()) != p.size()) {
    throw InputError("permutation of S_" + std::to_string(p.size()) + " applied to a word of degree " +
                     std::to_string(w.size()));
  }
  Word out(w.size());
  for (size_t j = 0; j < w.size(); ++j) out[static_cast<size_t>(p(static_cast<int>(j)))] = w[j];
  return out;
}

GradedTensor GradedTensor::basis(Word w, Scalar c) {
  GradedTensor t;
  t.add_term(w, c);
  return t;
}

void GradedTensor::add_term(const Word& w, const Scalar& c) {
  if (ybp::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (ybp::is_zero(it->second)) terms_.erase(it);
  }
}

Scalar GradedTensor::coefficient(const Word& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::optional<int> GradedTensor::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const auto d = terms_.begin()->first.size();
  for (const auto& [w, c] : terms_) {
    if (w.size() != d) return std::nullopt;
  }
  return static_cast<int>(d);
}

GradedTensor& GradedTensor::operator+=(const GradedTensor& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

GradedTensor& GradedTensor::operator-=(const GradedTensor& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

GradedTensor& GradedTensor::operator*=(const Scalar& s) {
  if (ybp::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

std::string GradedTensor::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += format_scalar(c) + "*" + format_word(w);
  }
  return s;
}

GradedTensor tensor_product(const GradedTensor& a, const GradedTensor& b) {
  GradedTensor out;
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [w, cw] : b.terms()) {
      Word uw = u;
      uw.insert(uw.end(), w.begin(), w.end());
      out.add_term(uw, cu * cw);
    }
  }
  return out;
}

GradedTensor apply_permutation(const Permutation& p, const GradedTensor& t) {
  GradedTensor out;
  for (const auto& [w, c] : t.terms()) out.add_term(permute_word(p, w), c);
  return out;
}

}  // namespace ybp
