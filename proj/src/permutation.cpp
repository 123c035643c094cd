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

#include "ybp/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "ybp/error.hpp"

namespace ybp {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<size_t>(v)]) {
      throw InputError("not a permutation: " + to_string());
    }
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::from_one_line(std::span<const int> one_based) {
  std::vector<int> im;
  im.reserve(one_based.size());
  for (int v : one_based) im.push_back(v - 1);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int a, int b) {
  auto p = identity(n);
  if (a < 0 || b < 0 || a >= n || b >= n) throw InputError("transposition slot out of range");
  std::swap(p.images_[static_cast<size_t>(a)], p.images_[static_cast<size_t>(b)]);
  return p;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out;
  out.reserve(images_.size());
  for (int v : images_) out.push_back(v + 1);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (size_t j = 0; j < images_.size(); ++j) inv[static_cast<size_t>(images_[j])] = static_cast<int>(j);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

int Permutation::sign() const {
  // Parity via cycle decomposition: sign = (-1)^(n - #cycles).
  std::vector<bool> seen(images_.size(), false);
  int cycles = 0;
  for (size_t j = 0; j < images_.size(); ++j) {
    if (seen[j]) continue;
    ++cycles;
    for (size_t k = j; !seen[k]; k = static_cast<size_t>(images_[k])) seen[k] = true;
  }
  return (size() - cycles) % 2 == 0 ? 1 : -1;
}

bool Permutation::is_identity() const {
  for (size_t j = 0; j < images_.size(); ++j) {
    if (images_[j] != static_cast<int>(j)) return false;
  }
  return true;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw InputError("composing permutations of different sizes");
  Permutation r;
  r.images_.resize(q.images_.size());
  for (size_t j = 0; j < q.images_.size(); ++j) r.images_[j] = p(q.images_[j]);
  return r;
}

std::string Permutation::to_string() const {
  std::string s = "(";
  const bool spaced = size() > 9;
  for (size_t j = 0; j < images_.size(); ++j) {
    if (spaced && j > 0) s += ' ';
    s += std::to_string(images_[j] + 1);
  }
  return s + ")";
}

Permutation parse_permutation(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '(') body.erase(body.begin());
  if (!body.empty() && body.back() == ')') body.pop_back();
  std::vector<int> one;
  if (body.find(' ') != std::string::npos) {
    size_t pos = 0;
    while (pos < body.size()) {
      while (pos < body.size() && body[pos] == ' ') ++pos;
      size_t end = pos;
      while (end < body.size() && body[end] != ' ') ++end;
      if (end > pos) {
        const std::string tok = body.substr(pos, end - pos);
        for (char c : tok) {
          if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("bad permutation '" + text + "'");
        }
        one.push_back(std::stoi(tok));
      }
      pos = end;
    }
  } else {
    for (char c : body) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("bad permutation '" + text + "'");
      one.push_back(c - '0');
    }
  }
  return Permutation::from_one_line(one);
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

Permutation block_permutation_expand(const Permutation& tau, std::span<const int> sizes) {
  const int k = tau.size();
  if (static_cast<int>(sizes.size()) != k) {
    throw InputError("block permutation: " + std::to_string(sizes.size()) + " sizes for a permutation of " +
                     std::to_string(k) + " blocks");
  }
  for (int s : sizes) {
    if (s < 0) throw InputError("block permutation: negative block size");
  }
  // Block j starts at old_offset[j]; after the move, block position tau(j)
  // starts at new_offset[tau(j)].
  std::vector<int> old_offset(static_cast<size_t>(k), 0);
  for (int j = 1; j < k; ++j) old_offset[j] = old_offset[j - 1] + sizes[j - 1];
  const Permutation inv = tau.inverse();
  std::vector<int> new_offset(static_cast<size_t>(k), 0);
  for (int pos = 1; pos < k; ++pos) new_offset[pos] = new_offset[pos - 1] + sizes[inv(pos - 1)];
  const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
  std::vector<int> im(static_cast<size_t>(total));
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < sizes[j]; ++i) im[old_offset[j] + i] = new_offset[tau(j)] + i;
  }
  return Permutation(std::move(im));
}

Permutation sigma_prime(std::span<const int> target_order,
                        std::span<const std::pair<int, int>> current) {
  if (target_order.size() != current.size()) throw InputError("sigma': symbol count mismatch");
  std::vector<int> tau(current.size());
  std::vector<int> sizes(current.size());
  std::vector<bool> used(target_order.size(), false);
  for (size_t j = 0; j < current.size(); ++j) {
    const auto it = std::find(target_order.begin(), target_order.end(), current[j].first);
    if (it == target_order.end()) {
      throw InputError("sigma': symbol " + std::to_string(current[j].first) + " not in target order");
    }
    const auto pos = static_cast<size_t>(it - target_order.begin());
    if (used[pos]) throw InputError("sigma': repeated symbol " + std::to_string(current[j].first));
    used[pos] = true;
    tau[j] = static_cast<int>(pos);
    sizes[j] = current[j].second;
  }
  return block_permutation_expand(Permutation(std::move(tau)), sizes);
}

}  // namespace ybp
