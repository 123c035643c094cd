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

#pragma once

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ybp {

/// Element of S_n stored by its images, 0-based: slot j is sent to (*this)(j).
///
/// All textual forms use one-line notation with 1-based values, so "(231)"
/// sends 1 -> 2, 2 -> 3, 3 -> 1. Cycle notation is never used.
///
/// Acting on a pure tensor, the letter in slot j moves to slot p(j). With this
/// convention, apply(p * q) = apply(p) after apply(q).
class Permutation {
 public:
  Permutation() = default;

  /// Throws InputError unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// From 1-based one-line notation, e.g. {2, 3, 1}.
  static Permutation from_one_line(std::span<const int> one_based);
  static Permutation from_one_line(std::initializer_list<int> one_based) {
    return from_one_line(std::span<const int>(one_based.begin(), one_based.size()));
  }
  /// Transposition of the 0-based slots a and b in S_n.
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int j) const { return images_[static_cast<size_t>(j)]; }
  const std::vector<int>& images() const { return images_; }
  std::vector<int> one_line() const;

  Permutation inverse() const;
  int sign() const;
  bool is_identity() const;

  /// Composition: (p * q)(j) = p(q(j)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

  /// "(231)" for n <= 9, "(10 2 ...)" style with spaces otherwise.
  std::string to_string() const;

 private:
  std::vector<int> images_;
};

/// Parses "(231)", "231", or "(10 2 1 ...)" one-line text.
Permutation parse_permutation(const std::string& text);

/// All of S_n in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

/// tau^{sizes}: the permutation of sum(sizes) slots moving the j-th
/// contiguous block (internal order preserved) to block position tau(j).
Permutation block_permutation_expand(const Permutation& tau, std::span<const int> sizes);

/// sigma' realigning an expression whose symbol blocks currently appear as
/// `current` = [(symbol id, degree), ...] into the order `target_order`.
Permutation sigma_prime(std::span<const int> target_order,
                        std::span<const std::pair<int, int>> current);

}  // namespace ybp
