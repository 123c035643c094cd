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

#include <gtest/gtest.h>

#include <functional>

#include "ybp/error.hpp"
#include "ybp/frt.hpp"
#include "ybp/ybe.hpp"

namespace ybp {
namespace {

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

long binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// Fill the cells of lam row by row with letters 0..letters-1 and count the
// fillings accepted by `ok` (called on each completed filling).
long count_fillings(const YoungDiagram& lam, int letters,
                    const std::function<bool(const std::vector<std::vector<int>>&)>& ok) {
  std::vector<std::vector<int>> t;
  for (int r : lam.rows) t.emplace_back(static_cast<size_t>(r), 0);
  std::vector<std::pair<size_t, size_t>> cells;
  for (size_t i = 0; i < t.size(); ++i)
    for (size_t j = 0; j < t[i].size(); ++j) cells.emplace_back(i, j);
  long count = 0;
  std::function<void(size_t)> go = [&](size_t k) {
    if (k == cells.size()) {
      count += ok(t);
      return;
    }
    for (int v = 0; v < letters; ++v) {
      t[cells[k].first][cells[k].second] = v;
      go(k + 1);
    }
  };
  go(0);
  return count;
}

long standard_tableaux(const YoungDiagram& lam) {
  const int m = lam.size();
  return count_fillings(lam, m, [&](const auto& t) {
    std::vector<int> seen(static_cast<size_t>(m));
    for (size_t i = 0; i < t.size(); ++i)
      for (size_t j = 0; j < t[i].size(); ++j) {
        if (seen[static_cast<size_t>(t[i][j])]++) return false;
        if (j && t[i][j - 1] >= t[i][j]) return false;
        if (i && t[i - 1][j] >= t[i][j]) return false;
      }
    return true;
  });
}

// (p|q) hook tableaux: letters below p are even, the rest odd. Rows weakly
// increase with no repeated odd letter, columns weakly increase with no
// repeated even letter. q = 0 gives semistandard tableaux.
long hook_tableaux(const YoungDiagram& lam, int p, int q) {
  return count_fillings(lam, p + q, [&](const auto& t) {
    for (size_t i = 0; i < t.size(); ++i)
      for (size_t j = 0; j < t[i].size(); ++j) {
        const int v = t[i][j];
        if (j) {
          const int u = t[i][j - 1];
          if (u > v || (u == v && v >= p)) return false;
        }
        if (i) {
          const int u = t[i - 1][j];
          if (u > v || (u == v && v < p)) return false;
        }
      }
    return true;
  });
}

TensorMap diag_r(int dim, const std::vector<int>& d) {
  TensorMap R(dim, 2, 2);
  size_t k = 0;
  for (const Word& w : all_words(dim, 2)) R.add_entry(w, w, d[k++]);
  return R;
}

TEST(Partitions, HookFormulaAgainstTableaux) {
  const int expected_counts[] = {1, 1, 2, 3, 5, 7};
  for (int m = 1; m <= 5; ++m) {
    const auto ps = partitions(m);
    EXPECT_EQ(static_cast<int>(ps.size()), expected_counts[m]);
    long squares = 0;
    for (const auto& lam : ps) {
      const int h = hook_length_dimension(lam);
      EXPECT_EQ(h, standard_tableaux(lam)) << lam.to_string();
      squares += h * h;
    }
    EXPECT_EQ(squares, factorial(m));
  }
  EXPECT_EQ(partitions(3).front().to_string(), "(3)");
  EXPECT_THROW(make_diagram({1, 2}), InputError);
  EXPECT_THROW(make_diagram({2, 0}), InputError);
}

TEST(YoungSymmetrizer, QuasiIdempotent) {
  for (int m = 1; m <= 4; ++m) {
    for (const auto& lam : partitions(m)) {
      const GroupAlgebraElement c = young_symmetrizer(lam);
      const int h = hook_length_dimension(lam);
      const auto k = quasi_idempotent_factor(c);
      ASSERT_TRUE(k.has_value());
      EXPECT_EQ(*k, Scalar(factorial(m)) / h);
      EXPECT_EQ(c * c, *k * c);
      EXPECT_EQ(left_ideal_dimension(c), h);
    }
  }
}

TEST(Action, IdentityRGivesFlips) {
  const TensorMap id = TensorMap::identity(2, 2);
  const PermutationAction a = r_permutation_action(id, 3);
  for (const auto& [p, f] : a.maps()) EXPECT_EQ(f, TensorMap::from_permutation(2, p));
  // symmetrizer and antisymmetrizer on V (x) V
  const PermutationAction b = r_permutation_action(id, 2);
  EXPECT_EQ(image_dimension(evaluate_in_action(young_symmetrizer(make_diagram({2})), b)), 3);
  EXPECT_EQ(image_dimension(evaluate_in_action(young_symmetrizer(make_diagram({1, 1})), b)), 1);
  EXPECT_EQ(static_cast<int>(commutant(b.generators(), 2, 2).size()), 10);
}

TEST(Action, IsHomomorphism) {
  const TensorMap R = diag_r(2, {1, 1, 1, -1});
  const PermutationAction a = r_permutation_action(R, 3);
  for (const auto& [p, f] : a.maps())
    for (const auto& [q, g] : a.maps()) EXPECT_EQ(a.of(p * q), compose(f, g));
}

TEST(Action, Coxeter) {
  EXPECT_TRUE(check_coxeter(braid_generators(diag_r(2, {1, -1, -1, 1}), 4)).passed);
  EXPECT_FALSE(check_coxeter(braid_generators(diag_r(2, {1, 2, 1, 1}), 3)).passed);
  TensorMap twisted = diag_r(2, {1, 0, 0, 1});
  twisted.add_entry({0, 1}, {0, 1}, 2);
  twisted.add_entry({1, 0}, {1, 0}, Scalar(1, 2));
  EXPECT_TRUE(unitarity_check(twisted));
  EXPECT_TRUE(check_coxeter(braid_generators(twisted, 3)).passed);
  EXPECT_THROW(r_permutation_action(Scalar(2) * TensorMap::identity(2, 2), 2), PreconditionError);
}

TEST(HR, IdentityIsPolynomialRing) {
  const TensorMap id = TensorMap::identity(2, 2);
  for (int m = 1; m <= 3; ++m) {
    const HrDimension h = hr_graded_dimension(id, m);
    EXPECT_EQ(h.from_relations, binomial(4 + m - 1, m));
    EXPECT_TRUE(h.agree());
  }
  EXPECT_EQ(hr_dimension_from_relations(id, 2), 10);
}

TEST(HR, SuperDiagonalAgrees) {
  const TensorMap R = diag_r(2, {1, 1, 1, -1});
  for (int m = 1; m <= 3; ++m) EXPECT_TRUE(hr_graded_dimension(R, m).agree());
  EXPECT_EQ(hr_graded_dimension(R, 3).from_commutant, 12);
}

void expect_decomposition(const TensorMap& R, int m, int p, int q) {
  const DecompositionReport d = schur_weyl_decompose(R, m);
  int sr = 0, hr = 0;
  for (const auto& row : d.rows) {
    EXPECT_EQ(row.hook_dimension, standard_tableaux(row.lambda));
    EXPECT_EQ(row.regular_dimension, row.hook_dimension);
    EXPECT_EQ(row.comodule_dimension, hook_tableaux(row.lambda, p, q)) << row.lambda.to_string();
    EXPECT_EQ(row.isotypic_dimension, row.hook_dimension * row.comodule_dimension);
    EXPECT_TRUE(row.invariant);
    if (row.comodule_dimension > 0) sr += row.hook_dimension * row.hook_dimension;
    hr += row.comodule_dimension * row.comodule_dimension;
  }
  int total = 1;
  for (int i = 0; i < m; ++i) total *= R.dim();
  EXPECT_EQ(d.total, total);
  EXPECT_TRUE(d.total_matches());
  EXPECT_EQ(d.sr_span_dimension, sr);
  EXPECT_EQ(d.sr_commutant_dimension, hr);
  EXPECT_EQ(d.hr_commutant_dimension, sr);
  EXPECT_TRUE(d.double_commutant);
}

TEST(SchurWeyl, IdentityMatchesSemistandardCounts) {
  for (int m = 1; m <= 3; ++m) expect_decomposition(TensorMap::identity(2, 2), m, 2, 0);
  expect_decomposition(TensorMap::identity(3, 2), 2, 3, 0);
  const DecompositionReport d = schur_weyl_decompose(TensorMap::identity(2, 2), 3);
  ASSERT_EQ(d.rows.size(), 3u);
  EXPECT_EQ(d.rows[0].comodule_dimension, 4);
  EXPECT_EQ(d.rows[1].comodule_dimension, 2);
  EXPECT_EQ(d.rows[2].comodule_dimension, 0);
  EXPECT_EQ(d.sr_span_dimension, 5);
  EXPECT_EQ(d.sr_commutant_dimension, 20);
}

TEST(SchurWeyl, SuperDiagonalMatchesHookCounts) {
  for (int m = 1; m <= 3; ++m) expect_decomposition(diag_r(2, {1, 1, 1, -1}), m, 1, 1);
  // e_0 odd instead
  for (int m = 1; m <= 3; ++m) expect_decomposition(diag_r(2, {-1, 1, 1, 1}), m, 1, 1);
}

TEST(SchurWeyl, Bounds) {
  EXPECT_THROW(schur_weyl_decompose(TensorMap::identity(3, 2), 4), BoundsError);
  EXPECT_THROW(schur_weyl_decompose(TensorMap::identity(1, 2), 7), BoundsError);
}

}  // namespace
}  // namespace ybp
