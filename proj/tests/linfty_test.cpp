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

#include <random>

#include "ybp/error.hpp"
#include "ybp/linfty.hpp"

namespace ybp {
namespace {

// a_1 ... a_m reordered as a_s(1) ... a_s(m): each pair p < q that ends up
// with a_q first contributes sizes[p] * sizes[q].
int inversion_block_sign(const std::vector<int>& sizes, const Permutation& s) {
  std::vector<int> pos(sizes.size());
  for (int k = 0; k < s.size(); ++k) pos[static_cast<size_t>(s(k))] = k;
  int e = 0;
  for (size_t p = 0; p < sizes.size(); ++p)
    for (size_t q = p + 1; q < sizes.size(); ++q)
      if (pos[p] > pos[q]) e += sizes[p] * sizes[q];
  return e % 2 ? -1 : 1;
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::vector<int> random_degrees(std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<int> d(-2, 3);
  std::vector<int> out;
  for (int i = 0; i < m; ++i) out.push_back(d(rng));
  return out;
}

// sl2 in degree 0 (e, f, h) as a family with only the binary bracket.
MultiBracketFamily sl2_family(bool break_jacobi) {
  MultiBracketFamily f(GradedBasis{{0, 0, 0}, {"e", "f", "h"}});
  const SkewSign s = default_convention().skew;
  f.set_skew({0, 1}, GradedTensor::basis({2}), s);
  f.set_skew({2, 0}, GradedTensor::basis({0}, 2), s);
  f.set_skew({2, 1}, GradedTensor::basis({1}, break_jacobi ? -1 : -2), s);
  return f;
}

TEST(Signs, SignOddAgainstInversions) {
  std::mt19937_64 rng(61);
  for (int m = 1; m <= 4; ++m) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto d = random_degrees(rng, m);
      std::vector<int> shifted, plain;
      for (int x : d) {
        shifted.push_back(x + 1);
        plain.push_back(x);
      }
      for (const auto& s : all_permutations(m)) {
        EXPECT_EQ(sign_odd(d, s), inversion_block_sign(shifted, s));
        EXPECT_EQ(koszul_sign(d, s), inversion_block_sign(plain, s));
        std::vector<int> nonneg;
        for (int x : shifted) nonneg.push_back(((x % 2) + 2) % 2);
        EXPECT_EQ(sign_odd(d, s), block_permutation_expand(s.inverse(), nonneg).sign());
      }
    }
  }
}

TEST(Signs, SpecialDegrees) {
  for (int m = 1; m <= 4; ++m) {
    const std::vector<int> odd(static_cast<size_t>(m), 1), even(static_cast<size_t>(m), 0);
    for (const auto& s : all_permutations(m)) {
      EXPECT_EQ(sign_odd(odd, s), 1);
      EXPECT_EQ(sign_odd(even, s), s.sign());
      EXPECT_EQ(koszul_sign(even, s), 1);
      EXPECT_EQ(skew_sign(SkewSign::kKoszul, even, s), s.sign());
    }
  }
  EXPECT_THROW(sign_odd(std::vector<int>{0, 1}, Permutation::identity(3)), InputError);
}

TEST(Signs, Cocycle) {
  std::mt19937_64 rng(62);
  for (int m = 1; m <= 4; ++m) {
    const auto d = random_degrees(rng, m);
    for (const auto& s : all_permutations(m)) {
      // degrees of a_s(1) ... a_s(m)
      std::vector<int> moved(d.size());
      for (int k = 0; k < m; ++k) moved[static_cast<size_t>(k)] = d[static_cast<size_t>(s(k))];
      for (const auto& t : all_permutations(m)) {
        EXPECT_EQ(sign_odd(d, s * t), sign_odd(d, s) * sign_odd(moved, t));
        EXPECT_EQ(koszul_sign(d, s * t), koszul_sign(d, s) * koszul_sign(moved, t));
      }
    }
  }
}

TEST(Shuffles, CountAndShape) {
  for (int i = 0; i <= 4; ++i) {
    for (int j = 0; i + j <= 5; ++j) {
      const auto sh = shuffles(i, j);
      EXPECT_EQ(static_cast<long>(sh.size()), factorial(i + j) / (factorial(i) * factorial(j)));
      for (const auto& p : sh) {
        for (int k = 0; k + 1 < i; ++k) EXPECT_LT(p(k), p(k + 1));
        for (int k = i; k + 1 < i + j; ++k) EXPECT_LT(p(k), p(k + 1));
      }
    }
  }
}

TEST(Conventions, OnlyKoszulOperatorShufflesCancel) {
  const auto all = all_conventions();
  EXPECT_EQ(all.size(), 36u);
  EXPECT_EQ(all.front(), LinftyConvention{});
  EXPECT_FALSE(cancellation_holds(all.front(), 3));
  int passing = 0;
  for (const auto& c : all) {
    const bool expected =
        c.skew == SkewSign::kKoszul && c.leibniz == LeibnizSign::kOperator && c.shuffles && c.jacobi != JacobiSign::kPlus;
    EXPECT_EQ(cancellation_holds(c, 3), expected) << c.describe();
    passing += expected;
  }
  EXPECT_EQ(passing, 2);
  EXPECT_TRUE(cancellation_holds(default_convention(), 4));
}

TEST(Conventions, CancellationReportCounts) {
  const CancellationReport r = theorem3_cancellation({0, 1, 1}, default_convention());
  EXPECT_EQ(r.m, 2);
  EXPECT_GT(r.product_terms, 0u);
  EXPECT_TRUE(r.cancels());
  const CancellationReport bad = theorem3_cancellation({0, 1, 1}, all_conventions().front());
  EXPECT_FALSE(bad.cancels());
}

TEST(Family, DegreeRule) {
  MultiBracketFamily f(GradedBasis{{0, 1}, {"x", "y"}});
  EXPECT_NO_THROW(f.set({0}, GradedTensor::basis({1})));
  EXPECT_THROW(f.set({1}, GradedTensor::basis({0})), InputError);
  EXPECT_THROW(f.set({0, 0}, GradedTensor::basis({1})), InputError);
  EXPECT_TRUE(f.check_degrees().passed);
}

TEST(Family, SupersymmetricNormalForm) {
  const GradedBasis b{{0, 1, 1}, {"x", "y", "z"}};
  EXPECT_EQ(supersym_normalize(b, GradedTensor::basis({2, 1})), GradedTensor::basis({1, 2}, -1));
  EXPECT_EQ(supersym_normalize(b, GradedTensor::basis({1, 0})), GradedTensor::basis({0, 1}));
  EXPECT_TRUE(supersym_normalize(b, GradedTensor::basis({1, 1})).is_zero());
  EXPECT_EQ(supersym_normalize(b, GradedTensor::basis({0, 0})), GradedTensor::basis({0, 0}));
}

TEST(Strict, DifferentialAndLieAlgebra) {
  const LinftyConvention c = default_convention();
  MultiBracketFamily d(GradedBasis{{0, 1}, {"x", "y"}});
  d.set({0}, GradedTensor::basis({1}));
  EXPECT_TRUE(check_linfty_axioms(d, 3, c).passed);
  EXPECT_TRUE(check_linfty_axioms(sl2_family(false), 3, c).passed);
  EXPECT_TRUE(theorem3_check(sl2_family(false), 3, c).passed);
  const CheckResult broken = check_linfty_axioms(sl2_family(true), 3, c);
  EXPECT_FALSE(broken.passed);
  EXPECT_FALSE(broken.witness.empty());
}

TEST(Strict, LeibnizExtensionOnProducts) {
  const LinftyConvention c = default_convention();
  const MultiBracketFamily f = sl2_family(false);
  // {ef, h} = {e, h} f + e {f, h} = -2ef + 2ef
  const SuperElement ef = GradedTensor::basis({0, 1});
  EXPECT_TRUE(extended_bracket(f, {ef, GradedTensor::basis({2})}, c).is_zero());
  // {e, ef} = e h
  EXPECT_EQ(extended_bracket(f, {GradedTensor::basis({0}), ef}, c), GradedTensor::basis({0, 2}));
}

TEST(Homotopy, FixtureIsGenuinelyHomotopy) {
  const LinftyConvention c = default_convention();
  const MultiBracketFamily f = homotopy_fixture(c);
  EXPECT_TRUE(f.check_degrees().passed);
  EXPECT_TRUE(f.check_skew(c.skew).passed);
  EXPECT_TRUE(check_linfty_axioms(f, 4, c).passed);
  EXPECT_TRUE(theorem3_check(f, 3, c).passed);
  EXPECT_EQ(f.max_arity(), 3);
  MultiBracketFamily strict(f.basis());
  for (const auto& [args, v] : f.entries())
    if (args.size() < 3) strict.set(args, v);
  EXPECT_FALSE(check_linfty_axioms(strict, 3, c).passed);
}

TEST(Homotopy, FullSumIsWeightedShuffleSum) {
  LinftyConvention shuf = default_convention();
  LinftyConvention full = shuf;
  full.shuffles = false;
  const MultiBracketFamily f = homotopy_fixture(shuf);
  const int n = f.basis().size();
  for (int m = 1; m <= 3; ++m) {
    for (const Word& w : all_words(n, m)) {
      std::vector<SuperElement> args;
      for (int a : w) args.push_back(GradedTensor::basis({a}));
      for (int i = 1; i <= m; ++i) {
        const int j = m + 1 - i;
        EXPECT_EQ(linfty_summand(f, args, i, full),
                  Scalar(factorial(i) * factorial(j - 1)) * linfty_summand(f, args, i, shuf));
      }
    }
  }
}

}  // namespace
}  // namespace ybp
