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

#include <algorithm>
#include <array>
#include <random>

#include "support.hpp"
#include "ybp/error.hpp"
#include "ybp/harness.hpp"
#include "ybp/ybe.hpp"

namespace ybp {
namespace {

TensorMap swap_map(int dim) { return TensorMap::from_permutation(dim, Permutation::from_one_line({2, 1})); }

TEST(Skew, Examples) {
  EXPECT_TRUE(is_skew(TensorMap(2, 2, 2)));
  EXPECT_FALSE(is_skew(TensorMap::identity(2, 2)));
  EXPECT_FALSE(is_skew(TensorMap::identity(1, 2)));
  TensorMap r(2, 2, 2);
  r.add_entry({0, 1}, {1, 0}, 1);
  r.add_entry({1, 0}, {0, 1}, -1);
  EXPECT_TRUE(is_skew(r));
  EXPECT_EQ(r + flip(r), TensorMap(2, 2, 2));
}

TEST(Cybe, MatchesDenseOracle) {
  std::mt19937_64 rng(21);
  for (int dim = 1; dim <= 3; ++dim) {
    for (int trial = 0; trial < 15; ++trial) {
      const TensorMap r = test::random_map(rng, dim, 2, 2, 5);
      EXPECT_EQ(test::to_dense(cybe_residual(r).residual), test::dense_cybe(r));
      EXPECT_EQ(test::to_dense(aybe_residual(r).residual), test::dense_aybe(r));
    }
  }
}

TEST(Cybe, SmallCases) {
  EXPECT_TRUE(cybe_residual(TensorMap(2, 2, 2)).is_zero);
  TensorMap c(1, 2, 2);
  c.add_entry({0, 0}, {0, 0}, 5);
  EXPECT_TRUE(cybe_residual(c).is_zero);
  const YbeReport a = aybe_residual(c);
  EXPECT_EQ(a.residual.entry({0, 0, 0}, {0, 0, 0}), Scalar(25));
  ASSERT_TRUE(a.witness.has_value());
  EXPECT_EQ(a.witness->coefficient, Scalar(25));
  EXPECT_TRUE(aybe_residual(TensorMap(2, 2, 2)).is_zero);
}

TEST(Cybe, QuadraticInR) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    const TensorMap r = test::random_map(rng, 2, 2, 2, 5);
    const Scalar l(-3, 2);
    EXPECT_EQ(cybe_residual(l * r).residual, (l * l) * cybe_residual(r).residual);
  }
}

TEST(Cybe, WitnessIsLexicographicallyFirst) {
  std::mt19937_64 rng(23);
  const TensorMap r = test::random_skew(rng, 2, 4);
  const YbeReport y = cybe_residual(r);
  if (!y.is_zero) {
    const auto e = y.residual.entries();
    EXPECT_EQ(y.witness->out, std::get<0>(e.front()));
    EXPECT_EQ(y.witness->in, std::get<1>(e.front()));
  }
}

TEST(Qybe, Examples) {
  EXPECT_TRUE(qybe_residual(TensorMap::identity(2, 2)).is_zero);
  EXPECT_TRUE(unitarity_check(TensorMap::identity(2, 2)));
  EXPECT_TRUE(qybe_residual(swap_map(2)).is_zero);
  EXPECT_TRUE(unitarity_check(swap_map(2)));
  const TensorMap two = Scalar(2) * TensorMap::identity(2, 2);
  EXPECT_TRUE(qybe_residual(two).is_zero);
  EXPECT_FALSE(unitarity_check(two));
}

TEST(Cae, HoldsForRandomSkew) {
  std::mt19937_64 rng(24);
  EXPECT_TRUE(cae_identity_check(TensorMap(2, 2, 2)));
  for (int dim = 1; dim <= 3; ++dim) {
    for (int trial = 0; trial < 40; ++trial) {
      const TensorMap r = test::random_skew(rng, dim, 5);
      ASSERT_TRUE(is_skew(r));
      EXPECT_TRUE(cae_identity_check(r));
      // and against the dense oracle, with (132) spelled out by hand
      const test::Dense aybe = test::dense_aybe(r);
      const TensorMap s = TensorMap::from_permutation(dim, Permutation::from_one_line({1, 3, 2}));
      const test::Dense conj = test::mul(test::mul(test::to_dense(s), aybe), test::to_dense(s));
      EXPECT_EQ(test::dense_cybe(r), test::add(aybe, conj, -1));
    }
  }
}

TEST(Cae, RejectsNonSkew) { EXPECT_THROW(cae_identity_check(TensorMap::identity(2, 2)), PreconditionError); }

TEST(Cae, AybeSolutionsSolveCybe) {
  std::mt19937_64 rng(25);
  for (int dim = 1; dim <= 3; ++dim) {
    for (int trial = 0; trial < 60; ++trial) {
      const TensorMap r = test::random_skew(rng, dim, 2);
      if (aybe_residual(r).is_zero) {
        EXPECT_TRUE(cybe_residual(r).is_zero);
      }
    }
  }
}

// Independent brute force: all skew r at dim 2 with entries in {-1, 0, 1},
// enumerated by a different route (free entries chosen on the (out, in)
// pairs below their swap image) and filtered with the dense residuals.
std::pair<int, int> dense_fixture_counts() {
  std::vector<std::array<int, 4>> free;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          const std::array<int, 4> self{a, b, c, d}, mate{b, a, d, c};
          if (self < mate) free.push_back(self);
        }
  int cybe = 0, aybe = 0;
  const int n = static_cast<int>(free.size());
  int total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    TensorMap r(2, 2, 2);
    int x = code;
    for (int i = 0; i < n; ++i, x /= 3) {
      const int v = x % 3 - 1;
      if (v == 0) continue;
      const auto& e = free[static_cast<size_t>(i)];
      r.add_entry({e[0], e[1]}, {e[2], e[3]}, v);
      r.add_entry({e[1], e[0]}, {e[3], e[2]}, -v);
    }
    cybe += test::dense_zero(test::dense_cybe(r));
    aybe += test::dense_zero(test::dense_aybe(r));
  }
  return {cybe, aybe};
}

TEST(FixtureSearch, AgreesWithIndependentEnumeration) {
  const std::vector<Scalar> vals{-1, 0, 1};
  const auto cybe = fixture_search(FixtureKind::kSkewCybe, 2, vals);
  const auto aybe = fixture_search(FixtureKind::kSkewAybe, 2, vals);
  const auto [nc, na] = dense_fixture_counts();
  EXPECT_EQ(static_cast<int>(cybe.size()), nc);
  EXPECT_EQ(static_cast<int>(aybe.size()), na);
  EXPECT_EQ(fixture_search(FixtureKind::kSkew, 2, vals).size(), 729u);
  bool has_zero = false;
  for (const auto& r : cybe) has_zero |= r.is_zero();
  EXPECT_TRUE(has_zero);
  for (const auto& r : aybe) EXPECT_NE(std::find(cybe.begin(), cybe.end(), r), cybe.end());
}

}  // namespace
}  // namespace ybp
