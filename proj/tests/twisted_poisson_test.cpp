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

#include "support.hpp"
#include "ybp/error.hpp"
#include "ybp/harness.hpp"
#include "ybp/twisted_poisson.hpp"
#include "ybp/ybe.hpp"

namespace ybp {
namespace {

const std::vector<Scalar> kSmall{-1, 0, 1};

// sl2 with e, f, h = 0, 1, 2
GeneratorBracket sl2() {
  std::map<std::pair<int, int>, GradedTensor> t;
  auto put = [&](int a, int b, int k, int c) {
    t[{a, b}] = GradedTensor::basis({k}, c);
    t[{b, a}] = GradedTensor::basis({k}, -c);
  };
  put(0, 1, 2, 1);
  put(2, 0, 0, 2);
  put(2, 1, 1, -2);
  return lie_bracket(3, t);
}

TEST(Generators, RoundTripThroughR) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const TensorMap r = test::random_map(rng, 2, 2, 2, 5);
    const GeneratorBracket b = GeneratorBracket::from_r(r);
    EXPECT_EQ(b.to_r(), r);
    for (const Word& w : all_words(2, 2)) EXPECT_EQ(b.get(w[0], w[1]), r.column(w));
  }
}

TEST(Sl2, LeibnizByHand) {
  const TwistedPoisson p(sl2(), 3);
  EXPECT_TRUE(p.bracket(Word{0, 1}, Word{2}).is_zero());
  // {e, ef} = e h
  EXPECT_EQ(p.bracket(Word{0}, Word{0, 1}), GradedTensor::basis({0, 2}));
  // {h, ef} = 2ef - 2ef
  EXPECT_TRUE(p.bracket(Word{2}, Word{0, 1}).is_zero());
  // {f, ee} = -2 e h
  EXPECT_EQ(p.bracket(Word{1}, Word{0, 0}), GradedTensor::basis({0, 2}, -2));
  EXPECT_EQ(p.normalize(Word{2, 0, 1}), (Word{0, 1, 2}));
  EXPECT_TRUE(p.check_skew().passed);
  EXPECT_TRUE(p.check_jacobi().passed);
  EXPECT_TRUE(p.check_leibniz().passed);
}

TEST(Sl2, BrokenJacobiIsCaught) {
  GeneratorBracket b = sl2();
  b.set(0, 1, GradedTensor::basis({2}, 2));
  b.set(1, 0, GradedTensor::basis({2}, -2));
  b.set(2, 0, GradedTensor::basis({0}, 1));
  b.set(0, 2, GradedTensor::basis({0}, -1));
  const TwistedPoisson p(b, 3);
  EXPECT_TRUE(p.check_skew().passed);
  const CheckResult j = p.check_jacobi();
  EXPECT_FALSE(j.passed);
  EXPECT_FALSE(j.witness.empty());
}

TEST(Truncation, RaisesAboveCap) {
  const TwistedPoisson p(sl2(), 2);
  EXPECT_THROW(p.bracket(Word{0, 1}, Word{2}), TruncationError);
}

TEST(JacobiMap, EqualsCybeForSkew) {
  std::mt19937_64 rng(32);
  for (int dim = 1; dim <= 3; ++dim) {
    for (int trial = 0; trial < 20; ++trial) {
      const TensorMap r = test::random_skew(rng, dim, 4);
      EXPECT_EQ(test::to_dense(jacobi_map_111(r)), test::dense_cybe(r));
    }
  }
}

TEST(JacobiMap, VanishesExactlyOnFixtures) {
  for (const TensorMap& r : fixture_search(FixtureKind::kSkew, 2, kSmall)) {
    EXPECT_EQ(jacobi_map_111(r).is_zero(), test::dense_zero(test::dense_cybe(r)));
  }
}

TEST(Theorem1, SkewCybeSolutionsGiveTwistedPoisson) {
  for (const TensorMap& r : fixture_search(FixtureKind::kSkewCybe, 2, kSmall)) {
    const Theorem1Report t = theorem1_roundtrip(r, 3);
    EXPECT_TRUE(t.skew);
    EXPECT_TRUE(t.cybe_zero);
    EXPECT_TRUE(t.twisted_poisson());
    EXPECT_TRUE(t.forward);
    EXPECT_TRUE(t.backward);
  }
}

TEST(Theorem1, NonSolutionsFailJacobi) {
  std::mt19937_64 rng(33);
  int seen = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const TensorMap r = test::random_skew(rng, 2, 3);
    if (test::dense_zero(test::dense_cybe(r))) continue;
    ++seen;
    const Theorem1Report t = theorem1_roundtrip(r, 3);
    EXPECT_FALSE(t.twisted_poisson());
    EXPECT_TRUE(t.checks.at(0).passed);
    EXPECT_FALSE(t.checks.at(1).passed);
    EXPECT_TRUE(t.forward);
    EXPECT_TRUE(t.backward);
  }
  EXPECT_GT(seen, 10);
}

TEST(Theorem1, NonSkewFailsSkewCheck) {
  const Theorem1Report t = theorem1_roundtrip(TensorMap::identity(2, 2), 3);
  EXPECT_FALSE(t.skew);
  EXPECT_FALSE(t.checks.at(0).passed);
  EXPECT_TRUE(t.backward);
}

}  // namespace
}  // namespace ybp
