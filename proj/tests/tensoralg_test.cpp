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
#include "ybp/permutation.hpp"
#include "ybp/scalar.hpp"
#include "ybp/tensor.hpp"
#include "ybp/tensor_map.hpp"

namespace ybp {
namespace {

Permutation P(std::initializer_list<int> one_line) { return Permutation::from_one_line(one_line); }

// Concatenation of labelled blocks moved to the positions tau says, built by hand.
Word move_blocks(const Permutation& tau, const std::vector<Word>& blocks) {
  std::vector<Word> placed(blocks.size());
  for (size_t j = 0; j < blocks.size(); ++j) placed[static_cast<size_t>(tau(static_cast<int>(j)))] = blocks[j];
  Word out;
  for (const auto& b : placed) out.insert(out.end(), b.begin(), b.end());
  return out;
}

int inversion_sign(const Permutation& p) {
  int inv = 0;
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j) inv += p(i) > p(j);
  return inv % 2 ? -1 : 1;
}

TEST(Scalar, ParsesRationals) {
  EXPECT_EQ(parse_scalar("3"), Scalar(3));
  EXPECT_EQ(parse_scalar("-6/4"), Scalar(-3, 2));
  EXPECT_EQ(format_scalar(parse_scalar("10/4")), "5/2");
  EXPECT_THROW(parse_scalar("1/0"), InputError);
  EXPECT_THROW(parse_scalar("0.5"), InputError);
  EXPECT_THROW(parse_scalar("1/-2"), InputError);
  EXPECT_THROW(parse_scalar(""), InputError);
}

TEST(Permutation, OneLineText) {
  const Permutation p = parse_permutation("(231)");
  EXPECT_EQ(p(0), 1);
  EXPECT_EQ(p(1), 2);
  EXPECT_EQ(p(2), 0);
  EXPECT_EQ(p.to_string(), "(231)");
  EXPECT_THROW(parse_permutation("(221)"), InputError);
}

TEST(Permutation, SignIsMultiplicative) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& p : all_permutations(n)) {
      EXPECT_EQ(p.sign(), inversion_sign(p));
      EXPECT_TRUE((p * p.inverse()).is_identity());
      for (const auto& q : all_permutations(n)) EXPECT_EQ((p * q).sign(), p.sign() * q.sign());
    }
  }
}

TEST(BlockPermutation, Examples) {
  EXPECT_TRUE(block_permutation_expand(Permutation::identity(2), std::vector<int>{2, 3}).is_identity());
  EXPECT_EQ(block_permutation_expand(P({2, 1}), std::vector<int>{1, 1}), P({2, 1}));
  // v (x) w1 (x) w2 -> w1 (x) w2 (x) v
  const Permutation e = block_permutation_expand(P({2, 1}), std::vector<int>{1, 2});
  EXPECT_EQ(permute_word(e, {7, 8, 9}), (Word{8, 9, 7}));
  EXPECT_EQ(apply_permutation(e, GradedTensor::basis({0, 1, 2})), GradedTensor::basis({1, 2, 0}));
}

TEST(BlockPermutation, MatchesBlockMoves) {
  for (int k = 1; k <= 3; ++k) {
    for (const auto& tau : all_permutations(k)) {
      for (const Word& sizes_w : all_words(3, k)) {
        std::vector<int> sizes(sizes_w.begin(), sizes_w.end());
        std::vector<Word> blocks;
        int next = 0;
        for (int s : sizes) {
          Word b;
          for (int t = 0; t < s; ++t) b.push_back(next++);
          blocks.push_back(b);
        }
        Word flat;
        for (const auto& b : blocks) flat.insert(flat.end(), b.begin(), b.end());
        EXPECT_EQ(permute_word(block_permutation_expand(tau, sizes), flat), move_blocks(tau, blocks));
      }
    }
  }
}

TEST(BlockPermutation, Homomorphism) {
  for (int k = 1; k <= 3; ++k) {
    for (const auto& t1 : all_permutations(k)) {
      for (const auto& t2 : all_permutations(k)) {
        for (const Word& sw : all_words(3, k)) {
          std::vector<int> sizes(sw.begin(), sw.end());
          std::vector<int> moved(sizes.size());
          for (int j = 0; j < k; ++j) moved[static_cast<size_t>(t2(j))] = sizes[static_cast<size_t>(j)];
          EXPECT_EQ(block_permutation_expand(t1 * t2, sizes),
                    block_permutation_expand(t1, moved) * block_permutation_expand(t2, sizes));
        }
      }
    }
  }
}

TEST(BlockPermutation, SwapOfHomogeneousBlocks) {
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      Word u, w;
      for (int i = 0; i < a; ++i) u.push_back(i);
      for (int i = 0; i < b; ++i) w.push_back(10 + i);
      Word uw = u, wu = w;
      uw.insert(uw.end(), w.begin(), w.end());
      wu.insert(wu.end(), u.begin(), u.end());
      EXPECT_EQ(permute_word(block_permutation_expand(P({2, 1}), std::vector<int>{a, b}), uw), wu);
    }
  }
}

TEST(SigmaPrime, Examples) {
  const std::vector<int> order{1, 2};
  const std::vector<std::pair<int, int>> same{{1, 2}, {2, 3}};
  EXPECT_TRUE(sigma_prime(order, same).is_identity());
  const std::vector<std::pair<int, int>> swapped{{2, 1}, {1, 1}};
  EXPECT_EQ(sigma_prime(order, swapped), P({2, 1}));
  // {x3, x2} with |x3| = d, |x2| = 3 realigned to x2, x3
  for (int d = 0; d <= 3; ++d) {
    const std::vector<int> target{2, 3};
    const std::vector<std::pair<int, int>> current{{3, d}, {2, 3}};
    EXPECT_EQ(sigma_prime(target, current), block_permutation_expand(P({2, 1}), std::vector<int>{d, 3}));
  }
}

TEST(ApplyPermutation, ComposesAsAction) {
  std::mt19937_64 rng(11);
  for (int m = 1; m <= 4; ++m) {
    GradedTensor t;
    std::uniform_int_distribution<int> letter(0, 2), value(-3, 3);
    for (int k = 0; k < 6; ++k) {
      Word w;
      for (int i = 0; i < m; ++i) w.push_back(letter(rng));
      t.add_term(w, value(rng));
    }
    for (const auto& p : all_permutations(m)) {
      EXPECT_EQ(apply_permutation(Permutation::identity(m), t), t);
      for (const auto& q : all_permutations(m)) {
        EXPECT_EQ(apply_permutation(p, apply_permutation(q, t)), apply_permutation(p * q, t));
      }
    }
  }
  EXPECT_EQ(apply_permutation(P({2, 1}), GradedTensor::basis({0, 1})), GradedTensor::basis({1, 0}));
}

TEST(GradedTensor, ZeroIsNeverStored) {
  GradedTensor t;
  t.add_term({0, 1}, 2);
  t.add_term({0, 1}, -2);
  EXPECT_TRUE(t.is_zero());
  EXPECT_EQ(t, GradedTensor());
}

TEST(TensorMap, Composition) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const TensorMap f = test::random_map(rng, 2, 2, 2, 5);
    const TensorMap g = test::random_map(rng, 2, 2, 2, 5);
    const TensorMap h = test::random_map(rng, 2, 2, 2, 5);
    EXPECT_EQ(compose(TensorMap::identity(2, 2), f), f);
    EXPECT_TRUE(compose(f, TensorMap(2, 2, 2)).is_zero());
    EXPECT_EQ(compose(f + g, h), compose(f, h) + compose(g, h));
    EXPECT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
  }
}

TEST(TensorMap, TensorProductActsFactorwise) {
  std::mt19937_64 rng(6);
  const TensorMap f = test::random_map(rng, 2, 1, 2, 4);
  const TensorMap g = test::random_map(rng, 2, 2, 1, 4);
  const TensorMap fg = tensor_product(f, g);
  for (const Word& u : all_words(2, 1)) {
    for (const Word& w : all_words(2, 2)) {
      Word uw = u;
      uw.insert(uw.end(), w.begin(), w.end());
      EXPECT_EQ(fg.column(uw), tensor_product(f.column(u), g.column(w)));
    }
  }
}

TEST(Embed, SlotsAgreeWithDenseDefinition) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const TensorMap r = test::random_map(rng, 2, 2, 2, 6);
    EXPECT_EQ(test::to_dense(embed_components(r, 1, 2, 3)), test::slot_matrix(r, 0, 1));
    EXPECT_EQ(test::to_dense(embed_components(r, 1, 3, 3)), test::slot_matrix(r, 0, 2));
    EXPECT_EQ(test::to_dense(embed_components(r, 2, 3, 3)), test::slot_matrix(r, 1, 2));
    EXPECT_EQ(embed_components(r, 2, 3, 3), tensor_product(TensorMap::identity(2, 1), r));
    const Permutation s23 = P({1, 3, 2});
    EXPECT_EQ(embed_components(r, 1, 3, 3), conjugate(s23, tensor_product(r, TensorMap::identity(2, 1))));
    EXPECT_EQ(flip(flip(r)), r);
  }
  EXPECT_EQ(embed_components(TensorMap::identity(2, 2), 1, 3, 4), TensorMap::identity(2, 4));
}

TEST(Embed, DisjointSlotsCommute) {
  std::mt19937_64 rng(8);
  const TensorMap r = test::random_map(rng, 2, 2, 2, 6);
  const TensorMap s = test::random_map(rng, 2, 2, 2, 6);
  const TensorMap a = embed_components(r, 1, 3, 4), b = embed_components(s, 2, 4, 4);
  EXPECT_EQ(compose(a, b), compose(b, a));
  const TensorMap c = embed_components(r, 1, 2, 4), d = embed_components(s, 3, 4, 4);
  EXPECT_EQ(compose(c, d), compose(d, c));
}

}  // namespace
}  // namespace ybp
