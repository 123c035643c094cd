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

// Dense reference implementations and random generators for the tests. Kept
// independent of the sparse TensorMap algebra in the library.

#include <cstdint>
#include <random>
#include <vector>

#include "ybp/scalar.hpp"
#include "ybp/tensor_map.hpp"

namespace ybp::test {

using Dense = std::vector<std::vector<Scalar>>;

inline Dense zeros(int n) { return Dense(static_cast<size_t>(n), std::vector<Scalar>(static_cast<size_t>(n))); }

inline Dense mul(const Dense& a, const Dense& b) {
  const size_t n = a.size();
  Dense c = zeros(static_cast<int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline Dense add(Dense a, const Dense& b, int sign = 1) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) a[i][j] += sign * b[i][j];
  return a;
}

// r(a, b; c, d): coefficient of e_a (x) e_b in r(e_c (x) e_d).
inline Scalar coeff(const TensorMap& r, int a, int b, int c, int d) { return r.entry({a, b}, {c, d}); }

// r^{ij} on V^{(x)3} as a d^3 x d^3 matrix; row = out index, column = in index,
// index (x, y, z) -> (x d + y) d + z.
inline Dense slot_matrix(const TensorMap& r, int i, int j) {
  const int d = r.dim();
  const int n = d * d * d;
  Dense m = zeros(n);
  auto idx = [d](int x, int y, int z) { return (x * d + y) * d + z; };
  for (int o0 = 0; o0 < d; ++o0)
    for (int o1 = 0; o1 < d; ++o1)
      for (int o2 = 0; o2 < d; ++o2)
        for (int i0 = 0; i0 < d; ++i0)
          for (int i1 = 0; i1 < d; ++i1)
            for (int i2 = 0; i2 < d; ++i2) {
              const int out[3] = {o0, o1, o2};
              const int in[3] = {i0, i1, i2};
              const int k = 3 - i - j;  // untouched slot (0-based i, j)
              if (out[k] != in[k]) continue;
              m[static_cast<size_t>(idx(o0, o1, o2))][static_cast<size_t>(idx(i0, i1, i2))] =
                  coeff(r, out[i], out[j], in[i], in[j]);
            }
  return m;
}

inline Dense to_dense(const TensorMap& f) {
  const int d = f.dim();
  const int n = d * d * d;
  Dense m = zeros(n);
  for (const auto& [out, in, c] : f.entries()) {
    m[static_cast<size_t>((out[0] * d + out[1]) * d + out[2])][static_cast<size_t>((in[0] * d + in[1]) * d + in[2])] = c;
  }
  return m;
}

inline Dense commutator(const Dense& a, const Dense& b) { return add(mul(a, b), mul(b, a), -1); }

// [r12, r13] + [r12, r23] + [r13, r23]
inline Dense dense_cybe(const TensorMap& r) {
  const Dense r12 = slot_matrix(r, 0, 1), r13 = slot_matrix(r, 0, 2), r23 = slot_matrix(r, 1, 2);
  return add(add(commutator(r12, r13), commutator(r12, r23)), commutator(r13, r23));
}

// r12 r13 - r23 r12 + r13 r23
inline Dense dense_aybe(const TensorMap& r) {
  const Dense r12 = slot_matrix(r, 0, 1), r13 = slot_matrix(r, 0, 2), r23 = slot_matrix(r, 1, 2);
  return add(add(mul(r12, r13), mul(r23, r12), -1), mul(r13, r23));
}

inline bool dense_zero(const Dense& m) {
  for (const auto& row : m)
    for (const auto& c : row)
      if (sgn(c) != 0) return false;
  return true;
}

// Sparse skew r with small integer entries.
inline TensorMap random_skew(std::mt19937_64& rng, int dim, int max_terms = 4) {
  TensorMap r(dim, 2, 2);
  std::uniform_int_distribution<int> letter(0, dim - 1), value(-3, 3), count(1, max_terms);
  const int n = count(rng);
  for (int t = 0; t < n; ++t) {
    const int a = letter(rng), b = letter(rng), c = letter(rng), d = letter(rng);
    const Scalar v = value(rng);
    r.add_entry({a, b}, {c, d}, v);
    r.add_entry({b, a}, {d, c}, -v);
  }
  return r;
}

inline TensorMap random_map(std::mt19937_64& rng, int dim, int dom, int cod, int terms) {
  TensorMap f(dim, dom, cod);
  std::uniform_int_distribution<int> letter(0, dim - 1), value(-4, 4);
  for (int t = 0; t < terms; ++t) {
    Word out, in;
    for (int k = 0; k < cod; ++k) out.push_back(letter(rng));
    for (int k = 0; k < dom; ++k) in.push_back(letter(rng));
    Scalar c(value(rng), 1 + (t % 3));
    c.canonicalize();
    f.add_entry(out, in, c);
  }
  return f;
}

}  // namespace ybp::test
