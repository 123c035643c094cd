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

#include "ybp/ybe.hpp"

#include "ybp/error.hpp"

namespace ybp {

namespace {

void require_endo2(const TensorMap& r, const char* who) {
  if (r.domain_degree() != 2 || r.codomain_degree() != 2) {
    throw InputError(std::string(who) + ": expected a map V(x)V -> V(x)V, got degrees " +
                     std::to_string(r.domain_degree()) + " -> " + std::to_string(r.codomain_degree()));
  }
}

struct Components {
  TensorMap r12, r13, r23;
  explicit Components(const TensorMap& r)
      : r12(embed_components(r, 1, 2, 3)),
        r13(embed_components(r, 1, 3, 3)),
        r23(embed_components(r, 2, 3, 3)) {}
};

TensorMap commutator(const TensorMap& a, const TensorMap& b) { return compose(a, b) - compose(b, a); }

}  // namespace

YbeReport make_report(TensorMap residual) {
  YbeReport rep;
  rep.is_zero = residual.is_zero();
  if (!rep.is_zero) {
    auto [out, in, c] = residual.entries().front();
    rep.witness = Witness{std::move(out), std::move(in), std::move(c)};
  }
  rep.residual = std::move(residual);
  return rep;
}

bool is_skew(const TensorMap& r) {
  require_endo2(r, "is_skew");
  return (r + flip(r)).is_zero();
}

YbeReport cybe_residual(const TensorMap& r) {
  require_endo2(r, "cybe_residual");
  const Components c(r);
  return make_report(commutator(c.r12, c.r13) - commutator(c.r23, c.r12) + commutator(c.r13, c.r23));
}

YbeReport aybe_residual(const TensorMap& r) {
  require_endo2(r, "aybe_residual");
  const Components c(r);
  return make_report(compose(c.r12, c.r13) - compose(c.r23, c.r12) + compose(c.r13, c.r23));
}

TensorMap aybe_prime(const TensorMap& r) {
  require_endo2(r, "aybe_prime");
  const Components c(r);
  return compose(c.r13, c.r12) - compose(c.r12, c.r23) + compose(c.r23, c.r13);
}

YbeReport qybe_residual(const TensorMap& R) {
  require_endo2(R, "qybe_residual");
  const Components c(R);
  return make_report(compose(c.r12, compose(c.r13, c.r23)) - compose(c.r23, compose(c.r13, c.r12)));
}

bool unitarity_check(const TensorMap& R) {
  require_endo2(R, "unitarity_check");
  return compose(flip(R), R) == TensorMap::identity(R.dim(), 2);
}

TensorMap conjugated_aybe(const TensorMap& r) {
  return conjugate(Permutation::from_one_line({1, 3, 2}), aybe_residual(r).residual);
}

bool cae_identity_check(const TensorMap& r) {
  if (!is_skew(r)) throw PreconditionError("cae_identity_check: r is not skew (r + r^21 != 0)");
  return cybe_residual(r).residual == aybe_residual(r).residual - conjugated_aybe(r);
}

}  // namespace ybp
