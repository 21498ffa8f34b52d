// Copyright 2026 The cjwe Authors.
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

#include "cjwe/macwilliams.hpp"

#include "cjwe/error.hpp"

namespace cjwe {

CycMatrix transform_matrix(const RingSpec& ring, InnerProduct inner) {
  const std::uint32_t q = ring.size();
  if (inner == InnerProduct::Hermitian && !ring.has_conj()) {
    throw PreconditionError("Hermitian transform needs a ring with conjugation");
  }
  CycMatrix t(q);
  for (std::uint32_t i = 0; i < q; ++i)
    for (std::uint32_t j = 0; j < q; ++j) {
      const Symbol b = inner == InnerProduct::Hermitian ? ring.conj(static_cast<Symbol>(j)) : static_cast<Symbol>(j);
      t(i, j) = ring.chi(ring.mul(static_cast<Symbol>(i), b));
    }
  return t;
}

Enumerator demote_to_rational(const Enumerator& p) {
  Enumerator out(p.ring(), p.fold(), p.length());
  for (const auto& [k, c] : p.terms()) out.add_term(k, CycQ(c.to_rational()));
  return out;
}

namespace {

void check_transform(const Enumerator& p, const CycMatrix& t) {
  if (t.dim() != p.ring().size()) throw PreconditionError("transform matrix does not match the alphabet");
}

CycQ inverse_size(const BigInt& size) {
  if (size <= 0) throw PreconditionError("code size must be positive");
  return CycQ(Rational(BigInt(1), size));
}

}  // namespace

Enumerator mw_cwe(const Enumerator& p, const BigInt& code_size, const CycMatrix& t) {
  if (p.fold() != 1) throw PreconditionError("mw_cwe expects a 1-fold enumerator");
  check_transform(p, t);
  return demote_to_rational(scale(substitute_axis(p, 1, t), inverse_size(code_size)));
}

Enumerator mw_joint(const Enumerator& p, Duality left, Duality right, const BigInt& size_left,
                    const BigInt& size_right, const CycMatrix& t_left, const CycMatrix& t_right) {
  if (p.fold() != 2) throw PreconditionError("joint transform expects a 2-fold enumerator");
  check_transform(p, t_left);
  check_transform(p, t_right);
  Enumerator out = p;
  if (left == Duality::Dual) out = scale(substitute_axis(out, 1, t_left), inverse_size(size_left));
  if (right == Duality::Dual) out = scale(substitute_axis(out, 2, t_right), inverse_size(size_right));
  return demote_to_rational(out);
}

Enumerator mw_joint(const Enumerator& p, Duality left, Duality right, const BigInt& size_left,
                    const BigInt& size_right, const CycMatrix& t) {
  return mw_joint(p, left, right, size_left, size_right, t, t);
}

Enumerator mw_avg_joint(const Enumerator& p_avg, Duality left, Duality right, const BigInt& size_left,
                        const BigInt& size_right, const CycMatrix& t_left, const CycMatrix& t_right) {
  return mw_joint(p_avg, left, right, size_left, size_right, t_left, t_right);
}

}  // namespace cjwe
