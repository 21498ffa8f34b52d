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

#ifndef CJWE_MACWILLIAMS_HPP
#define CJWE_MACWILLIAMS_HPP

#include <cstdint>

#include "cjwe/code.hpp"
#include "cjwe/enumerator.hpp"
#include "cjwe/rational.hpp"

namespace cjwe {

/// Whether a transform targets the code itself or its dual.
enum class Duality { Same, Dual };

/// T[i][j] = chi(w_i w_j), or chi(w_i conj(w_j)) for the Hermitian product.
CycMatrix transform_matrix(const RingSpec& ring, InnerProduct inner = InnerProduct::Euclidean);

/// CWE of C^perp from CWE of C. Coefficients are demoted to rationals;
/// NotRational signals inconsistent inputs.
Enumerator mw_cwe(const Enumerator& p, const BigInt& code_size, const CycMatrix& t);

/// CJWE of (C~, D~) from CJWE(C, D). `t_left` / `t_right` are the transform
/// matrices of the first and second code's inner products.
Enumerator mw_joint(const Enumerator& p, Duality left, Duality right,
                    const BigInt& size_left, const BigInt& size_right,
                    const CycMatrix& t_left, const CycMatrix& t_right);
Enumerator mw_joint(const Enumerator& p, Duality left, Duality right,
                    const BigInt& size_left, const BigInt& size_right, const CycMatrix& t);

/// Average version; identical machinery since averaging over permutations
/// commutes with the coordinate-wise substitution.
Enumerator mw_avg_joint(const Enumerator& p_avg, Duality left, Duality right,
                        const BigInt& size_left, const BigInt& size_right,
                        const CycMatrix& t_left, const CycMatrix& t_right);

/// Replaces every coefficient by its rational value (throws NotRational).
Enumerator demote_to_rational(const Enumerator& p);

}  // namespace cjwe

#endif  // CJWE_MACWILLIAMS_HPP
