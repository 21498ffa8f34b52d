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

#ifndef CJWE_SELFDUAL_HPP
#define CJWE_SELFDUAL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cjwe/code.hpp"
#include "cjwe/rational.hpp"

namespace cjwe {

enum class SelfDualType { I, II, III, IV };

std::string to_string(SelfDualType t);
/// "I", "II", "III", "IV" (case-insensitive). Throws ParseError.
SelfDualType parse_self_dual_type(std::string_view s);

/// F_2 for I/II, F_3 for III, F_4 with the Hermitian product for IV.
RingSpec ring_for(SelfDualType t);
InnerProduct inner_for(SelfDualType t);
CodeClass class_for(SelfDualType t);

/// Number of Type III (n = 0 mod 4) or Type IV (n = 0 mod 2) codes.
BigInt mass(SelfDualType t, std::uint32_t n);

/// Number of Type III / IV codes of length n containing a fixed
/// self-orthogonal code of dimension k, 0 <= k <= n/2. For k = n/2 the
/// answer is 1: the product formula would give 2 for Type III there.
BigInt count_containing(SelfDualType t, std::uint32_t n, std::uint32_t k);

/// Average of |C cap D|^moment over all D of the type, for any C of that type
/// (moment 1 or 2), from the closed forms.
Rational delta_closed(SelfDualType t, std::uint32_t n, std::uint32_t moment);

/// The same quantity assembled from mass() and count_containing() through the
/// split of pairs (u, v) in C x C by dim <u, v>.
Rational delta_from_counts(SelfDualType t, std::uint32_t n, std::uint32_t moment);

struct SelfDualFamily {
  SelfDualType type;
  std::uint32_t n;
  std::vector<Code> codes;  // sorted by canonical identity
};

/// Every self-dual code of the type and length, as distinct subspaces.
/// Search limits: III n <= 8, IV n <= 4, I/II n <= 8.
SelfDualFamily enumerate_selfdual(SelfDualType t, std::uint32_t n);

/// Exhaustive scan over spans of n/2-tuples of vectors (practical for n <= 4).
std::vector<Code> scan_self_dual_codes(const RingSpec& ring, InnerProduct inner, std::uint32_t n);
/// Backtracking over reduced echelon generator matrices, pruning rows that
/// break self-orthogonality.
std::vector<Code> backtrack_self_dual_codes(const RingSpec& ring, InnerProduct inner, std::uint32_t n);

/// (1/|family|) sum_D |C cap D|^moment.
Rational delta_empirical(const Code& c, const SelfDualFamily& family, std::uint32_t moment);

}  // namespace cjwe

#endif  // CJWE_SELFDUAL_HPP
