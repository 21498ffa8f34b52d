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

#ifndef CJWE_AVERAGE_HPP
#define CJWE_AVERAGE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cjwe/code.hpp"
#include "cjwe/enumerator.hpp"
#include "cjwe/rational.hpp"

namespace cjwe {

/// Exact factorials and multinomial coefficients a! / (b_0! ... b_m!).
class MultinomialCache {
 public:
  explicit MultinomialCache(std::uint32_t max_n);
  std::uint32_t max_n() const { return static_cast<std::uint32_t>(fact_.size() - 1); }
  const BigInt& factorial(std::uint32_t a) const;
  /// Requires sum(parts) == a.
  BigInt multinomial(std::uint32_t a, std::span<const std::uint32_t> parts) const;

 private:
  std::vector<BigInt> fact_;
};

/// Calls visit(table) for every rows x cols non-negative integer matrix
/// (row-major) with the given row and column sums.
void for_each_contingency_table(std::span<const std::uint32_t> row_sums,
                                std::span<const std::uint32_t> col_sums,
                                const std::function<void(std::span<const std::uint32_t>)>& visit);

/// Average of CJWE(C^sigma, D) over all sigma in S_n, via the closed form in
/// the compositions of C and D.
Enumerator avg_cjwe(const Code& c, const Code& d);

/// Average of CJWE(C_1^sigma, C_2, ..., C_g) over sigma in S_n via the closed
/// form in the compositions of C_1 and the (g-1)-fold compositions of C_2..C_g.
Enumerator avg_gfold(std::span<const Code> codes);

/// Direct average over all n! permutations of the first code. n! must not
/// exceed limits().max_permutations.
Enumerator avg_cjwe_bruteforce(std::span<const Code> codes);

/// Average intersection number (1/n!) sum_sigma |C cap D^sigma| from the
/// composition distributions.
Rational avg_intersection(const Code& c, const Code& d);
/// The same by direct summation over S_n.
Rational avg_intersection_bruteforce(const Code& c, const Code& d);

}  // namespace cjwe

#endif  // CJWE_AVERAGE_HPP
