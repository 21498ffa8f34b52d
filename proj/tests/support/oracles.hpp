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

#ifndef CJWE_TESTS_ORACLES_HPP
#define CJWE_TESTS_ORACLES_HPP

// Direct, deliberately naive reference computations used to check the library.

#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cjwe/cjwe.hpp"

namespace oracle {

using cjwe::Code;
using cjwe::RingSpec;
using cjwe::Word;
using WordSet = std::set<Word>;
using Poly = std::map<std::vector<std::uint32_t>, cjwe::Rational>;

std::vector<Word> all_words(const RingSpec& ring, std::size_t n);

/// Closure of {0} under adding generators (and scaling, over fields).
WordSet span_closure(const RingSpec& ring, std::size_t n, const std::vector<Word>& gens);
WordSet span_closure(const Code& c);

/// Every word orthogonal to all generators under the given product.
WordSet dual_bruteforce(const RingSpec& ring, std::size_t n, const std::vector<Word>& gens,
                        cjwe::InnerProduct inner);

/// Dense-exponent polynomial counting g-fold compositions over all word tuples.
Poly direct_gfold(const RingSpec& ring, std::size_t n, const std::vector<WordSet>& codes);

/// (1/n!) sum over sigma of direct_gfold with sigma applied to the first set.
Poly direct_average(const RingSpec& ring, std::size_t n, const std::vector<WordSet>& codes);

/// (1/n!) sum over sigma of |C cap D^sigma|.
cjwe::Rational direct_avg_intersection(std::size_t n, const WordSet& c, const WordSet& d);

Poly to_poly(const cjwe::Enumerator& p);

std::complex<double> evaluate(const cjwe::CycQ& x);

/// Common alphabets exercised by the property tests.
struct Alphabet {
  RingSpec ring;
  cjwe::InnerProduct inner;
  std::string name;
};
std::vector<Alphabet> test_alphabets();

/// A code spanned by 1..max_gens uniformly random words.
Code random_code(std::mt19937_64& rng, const Alphabet& a, std::size_t n, std::size_t max_gens);

std::string describe(const Code& c);

}  // namespace oracle

#endif  // CJWE_TESTS_ORACLES_HPP
