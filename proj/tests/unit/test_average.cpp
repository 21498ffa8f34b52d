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

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cjwe/cjwe.hpp"
#include "oracles.hpp"

using namespace cjwe;

namespace {

const RingSpec& f2() {
  static const RingSpec r = RingSpec::field(2);
  return r;
}

CompositionTensor bi2(std::vector<std::uint32_t> d) { return CompositionTensor::from_dense(2, 2, d); }

}  // namespace

TEST_CASE("multinomials") {
  MultinomialCache mc(10);
  CHECK(mc.factorial(0) == 1);
  CHECK(mc.factorial(10) == 3628800);
  const std::uint32_t parts[] = {2, 1, 1};
  CHECK(mc.multinomial(4, parts) == 12);
  CHECK_THROWS_AS(mc.multinomial(5, parts), PreconditionError);
}

TEST_CASE("contingency tables") {
  const std::uint32_t rows[] = {2, 1}, cols[] = {1, 1, 1};
  int count = 0;
  for_each_contingency_table(rows, cols, [&](std::span<const std::uint32_t> t) {
    ++count;
    for (std::size_t i = 0; i < 2; ++i) CHECK(t[i * 3] + t[i * 3 + 1] + t[i * 3 + 2] == rows[i]);
    for (std::size_t j = 0; j < 3; ++j) CHECK(t[j] + t[3 + j] == cols[j]);
  });
  CHECK(count == 3);
  // 2x2 tables with margins (3,2)/(2,3): the top-left cell ranges over 0..2.
  const std::uint32_t r2[] = {3, 2}, c2[] = {2, 3};
  count = 0;
  for_each_contingency_table(r2, c2, [&](std::span<const std::uint32_t>) { ++count; });
  CHECK(count == 3);
  const std::uint32_t bad[] = {1};
  count = 0;
  for_each_contingency_table(bad, c2, [&](std::span<const std::uint32_t>) { ++count; });
  CHECK(count == 0);
}

TEST_CASE("the two-coordinate example") {
  const Code c(f2(), 2, {{1, 0}}), d(f2(), 2, {{0, 1}});
  const Enumerator avg = avg_cjwe(c, d);
  // x00^2 + x00 x01 + x00 x10 + 1/2 x01 x10 + 1/2 x00 x11
  CHECK(avg.term_count() == 5);
  CHECK(avg.coefficient(bi2({2, 0, 0, 0})) == CycQ(1));
  CHECK(avg.coefficient(bi2({1, 1, 0, 0})) == CycQ(1));
  CHECK(avg.coefficient(bi2({1, 0, 1, 0})) == CycQ(1));
  CHECK(avg.coefficient(bi2({0, 1, 1, 0})) == CycQ(Rational(1, 2)));
  CHECK(avg.coefficient(bi2({1, 0, 0, 1})) == CycQ(Rational(1, 2)));
  const Code pair[] = {c, d};
  CHECK(avg_cjwe_bruteforce(pair) == avg);
  CHECK(avg_gfold(pair) == avg);
  CHECK(avg_intersection(c, d) == Rational(3, 2));
  CHECK(avg_intersection_bruteforce(c, d) == Rational(3, 2));
}

TEST_CASE("trivial averages") {
  const Code z = Code::zero(f2(), 3);
  Enumerator expect(f2(), 2, 3);
  expect.add_term(bi2({3, 0, 0, 0}), 1);
  CHECK(avg_cjwe(z, z) == expect);
  CHECK(avg_intersection(z, z) == 1);
  const Code full = Code::full(f2(), 2);
  CHECK(avg_intersection(full, full) == 4);
  const Code one = Code::full(f2(), 1);
  CHECK(avg_cjwe(one, one) == cjwe::cjwe(one, one));
  const Code single[] = {one, one};
  CHECK(avg_cjwe_bruteforce(single) == cjwe::cjwe(one, one));
  const Code t(RingSpec::field(3), 4, {{1, 0, 1, 1}, {0, 1, 1, 2}});
  const Code tt[] = {t, t};
  CHECK(avg_cjwe_bruteforce(tt) == avg_cjwe(t, t));
  const Code alone[] = {t};
  CHECK(avg_gfold(alone) == cwe(t));
}

TEST_CASE("three-fold example") {
  const Code c1(f2(), 2, {{1, 0}}), c2(f2(), 2, {{0, 1}}), c3 = Code::zero(f2(), 2);
  const Code triple[] = {c1, c2, c3};
  const Enumerator avg = avg_gfold(triple);
  const Code swapped[] = {permute(c1, {1, 0}), c2, c3};
  const Enumerator expect = scale(add(gfold_cjwe(triple), gfold_cjwe(swapped)), CycQ(Rational(1, 2)));
  CHECK(avg == expect);
  CHECK(avg_cjwe_bruteforce(triple) == expect);
}

TEST_CASE("closed form matches the permutation average on random codes") {
  std::mt19937_64 rng(31);
  for (const auto& a : oracle::test_alphabets()) {
    for (int trial = 0; trial < 6; ++trial) {
      const std::size_t n = 1 + trial % 4;
      const Code c = oracle::random_code(rng, a, n, 2), d = oracle::random_code(rng, a, n, 2);
      CAPTURE(oracle::describe(c));
      CAPTURE(oracle::describe(d));
      const auto sc = oracle::span_closure(c), sd = oracle::span_closure(d);
      const Enumerator avg = avg_cjwe(c, d);
      CHECK(oracle::to_poly(avg) == oracle::direct_average(a.ring, n, {sc, sd}));
      CHECK(avg.mass() == CycQ(Rational(c.size() * d.size())));
      const std::uint32_t swap[] = {1, 0};
      CHECK(permute_axes(avg_cjwe(d, c), swap) == avg);
      CHECK(avg_intersection(c, d) == oracle::direct_avg_intersection(n, sc, sd));
    }
  }
}

TEST_CASE("stabilizer order of a word") {
  // The number of permutations fixing a word of composition r is prod r_i!.
  const RingSpec f3 = RingSpec::field(3);
  MultinomialCache mc(6);
  for (const auto& w : oracle::all_words(f3, 5)) {
    std::vector<std::uint32_t> sigma(5);
    std::iota(sigma.begin(), sigma.end(), 0u);
    long fixed = 0;
    do {
      fixed += permute(w, sigma) == w;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    BigInt expect = 1;
    for (auto r : composition(w, 3).dense()) expect *= mc.factorial(r);
    REQUIRE(expect == fixed);
  }
}

TEST_CASE("permutation budget") {
  const Limits saved = limits();
  Limits l = saved;
  l.max_permutations = 100;
  set_limits(l);
  const Code c = Code::zero(f2(), 6);
  const Code pair[] = {c, c};
  CHECK_THROWS_AS(avg_cjwe_bruteforce(pair), BudgetExceeded);
  CHECK_THROWS_AS(avg_intersection_bruteforce(c, c), BudgetExceeded);
  set_limits(saved);
  CHECK_THROWS_AS(avg_cjwe(c, Code::zero(f2(), 5)), PreconditionError);
}
