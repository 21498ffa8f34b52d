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

oracle::WordSet as_set(const Code& c) {
  oracle::WordSet s;
  c.for_each_codeword([&](std::span<const Symbol> w) { s.insert(Word(w.begin(), w.end())); });
  return s;
}

Code tetracode() { return Code(RingSpec::field(3), 4, {{1, 0, 1, 1}, {0, 1, 1, 2}}); }

Code hexacode() {
  return Code(RingSpec::field(4), 6, {{1, 0, 0, 1, 2, 2}, {0, 1, 0, 2, 1, 2}, {0, 0, 1, 2, 2, 1}},
              InnerProduct::Hermitian);
}

}  // namespace

TEST_CASE("codeword enumeration") {
  const RingSpec f2 = RingSpec::field(2);
  CHECK(Code(f2, 2, {{1, 0}, {0, 1}}).size() == 4);
  const Code t = tetracode();
  CHECK(t.size() == 9);
  CHECK(as_set(t).count(Word{2, 1, 0, 1}) == 1);
  CHECK(as_set(t) == oracle::span_closure(t));
  const Code z = Code(RingSpec::residue(4), 1, {{2}});
  CHECK(z.size() == 2);
  CHECK(as_set(z) == oracle::WordSet{{0}, {2}});
}

TEST_CASE("enumeration order is deterministic and chunkable") {
  const Code h = hexacode();
  const CodewordList all = h.codewords();
  CHECK(all.size() == 64);
  std::vector<Word> pieces;
  for (std::uint64_t b = 0; b < 64; b += 10)
    h.for_each_codeword(b, std::min<std::uint64_t>(b + 10, 64),
                        [&](std::span<const Symbol> w) { pieces.emplace_back(w.begin(), w.end()); });
  REQUIRE(pieces.size() == 64);
  for (std::size_t i = 0; i < 64; ++i) CHECK(pieces[i] == Word(all[i].begin(), all[i].end()));
}

TEST_CASE("budget") {
  Limits saved = limits();
  Limits l = saved;
  l.max_codewords = 8;
  set_limits(l);
  CHECK_THROWS_AS(tetracode().codewords(), BudgetExceeded);
  set_limits(saved);
  CHECK(tetracode().codewords().size() == 9);
}

TEST_CASE("duals") {
  const RingSpec f2 = RingSpec::field(2);
  CHECK(dual(Code::zero(f2, 2)).same_codewords(Code::full(f2, 2)));
  CHECK(dual(tetracode()).same_codewords(tetracode()));
  const Code z = Code(RingSpec::residue(4), 1, {{2}});
  CHECK(dual(z).same_codewords(z));
  CHECK(as_set(dual(z)) == oracle::dual_bruteforce(z.ring(), 1, z.generators(), InnerProduct::Euclidean));
  CHECK(dual(hexacode()).same_codewords(hexacode()));
  CHECK_FALSE(Code(RingSpec::field(4), 6, hexacode().generators()).dual().same_codewords(hexacode()));
}

TEST_CASE("dual and span agree with brute force on random codes") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> len(1, 5);
  for (const auto& a : oracle::test_alphabets()) {
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t n = len(rng);
      const Code c = oracle::random_code(rng, a, n, 3);
      CAPTURE(oracle::describe(c));
      const auto span = oracle::span_closure(c);
      REQUIRE(as_set(c) == span);
      REQUIRE(c.size() == static_cast<long>(span.size()));
      const Code d = c.dual();
      REQUIRE(as_set(d) == oracle::dual_bruteforce(a.ring, n, c.generators(), a.inner));
      REQUIRE(c.size() * d.size() == ipow(BigInt(a.ring.size()), n));
      REQUIRE(d.dual().same_codewords(c));
      for (const auto& w : oracle::all_words(a.ring, n)) REQUIRE(c.contains(w) == (span.count(w) == 1));
    }
  }
}

TEST_CASE("permutations") {
  const RingSpec f2 = RingSpec::field(2);
  const Code rep = Code(f2, 2, {{1, 1}});
  CHECK(permute(rep, {1, 0}).same_codewords(rep));
  CHECK(permute(Word{1, 2, 3}, Permutation{2, 0, 1}) == Word{3, 1, 2});
  CHECK(intersection_size(Code(f2, 2, {{1, 0}}), Code(f2, 2, {{0, 1}})) == 1);
  CHECK(intersection_size(tetracode(), permute(tetracode(), {1, 0, 2, 3})) == 3);
  CHECK_THROWS_AS(permute(rep, {0, 0}), PreconditionError);

  std::mt19937_64 rng(5);
  for (const auto& a : oracle::test_alphabets()) {
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = 1 + trial % 6;
      const Code c = oracle::random_code(rng, a, n, 3);
      Permutation s(n), t(n);
      std::iota(s.begin(), s.end(), 0u);
      std::iota(t.begin(), t.end(), 0u);
      std::shuffle(s.begin(), s.end(), rng);
      std::shuffle(t.begin(), t.end(), rng);
      // (u^s)^t has entries u_{s[t[i]]}.
      Permutation st(n);
      for (std::size_t i = 0; i < n; ++i) st[i] = s[t[i]];
      CHECK(permute(permute(c, s), t).same_codewords(permute(c, st)));
      oracle::WordSet expect;
      for (const auto& w : oracle::span_closure(c)) expect.insert(permute(w, s));
      CHECK(as_set(permute(c, s)) == expect);
    }
  }
}

TEST_CASE("intersection sizes against brute force") {
  std::mt19937_64 rng(17);
  for (const auto& a : oracle::test_alphabets()) {
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = 1 + trial % 5;
      const Code c = oracle::random_code(rng, a, n, 3), d = oracle::random_code(rng, a, n, 3);
      const auto sc = oracle::span_closure(c), sd = oracle::span_closure(d);
      std::size_t common = 0;
      for (const auto& w : sc) common += sd.count(w);
      CHECK(intersection_size(c, d) == common);
    }
  }
}

TEST_CASE("classification") {
  const RingSpec f2 = RingSpec::field(2);
  CHECK(classify(Code(f2, 2, {{1, 1}})) == CodeClass::TypeI);
  CHECK(classify(tetracode()) == CodeClass::TypeIII);
  CHECK(classify(hexacode()) == CodeClass::TypeIV);
  // The extended Hamming [8,4] code is doubly even.
  const Code h8(f2, 8, {{1, 0, 0, 0, 0, 1, 1, 1}, {0, 1, 0, 0, 1, 0, 1, 1}, {0, 0, 1, 0, 1, 1, 0, 1},
                        {0, 0, 0, 1, 1, 1, 1, 0}});
  CHECK(classify(h8) == CodeClass::TypeII);
  CHECK(has_type(h8, CodeClass::TypeI));
  CHECK(classify(Code(f2, 4, {{1, 1, 0, 0}})) == CodeClass::SelfOrthogonal);
  CHECK(classify(Code(f2, 2, {{1, 0}})) == CodeClass::None);
  // Self-dual over Z_4 but not one of the named types.
  CHECK(classify(Code(RingSpec::residue(4), 1, {{2}})) == CodeClass::SelfDual);
  CHECK(hamming_weight(Word{0, 2, 0, 1}) == 2);
}

TEST_CASE("self-dual codes have self-orthogonal words and dimension n/2") {
  for (const Code& c : {tetracode(), hexacode()}) {
    CHECK(is_self_dual(c));
    CHECK(c.dimension() * 2 == c.length());
    c.for_each_codeword([&](std::span<const Symbol> u) { CHECK(c.inner(u, u) == 0); });
  }
}

TEST_CASE("invalid codes") {
  const RingSpec f2 = RingSpec::field(2);
  CHECK_THROWS_AS(Code(f2, 2, {{1, 0, 1}}), PreconditionError);
  CHECK_THROWS_AS(Code(f2, 2, {{1, 2}}), PreconditionError);
  CHECK_THROWS_AS(Code(f2, 2, {{1, 0}}, InnerProduct::Hermitian), PreconditionError);
  CHECK_THROWS_AS(intersection_size(Code(f2, 2, {}), Code(f2, 3, {})), PreconditionError);
}
