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

#include <random>

#include "cjwe/cjwe.hpp"
#include "oracles.hpp"

using namespace cjwe;

namespace {

CompositionTensor dense1(std::uint32_t q, std::vector<std::uint32_t> d) {
  return CompositionTensor::from_dense(q, 1, d);
}

}  // namespace

TEST_CASE("compositions") {
  const std::uint32_t q = 3;
  const Word u{0, 2, 2, 1}, v{1, 1, 0, 0};
  CHECK(composition(u, q).dense() == std::vector<std::uint32_t>{1, 1, 2});
  const auto bi = bicomposition(u, v, q);
  CHECK(bi.total() == 4);
  // pairs (0,1) (2,1) (2,0) (1,0)
  CHECK(bi.at(Word{0, 1}) == 1);
  CHECK(bi.at(Word{2, 1}) == 1);
  CHECK(bi.at(Word{2, 0}) == 1);
  CHECK(bi.at(Word{1, 0}) == 1);
  CHECK(bi.at(0 * 3 + 1) == 1);
  CHECK(marginalize(bi, 2) == composition(u, q));
  CHECK(marginalize(bi, 1) == composition(v, q));
  CHECK(axis_composition(bi, 1) == composition(u, q));
  const Word w{2, 2, 2, 2};
  const std::span<const Symbol> words[] = {u, v, w};
  const auto g3 = gcomposition(words, q);
  CHECK(g3.fold() == 3);
  CHECK(g3.at(Word{0, 1, 2}) == 1);
  CHECK(marginalize(g3, 3) == bi);
  CHECK(flatten_index(Word{1, 2}, 3) == 5);
  CHECK(unflatten_index(5, 3, 2) == std::vector<Symbol>{1, 2});
}

TEST_CASE("dense order and arithmetic of monomials") {
  const auto a = dense1(3, {2, 0, 0}), b = dense1(3, {1, 1, 0}), c = dense1(3, {1, 0, 1});
  CHECK(compare_dense(a, b) > 0);
  CHECK(compare_dense(b, c) > 0);
  CHECK(compare_dense(c, c) == 0);
  CHECK((b + c).dense() == std::vector<std::uint32_t>{2, 1, 1});
  CHECK(CompositionTensor::from_entries(3, 1, {{2, 1}, {0, 1}, {2, 2}}).dense() ==
        std::vector<std::uint32_t>{1, 0, 3});
  CHECK(a.hash() != b.hash());
}

TEST_CASE("cwe of the zero code and the full space") {
  const RingSpec f3 = RingSpec::field(3);
  const Enumerator z = cwe(Code::zero(f3, 2));
  CHECK(z.to_json() == R"({"ring":"F 3","g":1,"n":2,"terms":[{"exp":[2,0,0],"coeff":"1/1"}]})");
  // (x0 + x1 + x2)^3 has coefficients 1, 3 and 6.
  const Enumerator full = cwe(Code::full(f3, 3));
  CHECK(full.term_count() == 10);
  CHECK(full.coefficient(dense1(3, {3, 0, 0})) == CycQ(1));
  CHECK(full.coefficient(dense1(3, {2, 1, 0})) == CycQ(3));
  CHECK(full.coefficient(dense1(3, {1, 1, 1})) == CycQ(6));
  CHECK(full.mass() == CycQ(27));
}

TEST_CASE("enumerators agree with direct counting") {
  std::mt19937_64 rng(23);
  for (const auto& a : oracle::test_alphabets()) {
    for (int trial = 0; trial < 12; ++trial) {
      const std::size_t n = 1 + trial % 5;
      const Code c = oracle::random_code(rng, a, n, 3), d = oracle::random_code(rng, a, n, 2);
      const auto sc = oracle::span_closure(c), sd = oracle::span_closure(d);
      CAPTURE(oracle::describe(c));
      CHECK(oracle::to_poly(cwe(c)) == oracle::direct_gfold(a.ring, n, {sc}));
      const Enumerator j = cjwe::cjwe(c, d);
      CHECK(oracle::to_poly(j) == oracle::direct_gfold(a.ring, n, {sc, sd}));
      CHECK(j.mass() == CycQ(Rational(c.size() * d.size())));
      // Summing out one axis counts every word of the other code |D| (or |C|) times.
      CHECK(merge_axis(j, 2) == scale(cwe(c), CycQ(Rational(d.size()))));
      CHECK(merge_axis(j, 1) == scale(cwe(d), CycQ(Rational(c.size()))));
      for (const auto& [k, v] : j.terms()) CHECK(k.total() == n);
      if (n <= 4) {
        const Code e = oracle::random_code(rng, a, n, 1);
        const Code triple[] = {c, d, e};
        const Enumerator g3 = gfold_cjwe(triple);
        CHECK(oracle::to_poly(g3) == oracle::direct_gfold(a.ring, n, {sc, sd, oracle::span_closure(e)}));
        const Code reordered[] = {e, c, d};
        const std::uint32_t perm[] = {1, 2, 0};
        CHECK(permute_axes(gfold_cjwe(reordered), perm) == g3);
      }
    }
  }
}

TEST_CASE("JSON round trip and ordering") {
  const Code t(RingSpec::field(3), 4, {{1, 0, 1, 1}, {0, 1, 1, 2}});
  const Enumerator p = cjwe::cjwe(t, t);
  const std::string text = p.to_json();
  CHECK(Enumerator::from_json(text) == p);
  CHECK(Enumerator::from_json(text).to_json() == text);
  CompositionTensor prev;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    if (!first) CHECK(compare_dense(prev, k) > 0);
    prev = k;
    first = false;
  }
  Enumerator cyc(RingSpec::field(3), 1, 1);
  cyc.add_term(dense1(3, {1, 0, 0}), CycQ::zeta_pow(3, 1));
  CHECK(cyc.to_json() == R"({"ring":"F 3","g":1,"n":1,"terms":[{"exp":[1,0,0],"coeff":{"m":3,"coeffs":["0/1","1/1"]}}]})");
  CHECK(Enumerator::from_json(cyc.to_json()) == cyc);
  CHECK_THROWS_AS(Enumerator::from_json("{"), ParseError);
  CHECK_THROWS_AS(Enumerator::from_json(R"({"ring":"F 3","g":1,"n":2,"terms":[{"exp":[1,0,0],"coeff":"1"}]})"),
                  ParseError);
}

TEST_CASE("term bookkeeping") {
  Enumerator p(RingSpec::field(2), 1, 2);
  p.add_term(dense1(2, {2, 0}), CycQ(1));
  p.add_term(dense1(2, {2, 0}), CycQ(-1));
  CHECK(p.is_zero());
  CHECK_THROWS_AS(p.add_term(dense1(2, {1, 0}), CycQ(1)), PreconditionError);
  p.add_term(dense1(2, {1, 1}), CycQ(2));
  CHECK(add(p, p).coefficient(dense1(2, {1, 1})) == CycQ(4));
  CHECK(scale(p, CycQ(Rational(1, 2))).coefficient(dense1(2, {1, 1})) == CycQ(1));
}

TEST_CASE("linear substitution") {
  const RingSpec f2 = RingSpec::field(2);
  CycMatrix h(2);
  h(0, 0) = 1;
  h(0, 1) = 1;
  h(1, 0) = 1;
  h(1, 1) = -1;
  // (x0 + x1)^2 + (x0 - x1)^2 = 2 x0^2 + 2 x1^2
  Enumerator p(f2, 1, 2);
  p.add_term(dense1(2, {2, 0}), 1);
  p.add_term(dense1(2, {0, 2}), 1);
  const Enumerator r = substitute_linear(p, h);
  CHECK(r.term_count() == 2);
  CHECK(r.coefficient(dense1(2, {2, 0})) == CycQ(2));
  CHECK(r.coefficient(dense1(2, {0, 2})) == CycQ(2));
  CHECK(substitute_axis(p, 1, h) == r);
  CHECK(substitute_linear(p, CycMatrix::identity(2)) == p);

  // Axis-wise substitution equals the Kronecker form on a 2-fold enumerator.
  const RingSpec f3 = RingSpec::field(3);
  const Code t(f3, 3, {{1, 2, 0}});
  const Code u(f3, 3, {{0, 1, 1}, {1, 1, 1}});
  const Enumerator j = cjwe::cjwe(t, u);
  const CycMatrix tm = transform_matrix(f3);
  CHECK(substitute_axis(j, 1, tm) == substitute_linear(j, kronecker(tm, CycMatrix::identity(3))));
  CHECK(substitute_axis(j, 2, tm) == substitute_linear(j, kronecker(CycMatrix::identity(3), tm)));
  CHECK(substitute_axis(substitute_axis(j, 1, tm), 2, tm) == substitute_linear(j, kronecker(tm, tm)));
}

TEST_CASE("results do not depend on the thread count") {
  const Code h(RingSpec::field(4), 6, {{1, 0, 0, 1, 2, 2}, {0, 1, 0, 2, 1, 2}, {0, 0, 1, 2, 2, 1}},
               InnerProduct::Hermitian);
  const unsigned saved = threads();
  set_threads(1);
  const std::string one = cjwe::cjwe(h, h).to_json();
  set_threads(8);
  const std::string eight = cjwe::cjwe(h, h).to_json();
  set_threads(saved);
  CHECK(one == eight);
}
