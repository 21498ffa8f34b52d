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

CompositionTensor d1(std::uint32_t q, std::vector<std::uint32_t> d) { return CompositionTensor::from_dense(q, 1, d); }

Code tetracode() { return Code(RingSpec::field(3), 4, {{1, 0, 1, 1}, {0, 1, 1, 2}}); }

Code pick(const Code& c, Duality f) { return f == Duality::Dual ? c.dual() : c; }

}  // namespace

TEST_CASE("transform matrices") {
  const CycMatrix t2 = transform_matrix(RingSpec::field(2));
  CHECK(t2(0, 0) == CycQ(1));
  CHECK(t2(1, 1) == CycQ(-1));
  const CycMatrix t3 = transform_matrix(RingSpec::field(3));
  const CycQ z = CycQ::zeta_pow(3, 1);
  CHECK(t3(1, 1) == z);
  CHECK(t3(1, 2) == z * z);
  CHECK(t3(2, 2) == z);
  const CycMatrix t4 = transform_matrix(RingSpec::field(4));
  CHECK(t4(2, 2) == CycQ(-1));
  for (const RingSpec& r : {RingSpec::field(2), RingSpec::field(3), RingSpec::field(4), RingSpec::field(5),
                            RingSpec::field(8), RingSpec::field(9), RingSpec::residue(4), RingSpec::residue(6),
                            RingSpec::residue(10)}) {
    for (InnerProduct ip : {InnerProduct::Euclidean, InnerProduct::Hermitian}) {
      if (ip == InnerProduct::Hermitian && !r.has_conj()) {
        CHECK_THROWS_AS(transform_matrix(r, ip), PreconditionError);
        continue;
      }
      CAPTURE(r.literal());
      const CycMatrix t = transform_matrix(r, ip);
      for (std::size_t i = 0; i < r.size(); ++i) {
        CHECK(t(0, i) == CycQ(1));
        CHECK(t(i, 0) == CycQ(1));
      }
      CycMatrix scaled = CycMatrix::identity(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) scaled(i, i) = CycQ(static_cast<long>(r.size()));
      CHECK(t * t.conj_transpose() == scaled);
    }
  }
}

TEST_CASE("single-code examples") {
  const RingSpec f2 = RingSpec::field(2), f3 = RingSpec::field(3);
  const CycMatrix t2 = transform_matrix(f2);
  Enumerator x0(f2, 1, 1);
  x0.add_term(d1(2, {1, 0}), 1);
  CHECK(mw_cwe(x0, 1, t2) == cwe(Code::full(f2, 1)));
  const Code rep2(f2, 2, {{1, 1}});
  CHECK(mw_cwe(cwe(rep2), 2, t2) == cwe(rep2));
  const Code rep3(f3, 3, {{1, 1, 1}});
  const Enumerator r = mw_cwe(cwe(rep3), 3, transform_matrix(f3));
  CHECK(r.term_count() == 4);
  CHECK(r.coefficient(d1(3, {1, 1, 1})) == CycQ(6));
  CHECK(r == cwe(rep3.dual()));
}

TEST_CASE("fixtures and involution") {
  const Code hexa(RingSpec::field(4), 6, {{1, 0, 0, 1, 2, 2}, {0, 1, 0, 2, 1, 2}, {0, 0, 1, 2, 2, 1}},
                  InnerProduct::Hermitian);
  for (const Code& c : {tetracode(), hexa, Code(RingSpec::residue(4), 1, {{2}}), Code(RingSpec::field(3), 3, {{1, 1, 1}})}) {
    const CycMatrix t = transform_matrix(c.ring(), c.inner_product());
    const Enumerator w = cwe(c);
    const Enumerator wd = mw_cwe(w, c.size(), t);
    CHECK(wd == cwe(c.dual()));
    CHECK(mw_cwe(wd, c.dual().size(), t) == w);
  }
  // The hexacode is not Euclidean self-dual; the Euclidean transform gives its Euclidean dual.
  const Code hexa_e(RingSpec::field(4), 6, hexa.generators());
  CHECK(mw_cwe(cwe(hexa_e), 64, transform_matrix(hexa_e.ring())) == cwe(hexa_e.dual()));
}

TEST_CASE("random codes: cwe and all joint flag combinations") {
  std::mt19937_64 rng(41);
  const Duality flags[] = {Duality::Same, Duality::Dual};
  for (const auto& a : oracle::test_alphabets()) {
    for (int trial = 0; trial < 5; ++trial) {
      const std::size_t n = 1 + trial % 4;
      const Code c = oracle::random_code(rng, a, n, 2), d = oracle::random_code(rng, a, n, 2);
      CAPTURE(oracle::describe(c));
      CAPTURE(oracle::describe(d));
      const CycMatrix t = transform_matrix(a.ring, a.inner);
      const Enumerator wd = mw_cwe(cwe(c), c.size(), t);
      CHECK(wd == cwe(c.dual()));
      for (const auto& [k, v] : wd.terms()) CHECK(v.to_rational() >= 0);
      const Enumerator j = cjwe::cjwe(c, d), avg = avg_cjwe(c, d);
      for (Duality l : flags)
        for (Duality r : flags) {
          CHECK(mw_joint(j, l, r, c.size(), d.size(), t) == cjwe::cjwe(pick(c, l), pick(d, r)));
          CHECK(mw_avg_joint(avg, l, r, c.size(), d.size(), t, t) == avg_cjwe(pick(c, l), pick(d, r)));
        }
    }
  }
}

TEST_CASE("joint examples") {
  const RingSpec f2 = RingSpec::field(2);
  const CycMatrix t = transform_matrix(f2);
  const Code rep(f2, 2, {{1, 1}});
  const Enumerator j = cjwe::cjwe(rep, rep);
  CHECK(mw_joint(j, Duality::Same, Duality::Same, 2, 2, t) == j);
  CHECK(mw_joint(j, Duality::Same, Duality::Dual, 2, 2, t) == j);
  const Code e1(f2, 2, {{1, 0}}), full = Code::full(f2, 2);
  CHECK(mw_joint(cjwe::cjwe(e1, full), Duality::Dual, Duality::Dual, 2, 4, t) == cjwe::cjwe(Code(f2, 2, {{0, 1}}), Code::zero(f2, 2)));
  const Code e2(f2, 2, {{0, 1}});
  CHECK(mw_avg_joint(avg_cjwe(e1, e2), Duality::Dual, Duality::Same, 2, 2, t, t) == avg_cjwe(e2, e2));
  const Code tc = tetracode();
  const Enumerator at = avg_cjwe(tc, tc);
  const CycMatrix t3 = transform_matrix(tc.ring());
  CHECK(mw_avg_joint(at, Duality::Dual, Duality::Dual, 9, 9, t3, t3) == at);
}

TEST_CASE("inconsistent sizes surface as NotRational or wrong values") {
  const Code c(RingSpec::field(3), 2, {{1, 2}});
  const Enumerator w = cwe(c);
  const Enumerator off = mw_cwe(w, 9, transform_matrix(c.ring()));
  CHECK_FALSE(off == cwe(c.dual()));
  CHECK_THROWS_AS(demote_to_rational([] {
                    Enumerator p(RingSpec::field(3), 1, 1);
                    p.add_term(CompositionTensor::from_dense(3, 1, std::vector<std::uint32_t>{1, 0, 0}),
                               CycQ::zeta_pow(3, 1));
                    return p;
                  }()),
                  NotRational);
}
