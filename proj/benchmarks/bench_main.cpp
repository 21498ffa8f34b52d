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

#include <benchmark/benchmark.h>

#include "cjwe/cjwe.hpp"

namespace {

using namespace cjwe;

Code hexacode() {
  return Code(RingSpec::field(4), 6, {{1, 0, 0, 1, 2, 2}, {0, 1, 0, 2, 1, 2}, {0, 0, 1, 2, 2, 1}},
              InnerProduct::Hermitian);
}

Code ternary(std::size_t n) {
  std::vector<Word> gens;
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    Word w(n, 0);
    w[i] = 1;
    w[i + 1] = 2;
    gens.push_back(w);
  }
  return Code(RingSpec::field(3), n, gens);
}

void BM_Cwe(benchmark::State& state) {
  const Code c = ternary(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cwe(c));
}
BENCHMARK(BM_Cwe)->Arg(4)->Arg(8)->Arg(12);

void BM_Cjwe(benchmark::State& state) {
  const Code c = hexacode();
  for (auto _ : state) benchmark::DoNotOptimize(cjwe::cjwe(c, c));
}
BENCHMARK(BM_Cjwe);

void BM_Average(benchmark::State& state) {
  const Code c = ternary(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(avg_cjwe(c, c));
}
BENCHMARK(BM_Average)->Arg(4)->Arg(6)->Arg(8);

void BM_AverageBruteForce(benchmark::State& state) {
  const Code c = ternary(static_cast<std::size_t>(state.range(0)));
  const Code both[] = {c, c};
  for (auto _ : state) benchmark::DoNotOptimize(avg_cjwe_bruteforce(both));
}
BENCHMARK(BM_AverageBruteForce)->Arg(4)->Arg(6);

void BM_MacWilliams(benchmark::State& state) {
  const Code c = hexacode();
  const CycMatrix t = transform_matrix(c.ring(), c.inner_product());
  const Enumerator w = cwe(c);
  for (auto _ : state) benchmark::DoNotOptimize(mw_cwe(w, c.size(), t));
}
BENCHMARK(BM_MacWilliams);

void BM_MacWilliamsJoint(benchmark::State& state) {
  const Code c = ternary(4);
  const CycMatrix t = transform_matrix(c.ring(), c.inner_product());
  const Enumerator j = cjwe::cjwe(c, c);
  for (auto _ : state)
    benchmark::DoNotOptimize(mw_joint(j, Duality::Dual, Duality::Dual, c.size(), c.size(), t));
}
BENCHMARK(BM_MacWilliamsJoint);

void BM_EnumerateSelfDual(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_selfdual(SelfDualType::III, n));
}
BENCHMARK(BM_EnumerateSelfDual)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
