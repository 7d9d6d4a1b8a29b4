// Copyright 2026 The hcone Authors
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

#include "hcone/decompose.hpp"
#include "hcone/generators.hpp"
#include "hcone/lp.hpp"
#include "hcone/oracle.hpp"

namespace hcone {
namespace {

void BM_DecomposeWorkedExample(benchmark::State& state) {
  const Grading g(3);
  const HVector h = parse_hvector("3,3,2,4,2,1,2,1");
  for (auto _ : state) benchmark::DoNotOptimize(decompose(g, h));
}
BENCHMARK(BM_DecomposeWorkedExample);

// Sum of the whole catalogue: a member whose decomposition touches every
// branch of the state machine.
void BM_DecomposeCatalogueSum(benchmark::State& state) {
  const Grading g(static_cast<std::int64_t>(state.range(0)));
  const std::int64_t d = state.range(1);
  std::vector<std::pair<Rational, HVector>> terms;
  for (const auto& p : enumerate_ex(g, d)) terms.emplace_back(Rational(1), expand(g, p));
  const HVector h = linear_combine(terms);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(g, h));
}
BENCHMARK(BM_DecomposeCatalogueSum)->Args({2, 8})->Args({3, 12})->Args({4, 16});

void BM_EnumerateEx(benchmark::State& state) {
  const Grading g(2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ex(g, state.range(0)));
}
BENCHMARK(BM_EnumerateEx)->DenseRange(4, 12, 4);

void BM_MembershipOracle(benchmark::State& state) {
  const Grading g(3);
  const HVector h = parse_hvector("3,3,2,4,2,1,2,1");
  const auto backend = static_cast<LpBackend>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(membership_oracle(g, h, backend));
}
BENCHMARK(BM_MembershipOracle)
    ->Arg(static_cast<int>(LpBackend::kFourierMotzkin))
    ->Arg(static_cast<int>(LpBackend::kSimplex));

void BM_ConeMembershipViaEx(benchmark::State& state) {
  const Grading g(2);
  const HVector h = parse_hvector("2,1,2,0,1");
  for (auto _ : state) benchmark::DoNotOptimize(cone_membership_via_ex(g, h));
}
BENCHMARK(BM_ConeMembershipViaEx);

}  // namespace
}  // namespace hcone

BENCHMARK_MAIN();
