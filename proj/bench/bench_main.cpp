// Copyright 2026 The coinrig Authors
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

// Serial reference versus OpenMP kernels.

#include <benchmark/benchmark.h>

#include "coinrig/rigidity.hpp"
#include "coinrig/theorems.hpp"

namespace coinrig {
namespace {

Execution policy(const benchmark::State& state) {
  return state.range(0) ? Execution::parallel : Execution::serial;
}

void BM_CrossValidate(benchmark::State& state) {
  XvalOptions opt;
  opt.samples = 100;
  opt.exec = policy(state);
  for (auto _ : state) benchmark::DoNotOptimize(cross_validate(opt).mismatches);
}
BENCHMARK(BM_CrossValidate)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GenericRankBaseGraph(benchmark::State& state) {
  const auto f = fixture("fig3-1");
  const auto spec = CoincidenceSpec::of(f.T);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        generic_rank(f.graph, spec, 2, 8, 42, RankMethod::exact_rational, policy(state)).rank);
  }
}
BENCHMARK(BM_GenericRankBaseGraph)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GenericRankBipartiteSpace(benchmark::State& state) {
  const auto f = fixture("k55");
  const auto spec = CoincidenceSpec::of(f.T);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        generic_rank(f.graph, spec, 3, 8, 42, RankMethod::exact_rational, policy(state)).rank);
  }
}
BENCHMARK(BM_GenericRankBipartiteSpace)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ConjectureSearch(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(conjecture_search(7, 4, 100, 3, policy(state)).tested);
  }
}
BENCHMARK(BM_ConjectureSearch)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace coinrig

BENCHMARK_MAIN();
