// Copyright 2026 The fairmatch Authors
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

#include "fairmatch/bvn.hpp"
#include "fairmatch/estimate.hpp"
#include "fairmatch/flowlp.hpp"
#include "fairmatch/gen.hpp"

using namespace fairmatch;

static void BM_ExactFairnessCdf(benchmark::State& state) {
  const Instance inst = gen_mixture(static_cast<int>(state.range(0)), 4, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_fairness_cdf(inst));
  }
}
BENCHMARK(BM_ExactFairnessCdf)->Arg(8)->Arg(16)->Arg(32);

static void BM_EstimateFairnessCdf(benchmark::State& state) {
  const Instance inst = gen_mixture(16, 4, 1);
  const auto m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_fairness_cdf(inst, m, 7));
  }
}
BENCHMARK(BM_EstimateFairnessCdf)->Arg(100)->Arg(1000);

static void BM_SolveFairLpDirect(benchmark::State& state) {
  const Instance inst = gen_mixture(static_cast<int>(state.range(0)), 4, 1);
  const FairnessCdf l = exact_fairness_cdf(inst);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_fair_lp(inst, l, Rat(1, 2), false));
  }
}
BENCHMARK(BM_SolveFairLpDirect)->Arg(8)->Arg(16)->Arg(32);

static void BM_SolveFairLpCompact(benchmark::State& state) {
  const Instance inst = gen_mixture(static_cast<int>(state.range(0)), 4, 1);
  const FairnessCdf l = exact_fairness_cdf(inst);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_fair_lp(inst, l, Rat(1, 2), true));
  }
}
BENCHMARK(BM_SolveFairLpCompact)->Arg(8)->Arg(16)->Arg(32);

static void BM_BvnDecompose(benchmark::State& state) {
  const Instance inst = gen_mixture(static_cast<int>(state.range(0)), 4, 1);
  const FairnessCdf l = exact_fairness_cdf(inst);
  const FairLpResult lp = solve_fair_lp(inst, l, Rat(1, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(lp.marginals));
  }
}
BENCHMARK(BM_BvnDecompose)->Arg(8)->Arg(16)->Arg(32);

BENCHMARK_MAIN();
