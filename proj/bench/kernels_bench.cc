// Copyright 2026 The Arena Authors. All rights reserved.
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

// Serial reference against the OpenMP kernels.
//   ./arena_bench --benchmark_filter=Census
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <vector>

#include "arena/analysis/equity.h"
#include "arena/games/cards.h"
#include "arena/games/hand_eval.h"

namespace arena {
namespace {

Execution ExecOf(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
}

void Label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial"
                                     : "parallel/" + std::to_string(omp_get_max_threads()));
}

void BM_FiveCardCensus(benchmark::State& state) {
  const Execution exec = ExecOf(state);
  for (auto _ : state) benchmark::DoNotOptimize(FiveCardCensus(exec));
  state.SetItemsProcessed(state.iterations() * 2598960);
  Label(state);
}
BENCHMARK(BM_FiveCardCensus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_McEquity(benchmark::State& state) {
  const Execution exec = ExecOf(state);
  const auto hole = ParseCards("AH AD");
  const auto flop = ParseCards("KC 7S 2D");
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(McEquity(hole, flop, 100000, ++seed, exec));
  state.SetItemsProcessed(state.iterations() * 100000);
  Label(state);
}
BENCHMARK(BM_McEquity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ExactEquity(benchmark::State& state) {
  const Execution exec = ExecOf(state);
  const auto hole = ParseCards("7H 2C");
  const auto flop = ParseCards("AS KD 9S");
  for (auto _ : state) benchmark::DoNotOptimize(ExactEquity(hole, flop, exec));
  state.SetItemsProcessed(state.iterations() * 1070190);
  Label(state);
}
BENCHMARK(BM_ExactEquity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace
}  // namespace arena

BENCHMARK_MAIN();
