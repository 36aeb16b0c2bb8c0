// Copyright 2026 The Perspect Authors
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

#include "bench_common.hpp"
#include "perspect/formula.hpp"

namespace {

using perspect::bench::random_kb;

void BM_BuildUnitGraph(benchmark::State& state) {
  const auto kb = random_kb(7, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto graph = perspect::UnitGraph::build(kb);
    benchmark::DoNotOptimize(graph);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildUnitGraph)->Range(16, 256)->Complexity();

void BM_EnumerateSkeletons(benchmark::State& state) {
  const auto kb = random_kb(7, static_cast<int>(state.range(0)));
  const auto graph = perspect::UnitGraph::build(kb);
  const auto target = perspect::Unit::atom(perspect::make_atom("money"));
  for (auto _ : state) {
    auto skeletons = perspect::enumerate_skeletons(graph, kb, target, 4);
    benchmark::DoNotOptimize(skeletons);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateSkeletons)->Range(16, 128)->Complexity();

void BM_EnumerateFormulas(benchmark::State& state) {
  const auto kb = random_kb(7, 64);
  const auto graph = perspect::UnitGraph::build(kb);
  perspect::Mention mention;
  mention.value = 1.31e8;
  mention.unit = perspect::Unit::atom(perspect::make_atom("money"));
  for (auto _ : state) {
    auto formulas = perspect::enumerate_formulas(kb, graph, mention);
    benchmark::DoNotOptimize(formulas);
  }
}
BENCHMARK(BM_EnumerateFormulas);

}  // namespace
