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

#include "perspect/units.hpp"

namespace {

void BM_ParseUnit(benchmark::State& state) {
  for (auto _ : state) {
    auto u = perspect::parse_unit("money/time/person");
    benchmark::DoNotOptimize(u);
  }
}
BENCHMARK(BM_ParseUnit);

void BM_UnitMultiply(benchmark::State& state) {
  const auto a = perspect::parse_unit("money/time/person");
  const auto b = perspect::parse_unit("time*person");
  for (auto _ : state) {
    auto u = perspect::multiply(a, b);
    benchmark::DoNotOptimize(u);
  }
}
BENCHMARK(BM_UnitMultiply);

void BM_UnitRoundTrip(benchmark::State& state) {
  const auto u = perspect::parse_unit("money/time/person/car");
  for (auto _ : state) {
    auto s = perspect::to_string(u);
    auto v = perspect::parse_unit(s);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_UnitRoundTrip);

}  // namespace
