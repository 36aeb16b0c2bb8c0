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
#include "perspect/ranker.hpp"
#include "perspect/rng.hpp"

namespace {

using namespace perspect;

std::pair<std::vector<bool>, std::vector<FeatureVector>> synthetic_features(std::size_t n) {
  Rng rng(11);
  std::vector<bool> labels;
  std::vector<FeatureVector> features;
  for (std::size_t i = 0; i < n; ++i) {
    FeatureVector fv;
    fv["prox:mag"] = rng.next_double() * 2.0;
    fv["fam:t" + std::to_string(rng.below(40))] = 1.0;
    fv["fam:t" + std::to_string(rng.below(40))] = 1.0;
    labels.push_back(rng.next_double() < 0.5);
    features.push_back(std::move(fv));
  }
  labels[0] = true;
  labels[1] = false;
  return {labels, features};
}

void BM_TrainEpochs(benchmark::State& state) {
  const auto [labels, features] = synthetic_features(1000);
  TrainConfig config;
  config.epochs = static_cast<int>(state.range(0));
  config.tol = 0.0;
  for (auto _ : state) {
    auto result = train(labels, features, config);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_TrainEpochs)->Arg(10)->Arg(100);

void BM_FeaturizeAndPredict(benchmark::State& state) {
  const auto kb = bench::random_kb(7, 64);
  const auto graph = UnitGraph::build(kb);
  Mention mention;
  mention.sentence = "the deal was worth a lot of money last year";
  mention.value = 1.31e8;
  mention.unit = Unit::atom(make_atom("money"));
  const auto formulas = enumerate_formulas(kb, graph, mention);
  RankModel model;
  model.groups = FeatureGroups::parse("PFC");
  model.weights["prox:mag"] = -1.0;
  for (auto _ : state) {
    auto scored = score_formulas(model, mention, formulas, kb, nullptr);
    benchmark::DoNotOptimize(scored);
  }
}
BENCHMARK(BM_FeaturizeAndPredict);

}  // namespace
