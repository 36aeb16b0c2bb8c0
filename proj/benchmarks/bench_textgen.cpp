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

#include <string>
#include <vector>

#include "perspect/rng.hpp"
#include "perspect/textgen.hpp"

namespace {

using namespace perspect;

void BM_Bleu(benchmark::State& state) {
  Rng rng(3);
  const std::vector<std::string> vocab = {"the", "cost", "of", "an", "employee", "for",
                                          "population", "texas", "a", "week", "about", "twice"};
  std::vector<std::vector<std::string>> references;
  std::vector<std::string> hypotheses;
  for (int i = 0; i < static_cast<int>(state.range(0)); ++i) {
    std::string ref;
    std::string hyp;
    for (int j = 0; j < 10; ++j) {
      ref += vocab[rng.below(vocab.size())] + " ";
      hyp += vocab[rng.below(vocab.size())] + " ";
    }
    references.push_back({ref});
    hypotheses.push_back(hyp);
  }
  for (auto _ : state) {
    double score = bleu(references, hypotheses);
    benchmark::DoNotOptimize(score);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Bleu)->Range(64, 1024)->Complexity();

void BM_RenderMultiplier(benchmark::State& state) {
  Rng rng(5);
  for (auto _ : state) {
    auto s = render_multiplier(0.01 + rng.next_double() * 99.0);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_RenderMultiplier);

}  // namespace
