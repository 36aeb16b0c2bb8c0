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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "perspect/embed.hpp"
#include "perspect/formula.hpp"
#include "perspect/kb.hpp"
#include "perspect/mention.hpp"

namespace perspect {

// Sparse feature map; zero-valued entries are never stored.
using FeatureVector = std::map<std::string, double>;

// The four feature families: Proximity, Familiarity, Compatibility,
// Similarity.
struct FeatureGroups {
  bool proximity = true;
  bool familiarity = true;
  bool compatibility = true;
  bool similarity = true;

  // "P", "P+F", "PFCS", "p+f+c" all accepted.
  static FeatureGroups parse(std::string_view spec);
  std::string to_string() const;

  bool operator==(const FeatureGroups&) const = default;
};

struct LabeledExample {
  Mention mention;
  Formula formula;
  bool useful = false;
};

struct RankModel {
  double bias = 0.0;
  std::map<std::string, double> weights;
  double l2 = 1.0;
  FeatureGroups groups;
  std::map<std::string, std::string> meta;

  static RankModel load(const std::string& path);
  void save(const std::string& path) const;
};

// Emits, per enabled group:
//   P: prox:sign = sign(log10 m), prox:mag = |log10 m|
//   F: fam:<id> = 1 per tuple
//   C: compat:<idA>|<idB> = 1 per unordered tuple pair, ids sorted
//   S: sim = mean over tuples of dot(wvec(sentence), wvec(description))
// `store` may be null when the similarity group is disabled. `use_cosine`
// swaps the dot product for cosine similarity; off by default.
FeatureVector featurize(const Mention& mention, const Formula& formula, const KnowledgeBase& kb,
                        const WordVectorStore* store, const FeatureGroups& groups,
                        bool use_cosine = false);

struct TrainConfig {
  double l2 = 1.0;
  double step = 0.1;
  int epochs = 500;
  double tol = 1e-6;
  std::uint64_t seed = 0;
  bool use_cosine = false;
};

struct TrainResult {
  RankModel model;
  std::vector<double> loss_history;  // objective value at the start of each epoch
  bool converged = false;
  int epochs_run = 0;
};

// Objective and gradient at the given parameters:
//   loss = mean_i [softplus(z_i) - y_i z_i] + l2/(2n) |w|^2,  z_i = w.x_i + b.
// The same computation drives train(); exposed so the gradient can be
// checked against finite differences of the loss.
struct LrGradient {
  double loss = 0.0;
  std::map<std::string, double> weight_gradient;
  double bias_gradient = 0.0;
};

LrGradient lr_loss_and_gradient(const std::vector<bool>& labels,
                                const std::vector<FeatureVector>& features,
                                const std::map<std::string, double>& weights, double bias,
                                double l2);

// Full-batch gradient descent on the mean L2-regularized negative
// log-likelihood (the regularizer excludes the bias). Zero initialization,
// so training is deterministic. Throws on single-class input.
TrainResult train(const std::vector<bool>& labels, const std::vector<FeatureVector>& features,
                  const TrainConfig& config, const FeatureGroups& groups = {});

double predict(const RankModel& model, const FeatureVector& features);

struct Metrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Positive-class metrics; precision is 0 when nothing is predicted positive.
Metrics binary_metrics(const std::vector<int>& gold, const std::vector<int>& predicted);

struct CvResult {
  Metrics micro;  // pooled over folds
  Metrics macro;  // mean of per-fold metrics
  std::vector<int> gold;        // aligned with the input examples
  std::vector<int> predicted;   // prediction made when the example was held out
  std::vector<double> probability;
};

// Label-stratified k-fold cross-validation, deterministic by seed.
CvResult cross_validate(const std::vector<LabeledExample>& examples, const KnowledgeBase& kb,
                        const WordVectorStore* store, int folds, const FeatureGroups& groups,
                        const TrainConfig& config, std::uint64_t seed);

// Same, with featurization already done.
CvResult cross_validate(const std::vector<bool>& labels,
                        const std::vector<FeatureVector>& features, int folds,
                        const TrainConfig& config, std::uint64_t seed,
                        const FeatureGroups& groups = {});

// Probabilities from `predict`, sorted descending; ties break on the
// tuple-id list. `top` <= 0 keeps everything.
std::vector<std::pair<Formula, double>> score_formulas(const RankModel& model,
                                                       const Mention& mention,
                                                       const std::vector<Formula>& formulas,
                                                       const KnowledgeBase& kb,
                                                       const WordVectorStore* store,
                                                       int top = 0);

enum class BootstrapMetric { f1, accuracy };

// One-sided paired bootstrap: p = fraction of resamples (with replacement)
// where metric(A) - metric(B) <= 0. Small p means A's advantage over B on
// the full set is unlikely to be resampling noise.
double paired_bootstrap(const std::vector<int>& gold, const std::vector<int>& preds_a,
                        const std::vector<int>& preds_b,
                        BootstrapMetric metric = BootstrapMetric::f1, int resamples = 10000,
                        std::uint64_t seed = 0);

}  // namespace perspect
