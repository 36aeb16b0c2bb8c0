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

#include "perspect/ranker.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "json.hpp"

#include "perspect/errors.hpp"
#include "perspect/rng.hpp"

namespace perspect {

namespace {

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// log(1 + exp(z)) without overflow.
double softplus(double z) {
  if (z > 0.0) return z + std::log1p(std::exp(-z));
  return std::log1p(std::exp(z));
}

}  // namespace

FeatureGroups FeatureGroups::parse(std::string_view spec) {
  FeatureGroups g{false, false, false, false};
  for (char c : spec) {
    switch (c) {
      case 'P': case 'p': g.proximity = true; break;
      case 'F': case 'f': g.familiarity = true; break;
      case 'C': case 'c': g.compatibility = true; break;
      case 'S': case 's': g.similarity = true; break;
      case '+': case ' ': case ',': break;
      default:
        throw ValidationError("unknown feature group '" + std::string(1, c) +
                              "' (expected P, F, C, S)");
    }
  }
  return g;
}

std::string FeatureGroups::to_string() const {
  std::string out;
  if (proximity) out += 'P';
  if (familiarity) out += 'F';
  if (compatibility) out += 'C';
  if (similarity) out += 'S';
  return out;
}

FeatureVector featurize(const Mention& mention, const Formula& formula, const KnowledgeBase& kb,
                        const WordVectorStore* store, const FeatureGroups& groups,
                        bool use_cosine) {
  FeatureVector fv;
  if (groups.proximity) {
    const double mag = std::log10(formula.multiplier);
    const double sign = mag > 0.0 ? 1.0 : (mag < 0.0 ? -1.0 : 0.0);
    if (sign != 0.0) fv["prox:sign"] = sign;
    if (mag != 0.0) fv["prox:mag"] = std::fabs(mag);
  }
  if (groups.familiarity) {
    for (const std::string& id : formula.tuple_ids) fv["fam:" + id] = 1.0;
  }
  if (groups.compatibility) {
    for (std::size_t i = 0; i < formula.tuple_ids.size(); ++i) {
      for (std::size_t j = i + 1; j < formula.tuple_ids.size(); ++j) {
        const std::string& a = std::min(formula.tuple_ids[i], formula.tuple_ids[j]);
        const std::string& b = std::max(formula.tuple_ids[i], formula.tuple_ids[j]);
        fv["compat:" + a + "|" + b] = 1.0;
      }
    }
  }
  if (groups.similarity && store) {
    const std::vector<double> sentence_vec = store->text_vector(mention.sentence);
    double total = 0.0;
    for (const std::string& id : formula.tuple_ids) {
      const NumericTuple* t = kb.find(id);
      if (!t) throw ValidationError("unknown tuple id '" + id + "' in formula");
      const std::vector<double> desc_vec = store->text_vector(t->description);
      total += use_cosine ? cosine_similarity(sentence_vec, desc_vec)
                          : similarity(sentence_vec, desc_vec);
    }
    const double mean = total / static_cast<double>(formula.tuple_ids.size());
    if (mean != 0.0) fv["sim"] = mean;
  }
  return fv;
}

namespace {

struct SparseRow {
  std::vector<std::pair<std::size_t, double>> entries;
};

struct FeatureIndex {
  std::vector<std::string> names;  // sorted
  std::vector<SparseRow> rows;
};

FeatureIndex index_features(const std::vector<FeatureVector>& features) {
  std::set<std::string> names;
  for (const FeatureVector& fv : features) {
    for (const auto& [name, value] : fv) names.insert(name);
  }
  FeatureIndex out;
  out.names.assign(names.begin(), names.end());
  std::map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < out.names.size(); ++i) position.emplace(out.names[i], i);
  out.rows.resize(features.size());
  for (std::size_t i = 0; i < features.size(); ++i) {
    for (const auto& [name, value] : features[i]) {
      out.rows[i].entries.emplace_back(position.at(name), value);
    }
  }
  return out;
}

// Returns the objective; fills grad (size |w|) and grad_b.
double dense_loss_and_gradient(const std::vector<bool>& labels, const std::vector<SparseRow>& rows,
                               const std::vector<double>& w, double b, double l2,
                               std::vector<double>& grad, double& grad_b) {
  const std::size_t n = labels.size();
  std::fill(grad.begin(), grad.end(), 0.0);
  grad_b = 0.0;
  double loss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double z = b;
    for (const auto& [k, x] : rows[i].entries) z += w[k] * x;
    const double y = labels[i] ? 1.0 : 0.0;
    loss += softplus(z) - y * z;
    const double residual = sigmoid(z) - y;
    for (const auto& [k, x] : rows[i].entries) grad[k] += residual * x;
    grad_b += residual;
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  double w_sq = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    w_sq += w[k] * w[k];
    grad[k] = (grad[k] + l2 * w[k]) * inv_n;
  }
  grad_b *= inv_n;
  return (loss + 0.5 * l2 * w_sq) * inv_n;
}

}  // namespace

LrGradient lr_loss_and_gradient(const std::vector<bool>& labels,
                                const std::vector<FeatureVector>& features,
                                const std::map<std::string, double>& weights, double bias,
                                double l2) {
  if (labels.size() != features.size()) {
    throw ValidationError("labels and feature vectors differ in length");
  }
  if (labels.empty()) throw ValidationError("no examples");
  const FeatureIndex index = index_features(features);
  std::vector<double> w(index.names.size(), 0.0);
  for (std::size_t k = 0; k < index.names.size(); ++k) {
    auto it = weights.find(index.names[k]);
    if (it != weights.end()) w[k] = it->second;
  }
  std::vector<double> grad(w.size(), 0.0);
  LrGradient out;
  out.loss = dense_loss_and_gradient(labels, index.rows, w, bias, l2, grad, out.bias_gradient);
  for (std::size_t k = 0; k < w.size(); ++k) out.weight_gradient[index.names[k]] = grad[k];
  return out;
}

TrainResult train(const std::vector<bool>& labels, const std::vector<FeatureVector>& features,
                  const TrainConfig& config, const FeatureGroups& groups) {
  if (labels.size() != features.size()) {
    throw ValidationError("labels and feature vectors differ in length");
  }
  if (labels.empty()) throw ValidationError("no training examples");
  const bool first = labels.front();
  if (std::all_of(labels.begin(), labels.end(), [&](bool y) { return y == first; })) {
    throw ValidationError("training data contains a single class");
  }

  const FeatureIndex index = index_features(features);
  std::vector<double> w(index.names.size(), 0.0);
  double b = 0.0;

  TrainResult result;
  std::vector<double> grad(w.size(), 0.0);
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    double grad_b = 0.0;
    const double loss = dense_loss_and_gradient(labels, index.rows, w, b, config.l2, grad, grad_b);
    result.loss_history.push_back(loss);

    double max_norm = std::fabs(grad_b);
    for (double g : grad) max_norm = std::max(max_norm, std::fabs(g));
    result.epochs_run = epoch;
    if (max_norm < config.tol) {
      result.converged = true;
      break;
    }
    for (std::size_t k = 0; k < w.size(); ++k) w[k] -= config.step * grad[k];
    b -= config.step * grad_b;
    result.epochs_run = epoch + 1;
  }

  result.model.bias = b;
  result.model.l2 = config.l2;
  result.model.groups = groups;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] != 0.0) result.model.weights.emplace(index.names[k], w[k]);
  }
  return result;
}

double predict(const RankModel& model, const FeatureVector& features) {
  double z = model.bias;
  for (const auto& [name, value] : features) {
    auto it = model.weights.find(name);
    if (it != model.weights.end()) z += it->second * value;
  }
  return sigmoid(z);
}

Metrics binary_metrics(const std::vector<int>& gold, const std::vector<int>& predicted) {
  if (gold.size() != predicted.size()) throw ValidationError("metrics: length mismatch");
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (predicted[i] == 1 && gold[i] == 1) ++tp;
    if (predicted[i] == 1 && gold[i] == 0) ++fp;
    if (predicted[i] == 0 && gold[i] == 1) ++fn;
  }
  Metrics m;
  m.precision = (tp + fp) > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
  m.recall = (tp + fn) > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
  m.f1 = (m.precision + m.recall) > 0.0
             ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  return m;
}

CvResult cross_validate(const std::vector<bool>& labels,
                        const std::vector<FeatureVector>& features, int folds,
                        const TrainConfig& config, std::uint64_t seed,
                        const FeatureGroups& groups) {
  if (folds < 2) throw ValidationError("cross-validation needs k >= 2");
  if (labels.size() != features.size()) throw ValidationError("labels/features length mismatch");
  const std::size_t n = labels.size();

  std::vector<std::size_t> positives;
  std::vector<std::size_t> negatives;
  for (std::size_t i = 0; i < n; ++i) (labels[i] ? positives : negatives).push_back(i);
  if (positives.size() < static_cast<std::size_t>(folds) ||
      negatives.size() < static_cast<std::size_t>(folds)) {
    throw ValidationError("fold too small to stratify");
  }
  Rng rng_pos(mix_seed(seed, "cv-pos"));
  Rng rng_neg(mix_seed(seed, "cv-neg"));
  rng_pos.shuffle(positives);
  rng_neg.shuffle(negatives);

  std::vector<int> fold_of(n, 0);
  for (std::size_t i = 0; i < positives.size(); ++i) fold_of[positives[i]] = static_cast<int>(i % folds);
  for (std::size_t i = 0; i < negatives.size(); ++i) fold_of[negatives[i]] = static_cast<int>(i % folds);

  CvResult result;
  result.gold.resize(n, 0);
  result.predicted.resize(n, 0);
  result.probability.resize(n, 0.0);
  double macro_p = 0.0;
  double macro_r = 0.0;
  double macro_f = 0.0;

  for (int f = 0; f < folds; ++f) {
    std::vector<bool> train_labels;
    std::vector<FeatureVector> train_features;
    std::vector<std::size_t> test_indices;
    for (std::size_t i = 0; i < n; ++i) {
      if (fold_of[i] == f) {
        test_indices.push_back(i);
      } else {
        train_labels.push_back(labels[i]);
        train_features.push_back(features[i]);
      }
    }
    const TrainResult trained = train(train_labels, train_features, config, groups);
    std::vector<int> fold_gold;
    std::vector<int> fold_pred;
    for (std::size_t i : test_indices) {
      const double p = predict(trained.model, features[i]);
      result.gold[i] = labels[i] ? 1 : 0;
      result.probability[i] = p;
      result.predicted[i] = p >= 0.5 ? 1 : 0;
      fold_gold.push_back(result.gold[i]);
      fold_pred.push_back(result.predicted[i]);
    }
    const Metrics fold_metrics = binary_metrics(fold_gold, fold_pred);
    macro_p += fold_metrics.precision;
    macro_r += fold_metrics.recall;
    macro_f += fold_metrics.f1;
  }

  result.micro = binary_metrics(result.gold, result.predicted);
  result.macro.precision = macro_p / folds;
  result.macro.recall = macro_r / folds;
  result.macro.f1 = macro_f / folds;
  return result;
}

CvResult cross_validate(const std::vector<LabeledExample>& examples, const KnowledgeBase& kb,
                        const WordVectorStore* store, int folds, const FeatureGroups& groups,
                        const TrainConfig& config, std::uint64_t seed) {
  std::vector<bool> labels;
  std::vector<FeatureVector> features;
  labels.reserve(examples.size());
  features.reserve(examples.size());
  for (const LabeledExample& ex : examples) {
    labels.push_back(ex.useful);
    features.push_back(featurize(ex.mention, ex.formula, kb, store, groups, config.use_cosine));
  }
  return cross_validate(labels, features, folds, config, seed, groups);
}

std::vector<std::pair<Formula, double>> score_formulas(const RankModel& model,
                                                       const Mention& mention,
                                                       const std::vector<Formula>& formulas,
                                                       const KnowledgeBase& kb,
                                                       const WordVectorStore* store, int top) {
  std::vector<std::pair<Formula, double>> scored;
  scored.reserve(formulas.size());
  const auto sim_kind = model.meta.find("similarity");
  const bool use_cosine = sim_kind != model.meta.end() && sim_kind->second == "cosine";
  for (const Formula& f : formulas) {
    scored.emplace_back(
        f, predict(model, featurize(mention, f, kb, store, model.groups, use_cosine)));
  }
  std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first.tuple_ids < b.first.tuple_ids;
  });
  if (top > 0 && scored.size() > static_cast<std::size_t>(top)) {
    scored.resize(static_cast<std::size_t>(top));
  }
  return scored;
}

double paired_bootstrap(const std::vector<int>& gold, const std::vector<int>& preds_a,
                        const std::vector<int>& preds_b, BootstrapMetric metric, int resamples,
                        std::uint64_t seed) {
  if (gold.size() != preds_a.size() || gold.size() != preds_b.size()) {
    throw ValidationError("paired bootstrap: length mismatch");
  }
  if (gold.size() < 2) throw ValidationError("paired bootstrap needs at least 2 items");
  if (resamples < 1) throw ValidationError("paired bootstrap needs at least 1 resample");

  const std::size_t n = gold.size();
  auto evaluate = [&](const std::vector<int>& preds, const std::vector<std::size_t>& idx) {
    if (metric == BootstrapMetric::accuracy) {
      std::size_t correct = 0;
      for (std::size_t i : idx) {
        if (preds[i] == gold[i]) ++correct;
      }
      return static_cast<double>(correct) / static_cast<double>(idx.size());
    }
    std::vector<int> g;
    std::vector<int> p;
    g.reserve(idx.size());
    p.reserve(idx.size());
    for (std::size_t i : idx) {
      g.push_back(gold[i]);
      p.push_back(preds[i]);
    }
    return binary_metrics(g, p).f1;
  };

  Rng rng(mix_seed(seed, "paired-bootstrap"));
  std::vector<std::size_t> idx(n);
  int at_or_below_zero = 0;
  for (int r = 0; r < resamples; ++r) {
    for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<std::size_t>(rng.below(n));
    const double delta = evaluate(preds_a, idx) - evaluate(preds_b, idx);
    if (delta <= 0.0) ++at_or_below_zero;
  }
  return static_cast<double>(at_or_below_zero) / static_cast<double>(resamples);
}

RankModel RankModel::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open model file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
    RankModel model;
    model.bias = doc.at("bias").get<double>();
    model.l2 = doc.at("l2").get<double>();
    model.groups = FeatureGroups::parse(doc.at("groups").get<std::string>());
    for (const auto& [name, value] : doc.at("weights").items()) {
      model.weights[name] = value.get<double>();
    }
    if (doc.contains("meta")) {
      for (const auto& [key, value] : doc.at("meta").items()) {
        model.meta[key] = value.is_string() ? value.get<std::string>() : value.dump();
      }
    }
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void RankModel::save(const std::string& path) const {
  nlohmann::json doc;
  doc["bias"] = bias;
  doc["l2"] = l2;
  doc["groups"] = groups.to_string();
  doc["weights"] = nlohmann::json::object();
  for (const auto& [name, value] : weights) doc["weights"][name] = value;
  doc["meta"] = nlohmann::json::object();
  for (const auto& [key, value] : meta) doc["meta"][key] = value;
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write model file: " + path);
  out << doc.dump(2) << '\n';
}

}  // namespace perspect
