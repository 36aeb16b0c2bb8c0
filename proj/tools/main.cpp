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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "perspect/embed.hpp"
#include "perspect/errors.hpp"
#include "perspect/formula.hpp"
#include "perspect/jsonl.hpp"
#include "perspect/kb.hpp"
#include "perspect/mention.hpp"
#include "perspect/ranker.hpp"
#include "perspect/textgen.hpp"
#include "perspect/units.hpp"

namespace {

using namespace perspect;

// Exit codes: 0 success, 2 usage, 3 data/validation, 4 empty result.
struct EmptyResult : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataOptions {
  std::string kb_path = "data/kb.jsonl";
  std::string units_path = "data/units.jsonl";
  std::string vectors_path;
  std::string stopwords_path;
};

void add_data_options(CLI::App* cmd, DataOptions* opts, bool with_vectors = false) {
  cmd->add_option("--kb", opts->kb_path, "Knowledge base JSONL file");
  cmd->add_option("--units", opts->units_path, "Surface unit table JSONL file");
  if (with_vectors) {
    cmd->add_option("--vectors", opts->vectors_path, "Word vector file (textual format)");
    cmd->add_option("--stopwords", opts->stopwords_path, "Stopword file, one token per line");
  }
}

std::optional<WordVectorStore> load_store(const DataOptions& opts) {
  if (opts.vectors_path.empty()) return std::nullopt;
  WordVectorStore store = WordVectorStore::load(opts.vectors_path);
  if (!opts.stopwords_path.empty()) store.load_stopwords(opts.stopwords_path);
  return store;
}

Mention select_mention(const std::vector<Mention>& mentions, const std::string& span) {
  if (mentions.empty()) throw EmptyResult("no mention found in the sentence");
  if (span.empty()) return mentions.front();
  const auto colon = span.find(':');
  if (colon == std::string::npos) throw UsageError("--span must be start:end");
  const std::size_t begin = std::stoul(span.substr(0, colon));
  const std::size_t end = std::stoul(span.substr(colon + 1));
  for (const Mention& m : mentions) {
    if (m.begin == begin && m.end == end) return m;
  }
  throw EmptyResult("no mention found at span " + span);
}

nlohmann::json formula_json(const Formula& f) {
  return nlohmann::json::parse(formula_to_jsonl(f));
}

int run_perspective(const DataOptions& data, const std::string& sentence, const std::string& span,
                    const std::string& model_path, int top, const EnumerationConfig& config,
                    bool baseline_only) {
  const SurfaceTable table = SurfaceTable::load(data.units_path);
  const KnowledgeBase kb = KnowledgeBase::load(data.kb_path, table);
  const Mention mention = select_mention(extract_mentions(sentence, table), span);

  if (baseline_only) {
    const std::optional<Formula> f = closest_tuple_baseline(kb, mention);
    if (!f) {
      throw EmptyResult("no formula for unit '" + to_string(mention.unit) +
                        "' exists within the knowledge base");
    }
    const Perspective p = realize_baseline(*f, kb);
    nlohmann::json rec{{"text", p.text}, {"formula", formula_json(p.formula)}};
    std::cout << rec.dump() << '\n';
    return 0;
  }

  if (model_path.empty()) throw UsageError("--model is required (or pass --baseline)");
  const UnitGraph graph = UnitGraph::build(kb);
  const std::vector<Formula> formulas = enumerate_formulas(kb, graph, mention, config);
  if (formulas.empty()) {
    throw EmptyResult("no formula for unit '" + to_string(mention.unit) +
                      "' exists within the knowledge base");
  }
  const RankModel model = RankModel::load(model_path);
  const std::optional<WordVectorStore> store = load_store(data);
  if (model.groups.similarity && !store) {
    std::cerr << "note: model uses the similarity feature but no --vectors given; "
                 "scoring without it\n";
  }
  const auto scored =
      score_formulas(model, mention, formulas, kb, store ? &*store : nullptr, top);
  for (const auto& [formula, score] : scored) {
    const Perspective p = realize_baseline(formula, kb);
    nlohmann::json rec{{"text", p.text}, {"score", score}, {"formula", formula_json(formula)}};
    std::cout << rec.dump() << '\n';
  }
  return 0;
}

int run_enumerate(const DataOptions& data, const std::string& sentence, const std::string& span,
                  double value, const std::string& unit_text, bool grid,
                  const EnumerationConfig& config) {
  const SurfaceTable table = SurfaceTable::load(data.units_path);
  const KnowledgeBase kb = KnowledgeBase::load(data.kb_path, table);
  const UnitGraph graph = UnitGraph::build(kb);

  if (grid) {
    for (const Formula& f : enumerate_grid(kb, graph, kb.units(), decade_grid_values(), config)) {
      std::cout << formula_to_jsonl(f) << '\n';
    }
    return 0;
  }

  Mention mention;
  if (!unit_text.empty()) {
    if (!(value > 0.0)) throw UsageError("--value must be positive");
    mention.value = value;
    mention.unit = resolve_unit(unit_text, table).unit;
  } else if (!sentence.empty()) {
    mention = select_mention(extract_mentions(sentence, table), span);
  } else {
    throw UsageError("provide a sentence, or --value with --unit, or --grid");
  }
  const std::vector<Formula> formulas = enumerate_formulas(kb, graph, mention, config);
  if (formulas.empty()) {
    throw EmptyResult("no formula for unit '" + to_string(mention.unit) +
                      "' exists within the knowledge base");
  }
  for (const Formula& f : formulas) std::cout << formula_to_jsonl(f) << '\n';
  return 0;
}

int run_harvest(const DataOptions& data, const std::string& corpus_path, std::size_t per_bin,
                std::uint64_t seed, bool extremes_only, const std::string& out_path) {
  const SurfaceTable table = SurfaceTable::load(data.units_path);
  std::ifstream in(corpus_path);
  if (!in) throw ValidationError("cannot open corpus: " + corpus_path);
  std::vector<Mention> mentions;
  std::string line;
  while (std::getline(in, line)) {
    for (Mention& m : extract_mentions(line, table)) {
      if (extremes_only && !(m.value > 20.0 || m.value < 0.1)) continue;
      mentions.push_back(std::move(m));
    }
  }
  const std::vector<Mention> sampled =
      stratified_sample(mentions, default_magnitude_bins(), per_bin, seed);
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw ValidationError("cannot write: " + out_path);
    out = &file;
  }
  for (const Mention& m : sampled) *out << mention_to_jsonl(m) << '\n';
  return 0;
}

int run_train(const DataOptions& data, const std::string& data_path,
              const std::string& model_out, const std::string& groups_spec,
              const TrainConfig& config) {
  const SurfaceTable table = SurfaceTable::load(data.units_path);
  const KnowledgeBase kb = KnowledgeBase::load(data.kb_path, table);
  const std::optional<WordVectorStore> store = load_store(data);
  const FeatureGroups groups = FeatureGroups::parse(groups_spec);
  const std::vector<LabeledExample> examples = load_labeled_examples(data_path);

  std::vector<bool> labels;
  std::vector<FeatureVector> features;
  for (const LabeledExample& ex : examples) {
    labels.push_back(ex.useful);
    features.push_back(featurize(ex.mention, ex.formula, kb, store ? &*store : nullptr, groups,
                                 config.use_cosine));
  }
  TrainResult result = train(labels, features, config, groups);
  result.model.meta["examples"] = std::to_string(examples.size());
  result.model.meta["epochs_run"] = std::to_string(result.epochs_run);
  result.model.meta["converged"] = result.converged ? "true" : "false";
  if (config.use_cosine) result.model.meta["similarity"] = "cosine";
  result.model.save(model_out);

  std::vector<int> gold;
  std::vector<int> pred;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    gold.push_back(labels[i] ? 1 : 0);
    pred.push_back(predict(result.model, features[i]) >= 0.5 ? 1 : 0);
  }
  const Metrics m = binary_metrics(gold, pred);
  std::printf("examples\tepochs\tconverged\tloss\tprecision\trecall\tf1\n");
  std::printf("%zu\t%d\t%s\t%.6f\t%.4f\t%.4f\t%.4f\n", examples.size(), result.epochs_run,
              result.converged ? "yes" : "no",
              result.loss_history.empty() ? 0.0 : result.loss_history.back(), m.precision,
              m.recall, m.f1);
  return 0;
}

int run_generate(const DataOptions& data, const std::string& formulas_path) {
  const SurfaceTable table = SurfaceTable::load(data.units_path);
  const KnowledgeBase kb = KnowledgeBase::load(data.kb_path, table);
  std::ifstream in(formulas_path);
  if (!in) throw ValidationError("cannot open formula file: " + formulas_path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Formula f;
    try {
      f = formula_from_jsonl(line);
    } catch (const std::exception& e) {
      throw ValidationError(formulas_path + ":" + std::to_string(line_no) + ": " + e.what());
    }
    const Perspective p = realize_baseline(f, kb);
    nlohmann::json rec{{"text", p.text}, {"formula", formula_json(p.formula)}};
    std::cout << rec.dump() << '\n';
  }
  return 0;
}

int run_eval_selection(const DataOptions& data, const std::string& data_path, int folds,
                       const std::string& ablate_spec, std::uint64_t seed, bool macro,
                       int resamples, const TrainConfig& config) {
  const SurfaceTable table = SurfaceTable::load(data.units_path);
  const KnowledgeBase kb = KnowledgeBase::load(data.kb_path, table);
  const std::optional<WordVectorStore> store = load_store(data);
  const std::vector<LabeledExample> examples = load_labeled_examples(data_path);

  std::vector<std::string> ablations;
  {
    std::string current;
    for (char c : ablate_spec) {
      if (c == ',' || c == ';') {
        if (!current.empty()) ablations.push_back(current);
        current.clear();
      } else {
        current += c;
      }
    }
    if (!current.empty()) ablations.push_back(current);
  }
  if (ablations.empty()) throw UsageError("--ablate lists at least one feature group set");

  std::vector<CvResult> results;
  for (const std::string& spec : ablations) {
    const FeatureGroups groups = FeatureGroups::parse(spec);
    results.push_back(cross_validate(examples, kb, store ? &*store : nullptr, folds, groups,
                                     config, seed));
  }

  std::printf("ablation\tprecision\trecall\tf1\tp_vs_%s\n", ablations.front().c_str());
  for (std::size_t i = 0; i < ablations.size(); ++i) {
    const Metrics& m = macro ? results[i].macro : results[i].micro;
    if (i == 0) {
      std::printf("%s\t%.4f\t%.4f\t%.4f\t-\n", ablations[i].c_str(), m.precision, m.recall, m.f1);
    } else {
      const double p = paired_bootstrap(results[i].gold, results[i].predicted,
                                        results.front().predicted, BootstrapMetric::f1,
                                        resamples, seed);
      std::printf("%s\t%.4f\t%.4f\t%.4f\t%.4f\n", ablations[i].c_str(), m.precision, m.recall,
                  m.f1, p);
    }
  }
  return 0;
}

int run_eval_generation(const DataOptions& data, const std::string& pairs_path,
                        double test_fraction, std::uint64_t seed) {
  const SurfaceTable table = SurfaceTable::load(data.units_path);
  const KnowledgeBase kb = KnowledgeBase::load(data.kb_path, table);
  const std::vector<DescriptionPair> pairs = load_description_pairs(pairs_path);
  const auto [train_pairs, test_pairs] = split_by_skeleton(pairs, test_fraction, seed);

  // Group the test pairs by identical formulas so every realization is
  // scored against all of that formula's references.
  std::map<std::string, std::vector<std::size_t>> by_formula;
  for (std::size_t i = 0; i < test_pairs.size(); ++i) {
    by_formula[formula_to_jsonl(test_pairs[i].formula)].push_back(i);
  }
  std::vector<std::vector<std::string>> references;
  std::vector<std::string> hypotheses;
  for (const auto& [key, members] : by_formula) {
    std::vector<std::string> refs;
    for (std::size_t i : members) refs.push_back(test_pairs[i].reference);
    references.push_back(std::move(refs));
    hypotheses.push_back(realize_baseline(test_pairs[members.front()].formula, kb).text);
  }
  const double score = bleu(references, hypotheses);
  std::printf("pairs\ttrain_pairs\ttest_pairs\ttest_formulas\tbleu\n");
  std::printf("%zu\t%zu\t%zu\t%zu\t%.4f\n", pairs.size(), train_pairs.size(), test_pairs.size(),
              hypotheses.size(), score);
  return 0;
}

// CSV of mention, ranked system output and baseline output, for re-running
// a human preference study on fresh sentences.
int run_eval_export(const DataOptions& data, const std::string& corpus_path,
                    const std::string& model_path, const std::string& out_path,
                    const EnumerationConfig& config) {
  const SurfaceTable table = SurfaceTable::load(data.units_path);
  const KnowledgeBase kb = KnowledgeBase::load(data.kb_path, table);
  const UnitGraph graph = UnitGraph::build(kb);
  const RankModel model = RankModel::load(model_path);
  const std::optional<WordVectorStore> store = load_store(data);
  std::ifstream in(corpus_path);
  if (!in) throw ValidationError("cannot open corpus: " + corpus_path);

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw ValidationError("cannot write: " + out_path);
    out = &file;
  }
  auto csv_quote = [](const std::string& field) {
    std::string quoted = "\"";
    for (char c : field) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    quoted += '"';
    return quoted;
  };
  *out << "sentence,surface,value,unit,system_perspective,baseline_perspective\n";
  std::string line;
  while (std::getline(in, line)) {
    const auto mentions = extract_mentions(line, table);
    if (mentions.empty()) continue;
    const Mention& mention = mentions.front();
    const auto formulas = enumerate_formulas(kb, graph, mention, config);
    std::string system_text;
    if (!formulas.empty()) {
      const auto scored =
          score_formulas(model, mention, formulas, kb, store ? &*store : nullptr, 1);
      system_text = realize_baseline(scored.front().first, kb).text;
    }
    std::string baseline_text;
    if (const auto baseline = closest_tuple_baseline(kb, mention)) {
      baseline_text = realize_baseline(*baseline, kb).text;
    }
    *out << csv_quote(mention.sentence) << ',' << csv_quote(mention.surface) << ','
         << mention.value << ',' << csv_quote(to_string(mention.unit)) << ','
         << csv_quote(system_text) << ',' << csv_quote(baseline_text) << '\n';
  }
  return 0;
}

int run_kb_validate(const DataOptions& data) {
  const SurfaceTable table = SurfaceTable::load(data.units_path);
  const KnowledgeBase kb = KnowledgeBase::load(data.kb_path, table);
  std::printf("tuples\tunits\n%zu\t%zu\n", kb.tuples().size(), kb.units().size());
  std::printf("unit\tcount\n");
  for (const Unit& u : kb.units()) {
    std::printf("%s\t%zu\n", to_string(u).c_str(), kb.ids_with_unit(u).size());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"perspect: put numeric mentions in perspective with a knowledge base"};
  app.require_subcommand(1);

  int exit_code = 0;
  auto run = [&exit_code](auto&& fn) {
    return [&exit_code, fn]() { exit_code = fn(); };
  };

  // perspective
  auto* perspective = app.add_subcommand(
      "perspective", "Rank formulas for a sentence's mention and render the top perspectives");
  {
    static DataOptions data;
    static std::string sentence, span, model_path;
    static int top = 3;
    static EnumerationConfig config;
    static bool no_prune = false, baseline_only = false;
    perspective->add_option("sentence", sentence, "Sentence containing a numeric mention")
        ->required();
    add_data_options(perspective, &data, true);
    perspective->add_option("--model", model_path, "Trained model JSON file");
    perspective->add_option("--top", top, "Number of perspectives to emit")
        ->check(CLI::PositiveNumber);
    perspective->add_option("--span", span, "Select the mention at start:end");
    perspective->add_option("--max-tuples", config.max_tuples, "Maximum tuples per formula");
    perspective->add_flag("--no-prune", no_prune, "Keep formulas with out-of-range multipliers");
    perspective->add_option("--lo", config.lo, "Lower multiplier bound");
    perspective->add_option("--hi", config.hi, "Upper multiplier bound");
    perspective->add_flag("--baseline", baseline_only,
                          "Use the numerically-closest-tuple baseline instead of the ranker");
    perspective->callback(run([&] {
      config.prune = !no_prune;
      return run_perspective(data, sentence, span, model_path, top, config, baseline_only);
    }));
  }

  // baseline
  auto* baseline = app.add_subcommand(
      "baseline", "Render the numerically-closest single-tuple perspective");
  {
    static DataOptions data;
    static std::string sentence, span;
    baseline->add_option("sentence", sentence, "Sentence containing a numeric mention")
        ->required();
    add_data_options(baseline, &data);
    baseline->add_option("--span", span, "Select the mention at start:end");
    baseline->callback(run([&] {
      return run_perspective(data, sentence, span, "", 1, EnumerationConfig{}, true);
    }));
  }

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Emit candidate formulas as JSONL");
  {
    static DataOptions data;
    static std::string sentence, span, unit_text;
    static double value = 0.0;
    static EnumerationConfig config;
    static bool no_prune = false, grid = false;
    enumerate->add_option("sentence", sentence, "Sentence containing a numeric mention");
    add_data_options(enumerate, &data);
    enumerate->add_option("--span", span, "Select the mention at start:end");
    enumerate->add_option("--value", value, "Target value (with --unit)");
    enumerate->add_option("--unit", unit_text, "Target unit (with --value)");
    enumerate->add_flag("--grid", grid, "Enumerate over all KB units and decade values");
    enumerate->add_option("--max-tuples", config.max_tuples, "Maximum tuples per formula");
    enumerate->add_flag("--no-prune", no_prune, "Keep formulas with out-of-range multipliers");
    enumerate->add_option("--lo", config.lo, "Lower multiplier bound");
    enumerate->add_option("--hi", config.hi, "Upper multiplier bound");
    enumerate->callback(run([&] {
      config.prune = !no_prune;
      return run_enumerate(data, sentence, span, value, unit_text, grid, config);
    }));
  }

  // harvest
  auto* harvest = app.add_subcommand(
      "harvest", "Extract mentions from a corpus (one sentence per line) and sample them");
  {
    static DataOptions data;
    static std::string corpus, out_path;
    static std::size_t per_bin = 200;
    static std::uint64_t seed = 0;
    static bool extremes_only = false;
    harvest->add_option("corpus", corpus, "Corpus file, one sentence per line")->required();
    add_data_options(harvest, &data);
    harvest->add_option("--per-bin", per_bin, "Mentions kept per (unit, magnitude) cell");
    harvest->add_option("--seed", seed, "Sampling seed");
    harvest->add_flag("--extremes-only", extremes_only,
                      "Keep only mentions with value > 20 or < 0.1");
    harvest->add_option("--out", out_path, "Write JSONL here instead of stdout");
    harvest->callback(run([&] {
      return run_harvest(data, corpus, per_bin, seed, extremes_only, out_path);
    }));
  }

  // train
  auto* train_cmd = app.add_subcommand("train", "Train the formula ranking model");
  {
    static DataOptions data;
    static std::string data_path, model_out = "model.json", ablate = "PFCS";
    static TrainConfig config;
    train_cmd->add_option("data", data_path, "Labeled example JSONL file")->required();
    add_data_options(train_cmd, &data, true);
    train_cmd->add_option("--model", model_out, "Output model path");
    train_cmd->add_option("--ablate", ablate, "Feature groups to use (subset of PFCS)");
    train_cmd->add_option("--l2", config.l2, "L2 regularization strength");
    train_cmd->add_option("--step", config.step, "Gradient descent step size");
    train_cmd->add_option("--epochs", config.epochs, "Maximum epochs");
    train_cmd->add_option("--tol", config.tol, "Gradient max-norm stopping tolerance");
    train_cmd->add_option("--seed", config.seed, "Seed (training itself is deterministic)");
    train_cmd->add_flag("--cosine", config.use_cosine,
                        "Use cosine similarity for the S feature instead of the dot product");
    train_cmd->callback(run([&] {
      return run_train(data, data_path, model_out, ablate, config);
    }));
  }

  // generate
  auto* generate = app.add_subcommand("generate", "Realize formulas (JSONL) as perspectives");
  {
    static DataOptions data;
    static std::string formulas_path;
    generate->add_option("formulas", formulas_path, "Formula JSONL file")->required();
    add_data_options(generate, &data);
    generate->callback(run([&] { return run_generate(data, formulas_path); }));
  }

  // eval-selection
  auto* eval_selection = app.add_subcommand(
      "eval-selection", "Cross-validated P/R/F1 with feature ablations and bootstrap p-values");
  {
    static DataOptions data;
    static std::string data_path, ablate = "P,P+S,P+F,P+F+C,P+F+C+S";
    static int folds = 10, resamples = 10000;
    static std::uint64_t seed = 0;
    static bool macro = false;
    static TrainConfig config;
    eval_selection->add_option("data", data_path, "Labeled example JSONL file")->required();
    add_data_options(eval_selection, &data, true);
    eval_selection->add_option("--folds", folds, "Number of folds")->check(CLI::Range(2, 1000));
    eval_selection->add_option("--ablate", ablate, "Comma-separated feature group sets");
    eval_selection->add_option("--seed", seed, "Fold split and bootstrap seed");
    eval_selection->add_flag("--macro", macro, "Report macro-averaged metrics over folds");
    eval_selection->add_option("--resamples", resamples, "Bootstrap resamples");
    eval_selection->add_option("--l2", config.l2, "L2 regularization strength");
    eval_selection->add_option("--step", config.step, "Gradient descent step size");
    eval_selection->add_option("--epochs", config.epochs, "Maximum epochs");
    eval_selection->add_flag("--cosine", config.use_cosine,
                             "Use cosine similarity for the S feature");
    eval_selection->callback(run([&] {
      return run_eval_selection(data, data_path, folds, ablate, seed, macro, resamples, config);
    }));
  }

  // eval-generation
  auto* eval_generation = app.add_subcommand(
      "eval-generation", "Skeleton-disjoint split and corpus BLEU of the rule-based realizer");
  {
    static DataOptions data;
    static std::string pairs_path;
    static double test_fraction = 0.2;
    static std::uint64_t seed = 0;
    eval_generation->add_option("pairs", pairs_path, "Description pair JSONL file")->required();
    add_data_options(eval_generation, &data);
    eval_generation->add_option("--test-fraction", test_fraction, "Fraction of pairs for test");
    eval_generation->add_option("--seed", seed, "Split seed");
    eval_generation->callback(run([&] {
      return run_eval_generation(data, pairs_path, test_fraction, seed);
    }));
  }

  // eval-export
  auto* eval_export = app.add_subcommand(
      "eval-export", "Write a CSV of system vs baseline perspectives for a human study");
  {
    static DataOptions data;
    static std::string corpus, model_path, out_path;
    static EnumerationConfig config;
    eval_export->add_option("corpus", corpus, "Corpus file, one sentence per line")->required();
    add_data_options(eval_export, &data, true);
    eval_export->add_option("--model", model_path, "Trained model JSON file")->required();
    eval_export->add_option("--out", out_path, "Write CSV here instead of stdout");
    eval_export->add_option("--max-tuples", config.max_tuples, "Maximum tuples per formula");
    eval_export->callback(run([&] {
      return run_eval_export(data, corpus, model_path, out_path, config);
    }));
  }

  // kb validate
  auto* kb_cmd = app.add_subcommand("kb", "Knowledge base utilities");
  kb_cmd->require_subcommand(1);
  {
    static DataOptions data;
    auto* validate = kb_cmd->add_subcommand("validate", "Validate and summarize the KB");
    add_data_options(validate, &data);
    validate->callback(run([&] { return run_kb_validate(data); }));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const EmptyResult& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return exit_code;
}
