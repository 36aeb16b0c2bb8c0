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

#include "perspect/jsonl.hpp"

#include <fstream>
#include <functional>

#include "json.hpp"

#include "perspect/errors.hpp"

namespace perspect {

namespace {

nlohmann::json mention_to_json(const Mention& m) {
  return nlohmann::json{{"sentence", m.sentence}, {"start", m.begin}, {"end", m.end},
                        {"surface", m.surface},   {"value", m.value}, {"unit", to_string(m.unit)}};
}

Mention mention_from_json(const nlohmann::json& rec) {
  Mention m;
  m.sentence = rec.at("sentence").get<std::string>();
  m.begin = rec.at("start").get<std::size_t>();
  m.end = rec.at("end").get<std::size_t>();
  m.surface = rec.at("surface").get<std::string>();
  m.value = rec.at("value").get<double>();
  m.unit = parse_unit(rec.at("unit").get<std::string>());
  if (m.begin > m.end || m.end > m.sentence.size()) {
    throw ValidationError("mention span lies outside the sentence");
  }
  if (m.sentence.substr(m.begin, m.end - m.begin) != m.surface) {
    throw ValidationError("mention surface does not match the sentence span");
  }
  if (!(m.value > 0.0)) throw ValidationError("mention value must be positive");
  return m;
}

nlohmann::json formula_to_json(const Formula& f) {
  return nlohmann::json{{"multiplier", f.multiplier},
                        {"tuples", f.tuple_ids},
                        {"value", f.value},
                        {"unit", to_string(f.unit)}};
}

Formula formula_from_json(const nlohmann::json& rec) {
  Formula f;
  f.multiplier = rec.at("multiplier").get<double>();
  f.tuple_ids = rec.at("tuples").get<std::vector<std::string>>();
  f.value = rec.at("value").get<double>();
  f.unit = parse_unit(rec.at("unit").get<std::string>());
  if (!(f.multiplier > 0.0)) throw ValidationError("formula multiplier must be positive");
  if (f.tuple_ids.empty()) throw ValidationError("formula has no tuples");
  return f;
}

template <typename T>
std::vector<T> load_lines(const std::string& path,
                          const std::function<T(const nlohmann::json&)>& parse) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::vector<T> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse(nlohmann::json::parse(line)));
    } catch (const std::exception& e) {
      throw ValidationError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

LabeledExample labeled_example_from_json(const nlohmann::json& rec) {
  LabeledExample ex;
  ex.mention = mention_from_json(rec);
  ex.formula = formula_from_json(rec.at("formula"));
  ex.useful = rec.at("useful").get<bool>();
  if (ex.formula.unit != ex.mention.unit) {
    throw ValidationError("formula unit does not match mention unit");
  }
  return ex;
}

DescriptionPair description_pair_from_json(const nlohmann::json& rec) {
  DescriptionPair pair;
  pair.formula = formula_from_json(rec.at("formula"));
  pair.reference = rec.at("reference").get<std::string>();
  if (pair.reference.empty()) throw ValidationError("empty reference description");
  return pair;
}

}  // namespace

std::string mention_to_jsonl(const Mention& mention) { return mention_to_json(mention).dump(); }

Mention mention_from_jsonl(std::string_view line) {
  return mention_from_json(nlohmann::json::parse(line));
}

std::string formula_to_jsonl(const Formula& formula) { return formula_to_json(formula).dump(); }

Formula formula_from_jsonl(std::string_view line) {
  return formula_from_json(nlohmann::json::parse(line));
}

std::string labeled_example_to_jsonl(const LabeledExample& example) {
  nlohmann::json rec = mention_to_json(example.mention);
  rec["formula"] = formula_to_json(example.formula);
  rec["useful"] = example.useful;
  return rec.dump();
}

LabeledExample labeled_example_from_jsonl(std::string_view line) {
  return labeled_example_from_json(nlohmann::json::parse(line));
}

std::string description_pair_to_jsonl(const DescriptionPair& pair) {
  nlohmann::json rec;
  rec["formula"] = formula_to_json(pair.formula);
  rec["reference"] = pair.reference;
  return rec.dump();
}

DescriptionPair description_pair_from_jsonl(std::string_view line) {
  return description_pair_from_json(nlohmann::json::parse(line));
}

std::vector<Mention> load_mentions(const std::string& path) {
  return load_lines<Mention>(path, mention_from_json);
}

std::vector<LabeledExample> load_labeled_examples(const std::string& path) {
  return load_lines<LabeledExample>(path, labeled_example_from_json);
}

std::vector<DescriptionPair> load_description_pairs(const std::string& path) {
  return load_lines<DescriptionPair>(path, description_pair_from_json);
}

namespace {

template <typename T>
void save_lines(const std::string& path, const std::vector<T>& items,
                const std::function<std::string(const T&)>& serialize) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write file: " + path);
  for (const T& item : items) out << serialize(item) << '\n';
}

}  // namespace

void save_mentions(const std::string& path, const std::vector<Mention>& mentions) {
  save_lines<Mention>(path, mentions, mention_to_jsonl);
}

void save_labeled_examples(const std::string& path, const std::vector<LabeledExample>& examples) {
  save_lines<LabeledExample>(path, examples, labeled_example_to_jsonl);
}

void save_description_pairs(const std::string& path, const std::vector<DescriptionPair>& pairs) {
  save_lines<DescriptionPair>(path, pairs, description_pair_to_jsonl);
}

}  // namespace perspect
