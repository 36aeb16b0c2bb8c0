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

#include <string>
#include <string_view>
#include <vector>

#include "perspect/formula.hpp"
#include "perspect/mention.hpp"
#include "perspect/ranker.hpp"
#include "perspect/textgen.hpp"

namespace perspect {

// JSONL record schemas:
//   mention:          {"sentence","start","end","surface","value","unit"}
//   formula:          {"multiplier","tuples","value","unit"}
//   labeled example:  mention fields + {"formula": {...}, "useful": bool}
//   description pair: {"formula": {...}, "reference"}
// Loaders validate record invariants (span/surface agreement, positive
// values, matching units) and report the offending line number.

std::string mention_to_jsonl(const Mention& mention);
Mention mention_from_jsonl(std::string_view line);

std::string formula_to_jsonl(const Formula& formula);
Formula formula_from_jsonl(std::string_view line);

std::string labeled_example_to_jsonl(const LabeledExample& example);
LabeledExample labeled_example_from_jsonl(std::string_view line);

std::string description_pair_to_jsonl(const DescriptionPair& pair);
DescriptionPair description_pair_from_jsonl(std::string_view line);

std::vector<Mention> load_mentions(const std::string& path);
std::vector<LabeledExample> load_labeled_examples(const std::string& path);
std::vector<DescriptionPair> load_description_pairs(const std::string& path);

void save_mentions(const std::string& path, const std::vector<Mention>& mentions);
void save_labeled_examples(const std::string& path, const std::vector<LabeledExample>& examples);
void save_description_pairs(const std::string& path, const std::vector<DescriptionPair>& pairs);

}  // namespace perspect
