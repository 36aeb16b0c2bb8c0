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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "perspect/formula.hpp"
#include "perspect/kb.hpp"

namespace perspect {

// A rendered formula. Text is nonempty and ends with a period.
struct Perspective {
  std::string text;
  Formula formula;
};

// A formula with one crowd-written reference description.
struct DescriptionPair {
  Formula formula;
  std::string reference;
};

// A multiplier snapped to the nearest human-friendly candidate: integers
// 1..100 and unit fractions 1/2..1/100, by relative error. `about` is set
// when the snap moved the value by more than 0.2% relative error.
struct SnappedMultiplier {
  long long k = 1;           // the integer, or the fraction's denominator
  bool reciprocal = false;   // true for 1/k
  bool about = false;
  double candidate = 1.0;    // numeric value of the snapped multiplier

  // "" for 1, "twice", "5 times", "half", "1/5th"; no "about" prefix.
  std::string phrase() const;
};

SnappedMultiplier snap_multiplier(double multiplier);

// Full multiplier phrase including the "about" prefix, e.g. "about twice",
// "1/5th", "about" (snapped to 1 but inexact), "" (exactly 1).
std::string render_multiplier(double multiplier);

// Joins the tuple descriptions verbatim with neutral prepositions:
//   [about ][<multiplier> of ]<d0>[ for <d1>][ for <d2>]... .
// The leading "of" disappears together with an empty multiplier phrase.
Perspective realize_baseline(const Formula& formula, const KnowledgeBase& kb);

// Splits whole skeleton groups (same tuple multiset) into test until the
// test fraction of pairs is reached; train and test skeleton sets are
// disjoint for every seed. Throws when fewer than 2 skeletons exist.
std::pair<std::vector<DescriptionPair>, std::vector<DescriptionPair>> split_by_skeleton(
    const std::vector<DescriptionPair>& pairs, double test_fraction, std::uint64_t seed);

// Lowercase, separate punctuation into standalone tokens, split on spaces.
std::vector<std::string> bleu_tokenize(std::string_view text);

// Corpus-level BLEU in [0, 100]: n-grams 1..4, uniform weights, standard
// brevity penalty, add-one smoothing on the n >= 2 precisions.
double bleu(const std::vector<std::vector<std::string>>& references,
            const std::vector<std::string>& hypotheses);

}  // namespace perspect
