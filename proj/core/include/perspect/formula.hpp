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

#include <optional>
#include <string>
#include <vector>

#include "perspect/kb.hpp"
#include "perspect/mention.hpp"
#include "perspect/units.hpp"

namespace perspect {

// A formula "sans multiplier": the tuple multiset, stored sorted by id.
struct FormulaSkeleton {
  std::vector<std::string> tuple_ids;

  auto operator<=>(const FormulaSkeleton&) const = default;
};

// multiplier * product of tuples. value == multiplier * prod(values) and
// unit == prod(units), both canonical. tuple_ids keep the head tuple first.
struct Formula {
  double multiplier = 1.0;
  std::vector<std::string> tuple_ids;
  double value = 0.0;
  Unit unit;
};

struct EnumerationConfig {
  int max_tuples = 4;
  bool prune = true;
  double lo = 0.01;
  double hi = 100.0;
};

// All tuple multisets {t0} + M where t0's unit is target with M's atoms as
// extra denominator factors, every tuple in M has a single-atom unit, the
// multiset of those atoms equals t0's denominator, and the size cap holds.
// Single tuples whose unit equals the target are always included. Found by
// walking unit-graph paths that end at the target vertex; deduplicated as
// multisets and returned sorted.
std::vector<FormulaSkeleton> enumerate_skeletons(const UnitGraph& graph, const KnowledgeBase& kb,
                                                 const Unit& target, int max_tuples = 4);

// Sets the multiplier so the formula's value equals target_value. The head
// tuple is placed first, remaining tuples sorted by id.
Formula fit_multiplier(const FormulaSkeleton& skeleton, const KnowledgeBase& kb,
                       double target_value);

// Keeps formulas with lo <= multiplier <= hi (inclusive); order preserved.
std::vector<Formula> prune_by_proximity(std::vector<Formula> formulas, double lo = 0.01,
                                        double hi = 100.0);

// enumerate_skeletons -> fit_multiplier -> optional prune, sorted by the
// tuple-id list.
std::vector<Formula> enumerate_formulas(const KnowledgeBase& kb, const UnitGraph& graph,
                                        const Mention& mention,
                                        const EnumerationConfig& config = {});

// 1e-7 .. 1e10 by decades.
const std::vector<double>& decade_grid_values();

// Union of pruned enumerate_formulas over the unit x value grid; regenerates
// the candidate set used for description collection.
std::vector<Formula> enumerate_grid(const KnowledgeBase& kb, const UnitGraph& graph,
                                    const std::vector<Unit>& units,
                                    const std::vector<double>& values,
                                    const EnumerationConfig& config = {});

// Non-compositional baseline: the single same-unit tuple minimizing
// |log10(mention.value / t.value)|, ties to the smaller id. Absent when no
// tuple matches the unit.
std::optional<Formula> closest_tuple_baseline(const KnowledgeBase& kb, const Mention& mention);

}  // namespace perspect
