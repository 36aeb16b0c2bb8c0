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

#include "perspect/formula.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "perspect/errors.hpp"

namespace perspect {

namespace {

// Depth-first walk over unit-graph paths from `current` to `target`. Each
// step cancels one denominator atom by choosing a tuple from the edge label.
// Atoms are cancelled in non-decreasing order and tuples for equal atoms in
// non-decreasing id order, so every multiset is visited exactly once.
void walk_paths(const UnitGraph& graph, const Unit& target, const Unit& current,
                const UnitAtom* last_atom, const std::string* last_id,
                std::vector<std::string>& chosen, const std::string& head_id,
                std::set<std::vector<std::string>>& found) {
  if (current == target) {
    std::vector<std::string> ids = chosen;
    ids.push_back(head_id);
    std::sort(ids.begin(), ids.end());
    found.insert(std::move(ids));
    return;
  }
  for (std::size_t edge_index : graph.out_edges(current)) {
    const UnitGraphEdge& edge = graph.edges()[edge_index];
    if (last_atom && edge.cancelled < *last_atom) continue;
    const bool same_atom = last_atom && edge.cancelled == *last_atom;
    for (const std::string& id : edge.tuple_ids) {
      if (same_atom && last_id && id < *last_id) continue;
      chosen.push_back(id);
      walk_paths(graph, target, edge.to, &edge.cancelled, &id, chosen, head_id, found);
      chosen.pop_back();
    }
  }
}

}  // namespace

std::vector<FormulaSkeleton> enumerate_skeletons(const UnitGraph& graph, const KnowledgeBase& kb,
                                                 const Unit& target, int max_tuples) {
  if (max_tuples < 1) throw ValidationError("max_tuples must be >= 1");
  std::set<std::vector<std::string>> found;
  for (const NumericTuple& t : kb.tuples()) {
    if (t.unit == target) found.insert({t.id});
  }
  if (target.denominator_free()) {
    for (const NumericTuple& head : kb.tuples()) {
      const std::size_t den_size = head.unit.denominator().size();
      if (den_size == 0) continue;
      if (head.unit.numerator() != target.numerator()) continue;
      if (static_cast<int>(den_size) + 1 > max_tuples) continue;
      std::vector<std::string> chosen;
      walk_paths(graph, target, head.unit, nullptr, nullptr, chosen, head.id, found);
    }
  }
  std::vector<FormulaSkeleton> out;
  out.reserve(found.size());
  for (const std::vector<std::string>& ids : found) out.push_back(FormulaSkeleton{ids});
  return out;
}

Formula fit_multiplier(const FormulaSkeleton& skeleton, const KnowledgeBase& kb,
                       double target_value) {
  if (skeleton.tuple_ids.empty()) throw ValidationError("empty formula skeleton");
  if (!(target_value > 0.0)) throw ValidationError("target value must be positive");

  // Head first (the unique tuple with a denominator, if any), rest by id.
  std::vector<const NumericTuple*> tuples;
  tuples.reserve(skeleton.tuple_ids.size());
  for (const std::string& id : skeleton.tuple_ids) {
    const NumericTuple* t = kb.find(id);
    if (!t) throw ValidationError("unknown tuple id '" + id + "'");
    tuples.push_back(t);
  }
  std::stable_sort(tuples.begin(), tuples.end(),
                   [](const NumericTuple* a, const NumericTuple* b) {
                     const bool a_head = !a->unit.denominator_free();
                     const bool b_head = !b->unit.denominator_free();
                     if (a_head != b_head) return a_head;
                     return a->id < b->id;
                   });

  Formula f;
  double product = 1.0;
  Unit unit;
  for (const NumericTuple* t : tuples) {
    f.tuple_ids.push_back(t->id);
    product *= t->value;
    unit = multiply(unit, t->unit);
  }
  f.multiplier = target_value / product;
  f.value = f.multiplier * product;
  f.unit = unit;
  return f;
}

std::vector<Formula> prune_by_proximity(std::vector<Formula> formulas, double lo, double hi) {
  if (!(0.0 < lo && lo < hi)) throw ValidationError("invalid proximity bounds");
  std::vector<Formula> out;
  out.reserve(formulas.size());
  for (Formula& f : formulas) {
    if (f.multiplier >= lo && f.multiplier <= hi) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Formula> enumerate_formulas(const KnowledgeBase& kb, const UnitGraph& graph,
                                        const Mention& mention, const EnumerationConfig& config) {
  std::vector<Formula> formulas;
  for (const FormulaSkeleton& skeleton :
       enumerate_skeletons(graph, kb, mention.unit, config.max_tuples)) {
    formulas.push_back(fit_multiplier(skeleton, kb, mention.value));
  }
  if (config.prune) formulas = prune_by_proximity(std::move(formulas), config.lo, config.hi);
  std::sort(formulas.begin(), formulas.end(),
            [](const Formula& a, const Formula& b) { return a.tuple_ids < b.tuple_ids; });
  return formulas;
}

const std::vector<double>& decade_grid_values() {
  static const std::vector<double> values = [] {
    std::vector<double> v;
    for (int e = -7; e <= 10; ++e) v.push_back(std::pow(10.0, e));
    return v;
  }();
  return values;
}

std::vector<Formula> enumerate_grid(const KnowledgeBase& kb, const UnitGraph& graph,
                                    const std::vector<Unit>& units,
                                    const std::vector<double>& values,
                                    const EnumerationConfig& config) {
  std::vector<Formula> out;
  for (const Unit& unit : units) {
    for (double value : values) {
      if (!(value > 0.0)) throw ValidationError("grid values must be positive");
      Mention probe;
      probe.value = value;
      probe.unit = unit;
      std::vector<Formula> cell = enumerate_formulas(kb, graph, probe, config);
      out.insert(out.end(), std::make_move_iterator(cell.begin()),
                 std::make_move_iterator(cell.end()));
    }
  }
  return out;
}

std::optional<Formula> closest_tuple_baseline(const KnowledgeBase& kb, const Mention& mention) {
  const std::span<const std::string> ids = kb.ids_with_unit(mention.unit);
  if (ids.empty()) return std::nullopt;
  const std::string* best = nullptr;
  double best_distance = 0.0;
  for (const std::string& id : ids) {
    const NumericTuple* t = kb.find(id);
    const double distance = std::fabs(std::log10(mention.value / t->value));
    if (!best || distance < best_distance) {
      best = &id;
      best_distance = distance;
    }
  }
  return fit_multiplier(FormulaSkeleton{{*best}}, kb, mention.value);
}

}  // namespace perspect
