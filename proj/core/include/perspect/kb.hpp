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

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "perspect/units.hpp"

namespace perspect {

// One knowledge-base fact. `value` is always stored in base units; the
// description keeps its natural article ("the cost of an employee", "a week")
// because realization concatenates it verbatim.
struct NumericTuple {
  std::string id;
  std::string description;
  double value = 0.0;
  Unit unit;
  std::string source;
};

class KnowledgeBase {
 public:
  // JSONL file, one tuple per line: {"id", "description", "value", "unit",
  // "source"?}. Unit strings resolve through the surface table, so records
  // may use surface atoms ("money/person/year"); values are converted to
  // base units. All malformed lines are reported together, with line numbers.
  static KnowledgeBase load(const std::string& path, const SurfaceTable& table);

  static KnowledgeBase from_tuples(std::vector<NumericTuple> tuples);

  const std::vector<NumericTuple>& tuples() const { return tuples_; }
  const NumericTuple* find(std::string_view id) const;

  // Tuple ids with exactly this canonical unit, sorted by id.
  std::span<const std::string> ids_with_unit(const Unit& unit) const;

  // Distinct canonical units, sorted.
  std::vector<Unit> units() const;

  // Canonical JSONL; load(serialize()) round-trips exactly.
  std::string serialize() const;
  void save(const std::string& path) const;

 private:
  std::vector<NumericTuple> tuples_;
  std::map<Unit, std::vector<std::string>> by_unit_;
};

// Directed edge: `from` has `cancelled` in its denominator and `to` is `from`
// with one copy of that atom removed. The label carries every tuple whose
// unit is exactly the cancelled atom, so traversing the edge multiplies one
// of those tuples into a formula.
struct UnitGraphEdge {
  Unit from;
  Unit to;
  UnitAtom cancelled;
  std::vector<std::string> tuple_ids;
};

// Graph over units used for formula enumeration. Every edge removes exactly
// one denominator atom, so denominator size strictly decreases along any
// path and the graph is acyclic.
class UnitGraph {
 public:
  static UnitGraph build(const KnowledgeBase& kb);

  const std::set<Unit>& vertices() const { return vertices_; }
  const std::vector<UnitGraphEdge>& edges() const { return edges_; }
  std::span<const std::size_t> out_edges(const Unit& vertex) const;

 private:
  std::set<Unit> vertices_;
  std::vector<UnitGraphEdge> edges_;
  std::map<Unit, std::vector<std::size_t>> adjacency_;
};

inline KnowledgeBase load_kb(const std::string& path, const SurfaceTable& table) {
  return KnowledgeBase::load(path, table);
}

inline UnitGraph build_unit_graph(const KnowledgeBase& kb) { return UnitGraph::build(kb); }

}  // namespace perspect
