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

#include "perspect/kb.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "perspect/errors.hpp"

namespace perspect {

namespace {

void validate_tuple(const NumericTuple& t, std::vector<std::string>& errors,
                    const std::string& where) {
  if (t.id.empty()) errors.push_back(where + ": empty id");
  if (t.description.empty()) errors.push_back(where + ": empty description for id '" + t.id + "'");
  if (!(t.value > 0.0)) errors.push_back(where + ": non-positive value for id '" + t.id + "'");
}

}  // namespace

KnowledgeBase KnowledgeBase::from_tuples(std::vector<NumericTuple> tuples) {
  std::vector<std::string> errors;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const std::string where = "tuple " + std::to_string(i);
    validate_tuple(tuples[i], errors, where);
    if (!seen.insert(tuples[i].id).second) {
      errors.push_back(where + ": duplicate id '" + tuples[i].id + "'");
    }
  }
  if (!errors.empty()) {
    std::string joined;
    for (const std::string& e : errors) {
      if (!joined.empty()) joined += '\n';
      joined += e;
    }
    throw ValidationError(joined);
  }
  KnowledgeBase kb;
  kb.tuples_ = std::move(tuples);
  for (const NumericTuple& t : kb.tuples_) {
    kb.by_unit_[t.unit].push_back(t.id);
  }
  for (auto& [unit, ids] : kb.by_unit_) {
    std::sort(ids.begin(), ids.end());
  }
  return kb;
}

KnowledgeBase KnowledgeBase::load(const std::string& path, const SurfaceTable& table) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open knowledge base: " + path);
  std::vector<NumericTuple> tuples;
  std::vector<std::string> errors;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = path + ":" + std::to_string(line_no);
    try {
      const nlohmann::json rec = nlohmann::json::parse(line);
      NumericTuple t;
      t.id = rec.at("id").get<std::string>();
      t.description = rec.at("description").get<std::string>();
      const double raw_value = rec.at("value").get<double>();
      const ResolvedUnit resolved = resolve_unit(rec.at("unit").get<std::string>(), table);
      t.unit = resolved.unit;
      t.value = raw_value * resolved.factor;
      if (rec.contains("source")) t.source = rec.at("source").get<std::string>();
      if (t.id.empty()) {
        errors.push_back(where + ": empty id");
        continue;
      }
      if (t.description.empty()) {
        errors.push_back(where + ": empty description");
        continue;
      }
      if (!(raw_value > 0.0)) {
        errors.push_back(where + ": non-positive value");
        continue;
      }
      if (!seen.insert(t.id).second) {
        errors.push_back(where + ": duplicate id '" + t.id + "'");
        continue;
      }
      tuples.push_back(std::move(t));
    } catch (const std::exception& e) {
      errors.push_back(where + ": " + e.what());
    }
  }
  if (!errors.empty()) {
    std::string joined;
    for (const std::string& e : errors) {
      if (!joined.empty()) joined += '\n';
      joined += e;
    }
    throw ValidationError(joined);
  }
  return from_tuples(std::move(tuples));
}

const NumericTuple* KnowledgeBase::find(std::string_view id) const {
  for (const NumericTuple& t : tuples_) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

std::span<const std::string> KnowledgeBase::ids_with_unit(const Unit& unit) const {
  auto it = by_unit_.find(unit);
  if (it == by_unit_.end()) return {};
  return it->second;
}

std::vector<Unit> KnowledgeBase::units() const {
  std::vector<Unit> out;
  out.reserve(by_unit_.size());
  for (const auto& [unit, ids] : by_unit_) out.push_back(unit);
  return out;
}

std::string KnowledgeBase::serialize() const {
  std::string out;
  for (const NumericTuple& t : tuples_) {
    nlohmann::json rec;
    rec["id"] = t.id;
    rec["description"] = t.description;
    rec["value"] = t.value;
    rec["unit"] = to_string(t.unit);
    if (!t.source.empty()) rec["source"] = t.source;
    out += rec.dump();
    out += '\n';
  }
  return out;
}

void KnowledgeBase::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write knowledge base: " + path);
  out << serialize();
}

UnitGraph UnitGraph::build(const KnowledgeBase& kb) {
  UnitGraph g;
  for (const NumericTuple& t : kb.tuples()) g.vertices_.insert(t.unit);

  // Closure over edge targets: cancelling one denominator atom of an
  // existing vertex introduces the target as a vertex of its own.
  std::vector<Unit> worklist(g.vertices_.begin(), g.vertices_.end());
  while (!worklist.empty()) {
    const Unit u = worklist.back();
    worklist.pop_back();
    const std::vector<UnitAtom>& den = u.denominator();
    for (std::size_t i = 0; i < den.size(); ++i) {
      if (i > 0 && den[i] == den[i - 1]) continue;  // one edge per distinct atom
      const std::span<const std::string> ids = kb.ids_with_unit(Unit::atom(den[i]));
      if (ids.empty()) continue;
      std::vector<UnitAtom> new_den = den;
      new_den.erase(new_den.begin() + static_cast<std::ptrdiff_t>(i));
      const Unit to = Unit::from_atoms(u.numerator(), std::move(new_den));
      g.edges_.push_back(UnitGraphEdge{u, to, den[i], {ids.begin(), ids.end()}});
      if (g.vertices_.insert(to).second) worklist.push_back(to);
    }
  }

  std::sort(g.edges_.begin(), g.edges_.end(), [](const UnitGraphEdge& a, const UnitGraphEdge& b) {
    if (a.from != b.from) return a.from < b.from;
    return a.cancelled < b.cancelled;
  });
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    g.adjacency_[g.edges_[i].from].push_back(i);
  }
  return g;
}

std::span<const std::size_t> UnitGraph::out_edges(const Unit& vertex) const {
  auto it = adjacency_.find(vertex);
  if (it == adjacency_.end()) return {};
  return it->second;
}

}  // namespace perspect
