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

#include "perspect/units.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>

#include "json.hpp"

#include "perspect/errors.hpp"

namespace perspect {

namespace {

constexpr std::array<std::string_view, 6> kMeasurableNames = {
    "area", "length", "money", "time", "volume", "weight"};

std::string to_lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool is_identifier(std::string_view token) {
  if (token.empty()) return false;
  if (!(token.front() >= 'a' && token.front() <= 'z')) return false;
  for (char c : token) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (lead) *lead = b;
  return s.substr(b, e - b);
}

// Removes atoms common to both sides (multiset intersection). Inputs sorted.
void cancel(std::vector<UnitAtom>& num, std::vector<UnitAtom>& den) {
  std::vector<UnitAtom> new_num;
  std::vector<UnitAtom> new_den;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < num.size() && j < den.size()) {
    if (num[i] == den[j]) {
      ++i;
      ++j;
    } else if (num[i] < den[j]) {
      new_num.push_back(num[i++]);
    } else {
      new_den.push_back(den[j++]);
    }
  }
  new_num.insert(new_num.end(), num.begin() + i, num.end());
  new_den.insert(new_den.end(), den.begin() + j, den.end());
  num = std::move(new_num);
  den = std::move(new_den);
}

}  // namespace

bool is_measurable_name(std::string_view name) {
  return std::binary_search(kMeasurableNames.begin(), kMeasurableNames.end(), name);
}

UnitAtom make_atom(std::string_view name) {
  return UnitAtom{is_measurable_name(name) ? AtomKind::measurable : AtomKind::ordinal,
                  std::string(name)};
}

Unit Unit::atom(UnitAtom a) {
  Unit u;
  u.num_.push_back(std::move(a));
  return u;
}

Unit Unit::from_atoms(std::vector<UnitAtom> numerator, std::vector<UnitAtom> denominator) {
  std::sort(numerator.begin(), numerator.end());
  std::sort(denominator.begin(), denominator.end());
  cancel(numerator, denominator);
  Unit u;
  u.num_ = std::move(numerator);
  u.den_ = std::move(denominator);
  return u;
}

Unit multiply(const Unit& a, const Unit& b) {
  std::vector<UnitAtom> num = a.numerator();
  num.insert(num.end(), b.numerator().begin(), b.numerator().end());
  std::vector<UnitAtom> den = a.denominator();
  den.insert(den.end(), b.denominator().begin(), b.denominator().end());
  return Unit::from_atoms(std::move(num), std::move(den));
}

Unit invert(const Unit& u) {
  return Unit::from_atoms(u.denominator(), u.numerator());
}

std::string to_string(const Unit& u) {
  std::string out;
  if (u.numerator().empty()) {
    out = "1";
  } else {
    for (std::size_t i = 0; i < u.numerator().size(); ++i) {
      if (i > 0) out += '*';
      out += u.numerator()[i].name;
    }
  }
  for (const UnitAtom& a : u.denominator()) {
    out += '/';
    out += a.name;
  }
  return out;
}

void SurfaceTable::add(SurfaceUnitEntry entry) {
  if (entry.lexemes.empty()) throw ValidationError("surface unit entry has no lexemes");
  if (!(entry.factor > 0.0)) {
    throw ValidationError("surface unit factor must be positive for '" + entry.atom.name + "'");
  }
  if (entry.atom.kind == AtomKind::measurable && !is_measurable_name(entry.atom.name)) {
    throw ValidationError("unknown measurable unit name '" + entry.atom.name + "'");
  }
  if (!is_identifier(entry.atom.name)) {
    throw ValidationError("atom name must be a lowercase identifier, got '" + entry.atom.name + "'");
  }
  const std::size_t index = entries_.size();
  for (std::string& lex : entry.lexemes) {
    lex = to_lower(lex);
    if (lex.empty()) throw ValidationError("empty lexeme in surface unit entry");
    if (by_lexeme_.count(lex)) {
      throw ValidationError("lexeme '" + lex + "' maps to two surface unit entries");
    }
  }
  for (const std::string& lex : entry.lexemes) {
    by_lexeme_.emplace(lex, index);
    const bool has_letter = std::any_of(lex.begin(), lex.end(), [](unsigned char c) {
      return std::isalpha(c) != 0;
    });
    (has_letter ? words_ : symbols_).push_back(lex);
  }
  entries_.push_back(std::move(entry));
  auto longest_first = [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  };
  std::sort(words_.begin(), words_.end(), longest_first);
  std::sort(symbols_.begin(), symbols_.end(), longest_first);
}

const SurfaceUnitEntry* SurfaceTable::find(std::string_view lexeme) const {
  auto it = by_lexeme_.find(to_lower(lexeme));
  if (it == by_lexeme_.end()) return nullptr;
  return &entries_[it->second];
}

SurfaceTable SurfaceTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open surface unit table: " + path);
  SurfaceTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      const nlohmann::json rec = nlohmann::json::parse(line);
      SurfaceUnitEntry entry;
      entry.lexemes = rec.at("lexemes").get<std::vector<std::string>>();
      const std::string kind = rec.at("kind").get<std::string>();
      if (kind != "measurable" && kind != "ordinal") {
        throw ValidationError("kind must be 'measurable' or 'ordinal'");
      }
      entry.atom.kind = kind == "measurable" ? AtomKind::measurable : AtomKind::ordinal;
      entry.atom.name = rec.at("name").get<std::string>();
      entry.factor = rec.at("factor").get<double>();
      table.add(std::move(entry));
    } catch (const std::exception& e) {
      throw ValidationError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return table;
}

std::optional<double> magnitude_factor(std::string_view word) {
  const std::string w = to_lower(word);
  if (w == "hundred") return 1e2;
  if (w == "thousand") return 1e3;
  if (w == "million") return 1e6;
  if (w == "billion") return 1e9;
  if (w == "trillion") return 1e12;
  return std::nullopt;
}

Quantity normalize_quantity(double value, const std::optional<std::string>& magnitude_word,
                            std::string_view surface_unit, const SurfaceTable& table) {
  if (!(value > 0.0)) {
    throw ValidationError("non-positive value");
  }
  double factor = 1.0;
  if (magnitude_word) {
    const auto mag = magnitude_factor(*magnitude_word);
    if (!mag) throw ValidationError("unknown magnitude word '" + *magnitude_word + "'");
    factor *= *mag;
  }
  const SurfaceUnitEntry* entry = table.find(surface_unit);
  if (!entry) throw ValidationError("unknown surface unit '" + std::string(surface_unit) + "'");
  return Quantity{value * factor * entry->factor, Unit::atom(entry->atom)};
}

namespace {

// Shared by parse_unit/resolve_unit. Token resolution order: surface table
// lexeme, then measurable name, then ordinal identifier.
ResolvedUnit parse_impl(std::string_view text, const SurfaceTable* table) {
  if (trim(text).empty()) throw ParseError("empty unit string");
  std::vector<UnitAtom> num;
  std::vector<UnitAtom> den;
  double factor = 1.0;

  std::size_t seg_start = 0;
  std::size_t seg_index = 0;
  const std::size_t n = text.size();
  for (std::size_t pos = 0; pos <= n; ++pos) {
    if (pos < n && text[pos] != '/') continue;
    std::string_view segment = text.substr(seg_start, pos - seg_start);
    const bool numerator = seg_index == 0;

    // Split the segment on '*'.
    std::size_t tok_start = 0;
    for (std::size_t i = 0; i <= segment.size(); ++i) {
      if (i < segment.size() && segment[i] != '*') continue;
      std::size_t lead = 0;
      std::string_view raw = segment.substr(tok_start, i - tok_start);
      std::string_view token = trim(raw, &lead);
      const std::size_t token_pos = seg_start + tok_start + lead;
      if (token.empty()) throw ParseError("empty unit atom", token_pos);
      const std::string lowered = to_lower(token);
      if (lowered == "per") {
        // "$/per/yr" style no-op separator.
      } else if (lowered == "1") {
        if (segment.find('*') != std::string_view::npos) {
          throw ParseError("'1' must stand alone in a unit segment", token_pos);
        }
      } else {
        UnitAtom atom;
        double lex_factor = 1.0;
        const SurfaceUnitEntry* entry = table ? table->find(lowered) : nullptr;
        if (entry) {
          atom = entry->atom;
          lex_factor = entry->factor;
        } else if (is_identifier(lowered)) {
          atom = make_atom(lowered);
        } else {
          throw ParseError("invalid unit atom '" + std::string(token) + "'", token_pos);
        }
        if (numerator) {
          num.push_back(std::move(atom));
          factor *= lex_factor;
        } else {
          den.push_back(std::move(atom));
          factor /= lex_factor;
        }
      }
      tok_start = i + 1;
    }
    seg_start = pos + 1;
    ++seg_index;
  }
  return ResolvedUnit{Unit::from_atoms(std::move(num), std::move(den)), factor};
}

}  // namespace

Unit parse_unit(std::string_view text) { return parse_impl(text, nullptr).unit; }

ResolvedUnit resolve_unit(std::string_view text, const SurfaceTable& table) {
  return parse_impl(text, &table);
}

}  // namespace perspect
