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

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace perspect {

// Measurable dimensions have one fixed base unit each:
//   length = meter, area = m^2, volume = m^3, weight = kilogram,
//   time = second, money = USD.
// Ordinal atoms (person, car, gun, ...) count in units of one and form an
// open set. Atoms order by (kind, name); measurable sorts before ordinal.
enum class AtomKind { measurable, ordinal };

struct UnitAtom {
  AtomKind kind = AtomKind::ordinal;
  std::string name;

  auto operator<=>(const UnitAtom&) const = default;
};

bool is_measurable_name(std::string_view name);

// Builds an atom from a lowercase identifier; unknown names become ordinals.
UnitAtom make_atom(std::string_view name);

// A unit is a fraction of atom multisets kept in canonical form: no atom
// appears on both sides and both sides are sorted. The dimensionless unit
// (both sides empty) is valid and prints as "1".
class Unit {
 public:
  Unit() = default;

  static Unit atom(UnitAtom a);
  static Unit from_atoms(std::vector<UnitAtom> numerator, std::vector<UnitAtom> denominator);

  const std::vector<UnitAtom>& numerator() const { return num_; }
  const std::vector<UnitAtom>& denominator() const { return den_; }
  bool dimensionless() const { return num_.empty() && den_.empty(); }
  bool denominator_free() const { return den_.empty(); }
  // True for a unit that is exactly one numerator atom.
  bool single_atom() const { return num_.size() == 1 && den_.empty(); }

  auto operator<=>(const Unit&) const = default;

 private:
  std::vector<UnitAtom> num_;
  std::vector<UnitAtom> den_;
};

Unit multiply(const Unit& a, const Unit& b);
Unit invert(const Unit& u);

// Canonical slash-chain form, e.g. "money/time/person"; dimensionless is "1",
// a pure denominator prints as "1/...". parse_unit(to_string(u)) == u.
std::string to_string(const Unit& u);

// One row of the surface-unit table: every lexeme converts to `factor` base
// units of `atom`. "cubic meters" maps straight to the volume atom.
struct SurfaceUnitEntry {
  std::vector<std::string> lexemes;
  UnitAtom atom;
  double factor = 1.0;
};

// Lexeme -> atom lookup used by quantity normalization, mention extraction
// and KB unit resolution. Lookup is case-insensitive; no lexeme may map to
// two entries.
class SurfaceTable {
 public:
  // JSONL file, one entry per line: {"lexemes": [...], "kind": "measurable"|
  // "ordinal", "name": ..., "factor": ...}.
  static SurfaceTable load(const std::string& path);

  void add(SurfaceUnitEntry entry);

  const SurfaceUnitEntry* find(std::string_view lexeme) const;
  const std::vector<SurfaceUnitEntry>& entries() const { return entries_; }

  // Lexemes containing no letters ("$") act as currency prefixes in mention
  // extraction; word lexemes act as suffix units. Both lists are sorted
  // longest-first for leftmost-longest matching.
  const std::vector<std::string>& symbol_lexemes() const { return symbols_; }
  const std::vector<std::string>& word_lexemes() const { return words_; }

 private:
  std::vector<SurfaceUnitEntry> entries_;
  std::map<std::string, std::size_t> by_lexeme_;
  std::vector<std::string> symbols_;
  std::vector<std::string> words_;
};

struct Quantity {
  double value = 0.0;
  Unit unit;
};

// {hundred, thousand, million, billion, trillion} -> 1e2 .. 1e12.
std::optional<double> magnitude_factor(std::string_view word);

// value * magnitude * entry.factor, in the base unit of the entry's atom.
// Throws ValidationError for non-positive values or unknown surface units.
Quantity normalize_quantity(double value, const std::optional<std::string>& magnitude_word,
                            std::string_view surface_unit, const SurfaceTable& table);

// Grammar: unit := seg ('/' seg)*, seg := atom ('*' atom)*. The first
// segment is the numerator product; every later segment multiplies the
// denominator, so "money/time/person" = money / (time * person). "per" is a
// no-op token and "1" denotes an empty segment.
Unit parse_unit(std::string_view text);

struct ResolvedUnit {
  Unit unit;
  // Net conversion from one surface unit to base units: numerator lexeme
  // factors multiply, denominator lexeme factors divide. A value expressed
  // in the surface unit times `factor` is the value in base units.
  double factor = 1.0;
};

// parse_unit with atom tokens additionally resolved through the surface
// table, so "money/person/year" converts through the year factor.
ResolvedUnit resolve_unit(std::string_view text, const SurfaceTable& table);

// Fixed time constants: year = 365.25 days = 31,557,600 s, month = year/12,
// week = 604,800 s.
inline constexpr double kSecondsPerYear = 31557600.0;
inline constexpr double kSecondsPerMonth = kSecondsPerYear / 12.0;
inline constexpr double kSecondsPerWeek = 604800.0;
inline constexpr double kSecondsPerDay = 86400.0;

}  // namespace perspect
