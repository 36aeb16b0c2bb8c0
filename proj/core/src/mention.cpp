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

#include "perspect/mention.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <optional>

#include "perspect/errors.hpp"
#include "perspect/rng.hpp"

namespace perspect {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

// A number token can start here only at a token boundary; '.' and ',' are
// excluded so "3.14" or "36,000" never match from their interior digits.
bool number_can_start(std::string_view text, std::size_t pos) {
  if (pos == 0) return true;
  const char prev = text[pos - 1];
  return !is_alnum(prev) && prev != '.' && prev != ',';
}

struct NumberToken {
  double value = 0.0;
  std::size_t end = 0;  // one past the last character
};

// Parses digits with optional comma grouping (groups of exactly three) and
// an optional decimal part. Returns the longest valid number starting at
// `pos`, or nullopt if text[pos] is not a digit.
std::optional<NumberToken> parse_number(std::string_view text, std::size_t pos) {
  if (pos >= text.size() || !is_digit(text[pos])) return std::nullopt;
  std::size_t i = pos;
  while (i < text.size() && is_digit(text[i])) ++i;
  std::size_t int_end = i;
  std::string digits(text.substr(pos, i - pos));

  // Comma-grouped form requires a leading group of 1-3 digits and then
  // groups of exactly 3; anything else falls back to the plain digit run.
  if (int_end - pos <= 3 && int_end < text.size() && text[int_end] == ',') {
    std::size_t j = int_end;
    std::string grouped = digits;
    bool valid = false;
    while (j < text.size() && text[j] == ',') {
      if (j + 4 > text.size()) break;
      if (!(is_digit(text[j + 1]) && is_digit(text[j + 2]) && is_digit(text[j + 3]))) break;
      if (j + 4 < text.size() && is_digit(text[j + 4])) {
        valid = false;  // a 4+ digit group invalidates the grouped reading
        break;
      }
      grouped.append(text.substr(j + 1, 3));
      j += 4;
      valid = true;
    }
    if (valid) {
      digits = grouped;
      int_end = j;
    }
  }

  std::size_t end = int_end;
  if (end + 1 < text.size() && text[end] == '.' && is_digit(text[end + 1])) {
    std::size_t j = end + 1;
    while (j < text.size() && is_digit(text[j])) ++j;
    digits += std::string(text.substr(end, j - end));
    end = j;
  }
  return NumberToken{std::strtod(digits.c_str(), nullptr), end};
}

std::size_t skip_spaces(std::string_view text, std::size_t pos) {
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  return pos;
}

// Case-insensitive literal match with a word boundary after.
bool matches_at(std::string_view text, std::size_t pos, std::string_view lexeme) {
  if (pos + lexeme.size() > text.size()) return false;
  for (std::size_t i = 0; i < lexeme.size(); ++i) {
    if (lower(text[pos + i]) != lexeme[i]) return false;
  }
  const std::size_t after = pos + lexeme.size();
  return after == text.size() || !is_alnum(text[after]);
}

// Longest word lexeme from the table matching at `pos`, preceded by at
// least one space. Returns the lexeme's end, or nullopt.
struct LexemeMatch {
  const std::string* lexeme = nullptr;
  std::size_t end = 0;
};

std::optional<LexemeMatch> match_word_lexeme(std::string_view text, std::size_t pos,
                                             const SurfaceTable& table) {
  for (const std::string& lex : table.word_lexemes()) {
    if (matches_at(text, pos, lex)) return LexemeMatch{&lex, pos + lex.size()};
  }
  return std::nullopt;
}

std::optional<std::pair<std::string_view, std::size_t>> match_magnitude(std::string_view text,
                                                                        std::size_t pos) {
  static constexpr std::string_view kWords[] = {"hundred", "thousand", "million", "billion",
                                                "trillion"};
  for (std::string_view w : kWords) {
    if (matches_at(text, pos, w)) return std::make_pair(w, pos + w.size());
  }
  return std::nullopt;
}

}  // namespace

std::vector<Mention> extract_mentions(std::string_view text, const SurfaceTable& table) {
  std::vector<Mention> out;
  std::size_t i = 0;
  while (i < text.size()) {
    // CURRENCY NUMBER MAGNITUDE?
    bool matched_symbol = false;
    for (const std::string& sym : table.symbol_lexemes()) {
      if (text.substr(i, sym.size()) != sym) continue;
      std::size_t j = skip_spaces(text, i + sym.size());
      const auto number = parse_number(text, j);
      if (!number) continue;
      std::size_t end = number->end;
      std::optional<std::string> magnitude;
      const std::size_t after_space = skip_spaces(text, end);
      if (after_space > end) {
        if (const auto mag = match_magnitude(text, after_space)) {
          magnitude = std::string(mag->first);
          end = mag->second;
        }
      }
      if (number->value > 0.0) {
        const Quantity q = normalize_quantity(number->value, magnitude, sym, table);
        Mention m;
        m.sentence = std::string(text);
        m.begin = i;
        m.end = end;
        m.surface = std::string(text.substr(i, end - i));
        m.value = q.value;
        m.unit = q.unit;
        out.push_back(std::move(m));
      }
      i = end;
      matched_symbol = true;
      break;
    }
    if (matched_symbol) continue;

    // NUMBER MAGNITUDE? UNIT
    if (is_digit(text[i]) && number_can_start(text, i)) {
      const auto number = parse_number(text, i);
      std::size_t end = number->end;
      std::optional<std::string> magnitude;
      std::size_t cursor = skip_spaces(text, end);
      if (cursor > end) {
        if (const auto mag = match_magnitude(text, cursor)) {
          magnitude = std::string(mag->first);
          end = mag->second;
          cursor = skip_spaces(text, end);
        }
      }
      if (cursor > end || magnitude) {
        const auto unit_match = match_word_lexeme(text, cursor, table);
        if (unit_match && number->value > 0.0) {
          const Quantity q =
              normalize_quantity(number->value, magnitude, *unit_match->lexeme, table);
          Mention m;
          m.sentence = std::string(text);
          m.begin = i;
          m.end = unit_match->end;
          m.surface = std::string(text.substr(i, unit_match->end - i));
          m.value = q.value;
          m.unit = q.unit;
          out.push_back(std::move(m));
          i = unit_match->end;
          continue;
        }
      }
      i = number->end;
      continue;
    }
    ++i;
  }
  return out;
}

const std::vector<double>& default_magnitude_bins() {
  static const std::vector<double> bins = {1e-3, 1.0, 1e3, 1e6, 1e9, 1e12};
  return bins;
}

std::vector<Mention> stratified_sample(const std::vector<Mention>& mentions,
                                       const std::vector<double>& bins, std::size_t per_bin,
                                       std::uint64_t seed) {
  for (std::size_t i = 1; i < bins.size(); ++i) {
    if (!(bins[i - 1] < bins[i])) throw ValidationError("bin boundaries must be strictly increasing");
  }
  // Cell key: (canonical unit, index of the first boundary > value).
  std::map<std::pair<std::string, std::size_t>, std::vector<std::size_t>> cells;
  for (std::size_t i = 0; i < mentions.size(); ++i) {
    std::size_t bin = 0;
    while (bin < bins.size() && mentions[i].value >= bins[bin]) ++bin;
    cells[{to_string(mentions[i].unit), bin}].push_back(i);
  }

  std::vector<std::size_t> selected;
  for (const auto& [key, members] : cells) {
    if (members.size() <= per_bin) {
      selected.insert(selected.end(), members.begin(), members.end());
      continue;
    }
    // Partial Fisher-Yates: the first per_bin slots are a uniform sample.
    std::vector<std::size_t> pool = members;
    Rng rng(mix_seed(seed, key.first + "#" + std::to_string(key.second)));
    for (std::size_t k = 0; k < per_bin; ++k) {
      const std::size_t j = k + static_cast<std::size_t>(rng.below(pool.size() - k));
      std::swap(pool[k], pool[j]);
      selected.push_back(pool[k]);
    }
  }
  std::sort(selected.begin(), selected.end());
  std::vector<Mention> out;
  out.reserve(selected.size());
  for (std::size_t idx : selected) out.push_back(mentions[idx]);
  return out;
}

}  // namespace perspect
