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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "perspect/units.hpp"

namespace perspect {

// A numeric span within a sentence, normalized to base units.
// `surface` always equals sentence.substr(begin, end - begin).
struct Mention {
  std::string sentence;
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string surface;
  double value = 0.0;
  Unit unit;
};

// Finds `NUMBER MAGNITUDE? UNIT` and `CURRENCY NUMBER MAGNITUDE?` patterns.
// NUMBER is digits with optional strict comma grouping and an optional
// decimal part; MAGNITUDE is one of hundred/thousand/million/billion/
// trillion; UNIT and CURRENCY lexemes come from the surface table. Matches
// are returned left to right, non-overlapping, leftmost-longest.
std::vector<Mention> extract_mentions(std::string_view text, const SurfaceTable& table);

// Default magnitude bin boundaries: 1e-3, 1, 1e3, 1e6, 1e9, 1e12.
const std::vector<double>& default_magnitude_bins();

// Samples up to `per_bin` mentions uniformly without replacement from every
// (unit, magnitude-bin) cell. Deterministic for a given seed; the relative
// input order of the selected mentions is preserved.
std::vector<Mention> stratified_sample(const std::vector<Mention>& mentions,
                                       const std::vector<double>& bins, std::size_t per_bin,
                                       std::uint64_t seed);

}  // namespace perspect
