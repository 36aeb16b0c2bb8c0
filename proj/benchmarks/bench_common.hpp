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

#include <cmath>
#include <string>
#include <vector>

#include "perspect/kb.hpp"
#include "perspect/rng.hpp"
#include "perspect/units.hpp"

namespace perspect::bench {

// Random KB with a money-headed structure similar to real data: heads with
// 1-3 denominator atoms plus single-atom tuples that can cancel them.
inline KnowledgeBase random_kb(std::uint64_t seed, int tuples) {
  Rng rng(seed);
  const std::vector<std::string> atoms = {"money", "time",  "length", "person",
                                          "car",   "gun",   "weight", "volume"};
  std::vector<NumericTuple> out;
  for (int i = 0; i < tuples; ++i) {
    NumericTuple t;
    t.id = "t" + std::to_string(i);
    t.description = "tuple " + std::to_string(i);
    t.value = std::pow(10.0, rng.next_double() * 9.0 - 3.0);
    if (rng.below(2) == 0) {
      t.unit = Unit::atom(make_atom(atoms[rng.below(atoms.size())]));
    } else {
      std::vector<UnitAtom> den;
      const std::size_t k = 1 + rng.below(3);
      for (std::size_t j = 0; j < k; ++j) {
        den.push_back(make_atom(atoms[1 + rng.below(atoms.size() - 1)]));
      }
      t.unit = Unit::from_atoms({make_atom("money")}, std::move(den));
    }
    out.push_back(std::move(t));
  }
  return KnowledgeBase::from_tuples(std::move(out));
}

}  // namespace perspect::bench
