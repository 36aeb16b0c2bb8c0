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

#include "perspect/textgen.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <unordered_map>

#include "perspect/errors.hpp"
#include "perspect/rng.hpp"

namespace perspect {

namespace {

constexpr double kAboutThreshold = 0.002;  // 0.2% relative snapping error

std::string ordinal_suffix(long long k) {
  const long long mod100 = k % 100;
  if (mod100 >= 11 && mod100 <= 13) return "th";
  switch (k % 10) {
    case 1: return "st";
    case 2: return "nd";
    case 3: return "rd";
    default: return "th";
  }
}

}  // namespace

SnappedMultiplier snap_multiplier(double multiplier) {
  if (!(multiplier > 0.0)) throw ValidationError("multiplier must be positive");
  SnappedMultiplier best;
  double best_error = -1.0;
  auto consider = [&](long long k, bool reciprocal) {
    const double candidate = reciprocal ? 1.0 / static_cast<double>(k) : static_cast<double>(k);
    const double error = std::fabs(multiplier - candidate) / candidate;
    if (best_error < 0.0 || error < best_error) {
      best_error = error;
      best.k = k;
      best.reciprocal = reciprocal;
      best.candidate = candidate;
    }
  };
  for (long long k = 1; k <= 100; ++k) consider(k, false);
  for (long long k = 2; k <= 100; ++k) consider(k, true);
  best.about = best_error > kAboutThreshold;
  return best;
}

std::string SnappedMultiplier::phrase() const {
  if (reciprocal) {
    if (k == 2) return "half";
    return "1/" + std::to_string(k) + ordinal_suffix(k);
  }
  if (k == 1) return "";
  if (k == 2) return "twice";
  return std::to_string(k) + " times";
}

std::string render_multiplier(double multiplier) {
  const SnappedMultiplier snapped = snap_multiplier(multiplier);
  const std::string phrase = snapped.phrase();
  if (!snapped.about) return phrase;
  if (phrase.empty()) return "about";
  return "about " + phrase;
}

Perspective realize_baseline(const Formula& formula, const KnowledgeBase& kb) {
  if (formula.tuple_ids.empty()) throw ValidationError("formula has no tuples");
  std::vector<const NumericTuple*> tuples;
  for (const std::string& id : formula.tuple_ids) {
    const NumericTuple* t = kb.find(id);
    if (!t) throw ValidationError("unknown tuple id '" + id + "'");
    tuples.push_back(t);
  }
  const SnappedMultiplier snapped = snap_multiplier(formula.multiplier);
  const std::string phrase = snapped.phrase();

  std::string text;
  if (snapped.about) text += "about ";
  if (!phrase.empty()) {
    text += phrase;
    text += " of ";
  }
  text += tuples.front()->description;
  for (std::size_t i = 1; i < tuples.size(); ++i) {
    text += " for ";
    text += tuples[i]->description;
  }
  text += '.';
  return Perspective{std::move(text), formula};
}

std::pair<std::vector<DescriptionPair>, std::vector<DescriptionPair>> split_by_skeleton(
    const std::vector<DescriptionPair>& pairs, double test_fraction, std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw ValidationError("test fraction must be in (0, 1)");
  }
  std::map<std::vector<std::string>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::vector<std::string> key = pairs[i].formula.tuple_ids;
    std::sort(key.begin(), key.end());
    groups[std::move(key)].push_back(i);
  }
  if (groups.size() < 2) throw ValidationError("need at least 2 distinct skeletons to split");

  std::vector<const std::vector<std::size_t>*> order;
  order.reserve(groups.size());
  for (const auto& [key, members] : groups) order.push_back(&members);
  Rng rng(mix_seed(seed, "skeleton-split"));
  rng.shuffle(order);

  const double target = test_fraction * static_cast<double>(pairs.size());
  std::vector<bool> in_test(pairs.size(), false);
  std::size_t test_count = 0;
  std::size_t groups_in_test = 0;
  for (const auto* members : order) {
    if (static_cast<double>(test_count) >= target) break;
    if (groups_in_test + 1 == groups.size()) break;  // keep train nonempty
    for (std::size_t i : *members) in_test[i] = true;
    test_count += members->size();
    ++groups_in_test;
  }

  std::pair<std::vector<DescriptionPair>, std::vector<DescriptionPair>> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    (in_test[i] ? out.second : out.first).push_back(pairs[i]);
  }
  return out;
}

std::vector<std::string> bleu_tokenize(std::string_view text) {
  std::string spaced;
  spaced.reserve(text.size() * 2);
  for (char raw : text) {
    const unsigned char c = static_cast<unsigned char>(raw);
    if (std::ispunct(c)) {
      spaced += ' ';
      spaced += static_cast<char>(c);
      spaced += ' ';
    } else {
      spaced += static_cast<char>(std::tolower(c));
    }
  }
  std::vector<std::string> tokens;
  std::string current;
  for (char c : spaced) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
    } else {
      current += c;
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

namespace {

using NgramCounts = std::unordered_map<std::string, std::size_t>;

NgramCounts count_ngrams(const std::vector<std::string>& tokens, std::size_t n) {
  NgramCounts counts;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key;
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) key += '\x1f';
      key += tokens[i + j];
    }
    ++counts[key];
  }
  return counts;
}

}  // namespace

double bleu(const std::vector<std::vector<std::string>>& references,
            const std::vector<std::string>& hypotheses) {
  if (references.size() != hypotheses.size()) {
    throw ValidationError("bleu: references and hypotheses differ in length");
  }
  if (hypotheses.empty()) throw ValidationError("bleu: empty corpus");

  constexpr std::size_t kMaxOrder = 4;
  std::size_t matches[kMaxOrder] = {0, 0, 0, 0};
  std::size_t totals[kMaxOrder] = {0, 0, 0, 0};
  std::size_t hyp_length = 0;
  std::size_t ref_length = 0;

  for (std::size_t s = 0; s < hypotheses.size(); ++s) {
    if (references[s].empty()) {
      throw ValidationError("bleu: hypothesis " + std::to_string(s) + " has no references");
    }
    const std::vector<std::string> hyp = bleu_tokenize(hypotheses[s]);
    std::vector<std::vector<std::string>> refs;
    refs.reserve(references[s].size());
    for (const std::string& r : references[s]) refs.push_back(bleu_tokenize(r));

    hyp_length += hyp.size();
    // Closest reference length; ties go to the shorter reference.
    std::size_t best_ref = refs.front().size();
    for (const auto& r : refs) {
      const auto diff = [&](std::size_t len) {
        return len > hyp.size() ? len - hyp.size() : hyp.size() - len;
      };
      if (diff(r.size()) < diff(best_ref) || (diff(r.size()) == diff(best_ref) && r.size() < best_ref)) {
        best_ref = r.size();
      }
    }
    ref_length += best_ref;

    for (std::size_t n = 1; n <= kMaxOrder; ++n) {
      const NgramCounts hyp_counts = count_ngrams(hyp, n);
      NgramCounts max_ref_counts;
      for (const auto& r : refs) {
        for (const auto& [gram, count] : count_ngrams(r, n)) {
          max_ref_counts[gram] = std::max(max_ref_counts[gram], count);
        }
      }
      for (const auto& [gram, count] : hyp_counts) {
        totals[n - 1] += count;
        auto it = max_ref_counts.find(gram);
        if (it != max_ref_counts.end()) matches[n - 1] += std::min(count, it->second);
      }
    }
  }

  double log_precision_sum = 0.0;
  for (std::size_t n = 1; n <= kMaxOrder; ++n) {
    double p;
    if (n == 1) {
      if (totals[0] == 0 || matches[0] == 0) return 0.0;
      p = static_cast<double>(matches[0]) / static_cast<double>(totals[0]);
    } else {
      p = (static_cast<double>(matches[n - 1]) + 1.0) / (static_cast<double>(totals[n - 1]) + 1.0);
    }
    log_precision_sum += std::log(p);
  }
  double brevity_penalty = 1.0;
  if (hyp_length == 0) return 0.0;
  if (hyp_length < ref_length) {
    brevity_penalty =
        std::exp(1.0 - static_cast<double>(ref_length) / static_cast<double>(hyp_length));
  }
  return 100.0 * brevity_penalty * std::exp(log_precision_sum / kMaxOrder);
}

}  // namespace perspect
