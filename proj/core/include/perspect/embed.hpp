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
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace perspect {

// Lowercase alphanumeric runs; everything else is a boundary.
std::vector<std::string> tokenize_text(std::string_view text);

// Word vectors in the textual format "count dimension" header followed by
// "token v1 ... vd" lines.
class WordVectorStore {
 public:
  static WordVectorStore load(const std::string& path);
  void save(const std::string& path) const;

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return vectors_.size(); }
  const std::vector<double>* find(std::string_view token) const;
  void insert(std::string token, std::vector<double> vector);

  const std::set<std::string>& stopwords() const { return stopwords_; }
  void set_stopwords(std::set<std::string> stopwords);
  // One token per line.
  void load_stopwords(const std::string& path);
  static const std::set<std::string>& default_stopwords();

  // Mean of the vectors of in-vocabulary, non-stopword tokens; the zero
  // vector when none remain.
  std::vector<double> text_vector(std::string_view text) const;

  explicit WordVectorStore(std::size_t dimension);

 private:
  std::size_t dimension_ = 0;
  std::unordered_map<std::string, std::vector<double>> vectors_;
  std::set<std::string> stopwords_;
};

// Dot product; the paper-table form of the relevance feature.
double similarity(std::span<const double> a, std::span<const double> b);

// Optional alternative, off by default in feature extraction.
double cosine_similarity(std::span<const double> a, std::span<const double> b);

}  // namespace perspect
