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

#include "perspect/embed.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

#include "perspect/errors.hpp"

namespace perspect {

std::vector<std::string> tokenize_text(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char raw : text) {
    const unsigned char c = static_cast<unsigned char>(raw);
    if (std::isalnum(c)) {
      current += static_cast<char>(std::tolower(c));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

WordVectorStore::WordVectorStore(std::size_t dimension)
    : dimension_(dimension), stopwords_(default_stopwords()) {}

const std::set<std::string>& WordVectorStore::default_stopwords() {
  static const std::set<std::string> words = {
      "a",     "about", "all",  "an",    "and",  "any",   "are",  "as",    "at",   "be",
      "been",  "being", "but",  "by",    "can",  "each",  "for",  "from",  "had",  "has",
      "have",  "he",    "her",  "his",   "i",    "if",    "in",   "into",  "is",   "it",
      "its",   "no",    "not",  "of",    "on",   "or",    "our",  "she",   "so",   "than",
      "that",  "the",   "their", "them", "then", "there", "these", "they", "this", "those",
      "to",    "too",   "was",  "we",    "were", "will",  "with", "would", "you",  "your"};
  return words;
}

const std::vector<double>* WordVectorStore::find(std::string_view token) const {
  auto it = vectors_.find(std::string(token));
  if (it == vectors_.end()) return nullptr;
  return &it->second;
}

void WordVectorStore::insert(std::string token, std::vector<double> vector) {
  if (vector.size() != dimension_) {
    throw ValidationError("vector for '" + token + "' has dimension " +
                          std::to_string(vector.size()) + ", expected " +
                          std::to_string(dimension_));
  }
  if (!vectors_.emplace(std::move(token), std::move(vector)).second) {
    throw ValidationError("duplicate token in word vector store");
  }
}

void WordVectorStore::set_stopwords(std::set<std::string> stopwords) {
  if (stopwords.empty()) throw ValidationError("stopword set must be nonempty");
  stopwords_ = std::move(stopwords);
}

void WordVectorStore::load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open stopword file: " + path);
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) words.insert(line);
  }
  set_stopwords(std::move(words));
}

WordVectorStore WordVectorStore::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open word vector file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw ParseError(path + ": missing header line");
  std::istringstream header(line);
  std::size_t count = 0;
  std::size_t dimension = 0;
  if (!(header >> count >> dimension) || dimension == 0) {
    throw ParseError(path + ":1: header must be 'count dimension'");
  }
  std::string trailing;
  if (header >> trailing) throw ParseError(path + ":1: header must be 'count dimension'");

  WordVectorStore store(dimension);
  std::size_t line_no = 1;
  std::size_t loaded = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    std::string token;
    row >> token;
    std::vector<double> values;
    values.reserve(dimension);
    double v = 0.0;
    while (row >> v) values.push_back(v);
    if (values.size() != dimension) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(dimension) + " values, got " +
                       std::to_string(values.size()));
    }
    try {
      store.insert(std::move(token), std::move(values));
    } catch (const ValidationError& e) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
    ++loaded;
  }
  if (loaded != count) {
    throw ParseError(path + ": header declares " + std::to_string(count) + " entries, found " +
                     std::to_string(loaded));
  }
  return store;
}

void WordVectorStore::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write word vector file: " + path);
  out << vectors_.size() << ' ' << dimension_ << '\n';
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  std::map<std::string, const std::vector<double>*> sorted;
  for (const auto& [token, vec] : vectors_) sorted.emplace(token, &vec);
  for (const auto& [token, vec] : sorted) {
    out << token;
    for (double v : *vec) out << ' ' << v;
    out << '\n';
  }
}

std::vector<double> WordVectorStore::text_vector(std::string_view text) const {
  std::vector<double> sum(dimension_, 0.0);
  std::size_t used = 0;
  for (const std::string& token : tokenize_text(text)) {
    if (stopwords_.count(token)) continue;
    const std::vector<double>* vec = find(token);
    if (!vec) continue;
    for (std::size_t i = 0; i < dimension_; ++i) sum[i] += (*vec)[i];
    ++used;
  }
  if (used > 0) {
    for (double& v : sum) v /= static_cast<double>(used);
  }
  return sum;
}

double similarity(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ValidationError("similarity: dimension mismatch");
  double dot = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
  return dot;
}

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
  const double dot = similarity(a, b);
  double na = 0.0;
  double nb = 0.0;
  for (double v : a) na += v * v;
  for (double v : b) nb += v * v;
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace perspect
