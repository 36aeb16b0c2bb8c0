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

#include "doctest.h"

#include <cmath>
#include <string>

#include "perspect/embed.hpp"
#include "perspect/errors.hpp"
#include "perspect/rng.hpp"

#include "support/testutil.hpp"

using namespace perspect;
using perspect::test::TempDir;
using perspect::test::write_file;

TEST_CASE("load_vectors reads the textual format") {
  TempDir dir;
  const std::string path = dir.file("vectors.txt");
  write_file(path, "2 3\nhello 1 2 3\nworld 0.5 -0.5 0\n");
  const WordVectorStore store = WordVectorStore::load(path);
  CHECK(store.size() == 2);
  CHECK(store.dimension() == 3);
  REQUIRE(store.find("hello") != nullptr);
  CHECK((*store.find("hello"))[1] == 2.0);
  CHECK(store.find("absent") == nullptr);
}

TEST_CASE("load_vectors reports malformed lines") {
  TempDir dir;
  const std::string path = dir.file("vectors.txt");
  write_file(path, "2 3\nhello 1 2 3\nworld 0.5 -0.5\n");
  try {
    WordVectorStore::load(path);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(":3") != std::string::npos);
  }
}

TEST_CASE("load_vectors rejects duplicates and count mismatches") {
  TempDir dir;
  write_file(dir.file("dup.txt"), "2 2\nsame 1 2\nsame 3 4\n");
  CHECK_THROWS_AS(WordVectorStore::load(dir.file("dup.txt")), ParseError);
  write_file(dir.file("short.txt"), "3 2\nonly 1 2\n");
  CHECK_THROWS_AS(WordVectorStore::load(dir.file("short.txt")), ParseError);
  write_file(dir.file("header.txt"), "nope\n");
  CHECK_THROWS_AS(WordVectorStore::load(dir.file("header.txt")), ParseError);
}

TEST_CASE("save then load round-trips") {
  TempDir dir;
  Rng rng(4);
  WordVectorStore store(10);
  for (int i = 0; i < 50; ++i) {
    std::vector<double> v;
    for (int d = 0; d < 10; ++d) v.push_back(rng.next_double() * 2.0 - 1.0);
    store.insert("tok" + std::to_string(i), std::move(v));
  }
  const std::string path = dir.file("roundtrip.txt");
  store.save(path);
  const WordVectorStore again = WordVectorStore::load(path);
  REQUIRE(again.size() == store.size());
  REQUIRE(again.dimension() == store.dimension());
  for (int i = 0; i < 50; ++i) {
    const std::string token = "tok" + std::to_string(i);
    REQUIRE(again.find(token) != nullptr);
    CHECK(*again.find(token) == *store.find(token));
  }
}

TEST_CASE("text_vector averages in-vocabulary non-stopword tokens") {
  WordVectorStore store(2);
  store.insert("cat", {1.0, 0.0});
  store.insert("dog", {0.0, 1.0});
  store.insert("the", {100.0, 100.0});  // stopword, never used

  SUBCASE("single token is its own vector") {
    CHECK(store.text_vector("cat") == std::vector<double>{1.0, 0.0});
  }
  SUBCASE("stopword-only text is the zero vector") {
    CHECK(store.text_vector("the of and") == std::vector<double>{0.0, 0.0});
  }
  SUBCASE("mean matches direct summation") {
    const auto v = store.text_vector("cat dog");
    CHECK(v[0] == doctest::Approx(0.5));
    CHECK(v[1] == doctest::Approx(0.5));
  }
  SUBCASE("order and case do not matter") {
    CHECK(store.text_vector("Dog, CAT!") == store.text_vector("cat dog"));
  }
  SUBCASE("out-of-vocabulary tokens are dropped") {
    CHECK(store.text_vector("cat zyzzx") == std::vector<double>{1.0, 0.0});
  }
}

TEST_CASE("similarity is the dot product") {
  const std::vector<double> e1 = {1.0, 0.0, 0.0};
  const std::vector<double> e2 = {0.0, 1.0, 0.0};
  CHECK(similarity(e1, e1) == 1.0);
  CHECK(similarity(e1, e2) == 0.0);

  Rng rng(8);
  for (int round = 0; round < 100; ++round) {
    std::vector<double> a(10);
    std::vector<double> b(10);
    double expected = 0.0;
    for (int i = 0; i < 10; ++i) {
      a[i] = rng.next_double() * 2.0 - 1.0;
      b[i] = rng.next_double() * 2.0 - 1.0;
      expected += a[i] * b[i];
    }
    CHECK(std::fabs(similarity(a, b) - expected) < 1e-12);
    CHECK(similarity(a, b) == similarity(b, a));
    CHECK(similarity(a, std::vector<double>(10, 0.0)) == 0.0);
  }
}

TEST_CASE("similarity rejects dimension mismatches") {
  CHECK_THROWS_AS(similarity(std::vector<double>{1.0}, std::vector<double>{1.0, 2.0}),
                  ValidationError);
}

TEST_CASE("cosine similarity normalizes and handles zero vectors") {
  const std::vector<double> a = {3.0, 0.0};
  const std::vector<double> b = {17.0, 0.0};
  CHECK(cosine_similarity(a, b) == doctest::Approx(1.0));
  CHECK(cosine_similarity(a, std::vector<double>{0.0, 0.0}) == 0.0);
}

TEST_CASE("stopwords are overridable but never empty") {
  WordVectorStore store(1);
  store.insert("alpha", {1.0});
  store.set_stopwords({"alpha"});
  CHECK(store.text_vector("alpha") == std::vector<double>{0.0});
  CHECK_THROWS_AS(store.set_stopwords({}), ValidationError);
  CHECK(WordVectorStore::default_stopwords().size() >= 50);
}
