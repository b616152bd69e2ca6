// Copyright 2026 The lexdist Authors
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

#include <random>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "lexdist/distance.hpp"
#include "oracle.hpp"

using lexdist::CostModel;
using lexdist::CostUnits;
using lexdist::distance;
using lexdist::distance_matrix;
using lexdist::distance_with_cutoff;
using lexdist::DpMatrix;

namespace {

CostModel weighted_model() {
  return CostModel{lexdist::default_confusion_groups()};
}

// Plain textbook Levenshtein counting whole edits, for the degeneracy
// check against the unit-scaled production code.
std::size_t textbook_levenshtein(const std::string& s, const std::string& t) {
  std::vector<std::size_t> prev(t.size() + 1), cur(t.size() + 1);
  for (std::size_t j = 0; j <= t.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= s.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= t.size(); ++j)
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1,
                         prev[j - 1] + (s[i - 1] == t[j - 1] ? 0 : 1)});
    std::swap(prev, cur);
  }
  return prev[t.size()];
}

std::string random_word(std::mt19937_64& rng, std::string_view alphabet,
                        std::size_t max_len, std::size_t min_len = 0) {
  std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string word;
  for (std::size_t len = len_dist(rng); word.size() < len;)
    word.push_back(alphabet[pick(rng)]);
  return word;
}

}  // namespace

TEST_CASE("GUMBO vs GAMBOL fills the expected classic matrix") {
  // Frozen golden: source GUMBO across columns, target GAMBOL down
  // rows, all values in tenth-units.
  const CostUnits expected[7][6] = {
      {0, 10, 20, 30, 40, 50},   //
      {10, 0, 10, 20, 30, 40},   // G
      {20, 10, 10, 20, 30, 40},  // A
      {30, 20, 20, 10, 20, 30},  // M
      {40, 30, 30, 20, 10, 20},  // B
      {50, 40, 40, 30, 20, 10},  // O
      {60, 50, 50, 40, 30, 20},  // L
  };
  DpMatrix m = distance_matrix("GUMBO", "GAMBOL", CostModel{});
  REQUIRE(m.rows() == 7);
  REQUIRE(m.cols() == 6);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      INFO("cell (" << i << ", " << j << ")");
      CHECK(m.at(i, j) == expected[i][j]);
    }
  CHECK(m.result() == 20);
}

TEST_CASE("matrix borders count inserts and deletes") {
  DpMatrix m = distance_matrix("GUMBO", "GAMBOL", CostModel{});
  for (std::size_t j = 0; j < m.cols(); ++j) CHECK(m.at(0, j) == 10 * j);
  for (std::size_t i = 0; i < m.rows(); ++i) CHECK(m.at(i, 0) == 10 * i);
}

TEST_CASE("empty words give a 1x1 zero matrix") {
  DpMatrix m = distance_matrix("", "", weighted_model());
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 1);
  CHECK(m.result() == 0);
  CHECK(distance("", "", CostModel{}) == 0);
  CHECK(distance("", "ABC", CostModel{}) == 30);
  CHECK(distance("ABC", "", CostModel{}) == 30);
}

TEST_CASE("classic distances match the known examples") {
  CostModel classic;
  CHECK(distance("GUMBO", "GAMBOL", classic) == 20);
  for (const char* word : {"BODY", "BUSY", "BURY", "BONY"})
    CHECK(distance("BDQY", word, classic) == 20);
  CHECK(distance("KITTEN", "SITTING", classic) == 30);
  CHECK(distance("HELLO", "HELLO", classic) == 0);
}

TEST_CASE("group weights break the four-way tie for BDQY") {
  CostModel model = weighted_model();
  CHECK(distance("BDQY", "BODY", model) == 8);
  CHECK(distance("BDQY", "BONY", model) == 14);
  CHECK(distance("BDQY", "BURY", model) == 20);
  CHECK(distance("BDQY", "BUSY", model) == 20);
}

TEST_CASE("non-letters are rejected") {
  CostModel classic;
  CHECK_THROWS_AS(distance("abc", "ABC", classic), std::domain_error);
  CHECK_THROWS_AS(distance("A B", "AB", classic), std::domain_error);
  CHECK_THROWS_AS(distance_matrix("A1", "A", classic), std::domain_error);
}

TEST_CASE("distance agrees with the full matrix") {
  std::mt19937_64 rng(20260819);
  CostModel model = weighted_model();
  for (int i = 0; i < 500; ++i) {
    std::string s = random_word(rng, "ABCDEFGHIJKLMNOPQRSTUVWXYZ", 8);
    std::string t = random_word(rng, "ABCDEFGHIJKLMNOPQRSTUVWXYZ", 8);
    CHECK(distance(s, t, model) == distance_matrix(s, t, model).result());
  }
}

TEST_CASE("cutoff variant") {
  CostModel classic;
  SECTION("reports Exceeded when the bound is too tight") {
    CHECK_FALSE(distance_with_cutoff("GUMBO", "GAMBOL", classic, 10));
    CHECK_FALSE(distance_with_cutoff("GUMBO", "GAMBOL", classic, 19));
  }
  SECTION("returns the exact value at or above the distance") {
    CHECK(distance_with_cutoff("GUMBO", "GAMBOL", classic, 20) == 20);
    CHECK(distance_with_cutoff("GUMBO", "GAMBOL", classic, 100) == 20);
  }
  SECTION("identical words pass a zero bound") {
    CHECK(distance_with_cutoff("ABC", "ABC", classic, 0) == 0);
  }
  SECTION("length gap alone can exceed the bound") {
    CHECK_FALSE(distance_with_cutoff("AB", "ABCDEF", classic, 30));
  }
}

TEST_CASE("cutoff-consistency on random pairs") {
  std::mt19937_64 rng(7);
  CostModel model = weighted_model();
  std::uniform_int_distribution<CostUnits> bound_dist(0, 60);
  for (int i = 0; i < 2000; ++i) {
    std::string s = random_word(rng, "ODQUVX", 6);
    std::string t = random_word(rng, "ODQUVX", 6);
    CostUnits bound = bound_dist(rng);
    CostUnits exact = distance(s, t, model);
    auto bounded = distance_with_cutoff(s, t, model, bound);
    if (exact <= bound) {
      REQUIRE(bounded.has_value());
      CHECK(*bounded == exact);
    } else {
      CHECK_FALSE(bounded.has_value());
    }
  }
}

TEST_CASE("matches the memoized recursion oracle") {
  std::mt19937_64 rng(42);
  CostModel classic;
  CostModel model = weighted_model();
  for (int i = 0; i < 2000; ++i) {
    std::string s = random_word(rng, "ODQUVX", 6);
    std::string t = random_word(rng, "ODQUVX", 6);
    CHECK(distance(s, t, classic) == oracle::distance(s, t, classic));
    CHECK(distance(s, t, model) == oracle::distance(s, t, model));
  }
}

TEST_CASE("empty group set degenerates to 10x textbook Levenshtein") {
  std::mt19937_64 rng(123);
  CostModel classic;
  for (int i = 0; i < 2000; ++i) {
    std::string s = random_word(rng, "ABCDE", 7);
    std::string t = random_word(rng, "ABCDE", 7);
    CHECK(distance(s, t, classic) == 10 * textbook_levenshtein(s, t));
  }
}

TEST_CASE("metric axioms hold under the weighted model") {
  std::mt19937_64 rng(99);
  CostModel model = weighted_model();
  for (int i = 0; i < 3000; ++i) {
    std::string s = random_word(rng, "ODQIJLT", 5);
    std::string t = random_word(rng, "ODQIJLT", 5);
    std::string u = random_word(rng, "ODQIJLT", 5);
    CostUnits st = distance(s, t, model);
    CHECK((st == 0) == (s == t));
    CHECK(st == distance(t, s, model));
    CHECK(distance(s, u, model) <= st + distance(t, u, model));
  }
}

TEST_CASE("distance respects the length bounds") {
  std::mt19937_64 rng(5);
  CostModel model = weighted_model();
  for (int i = 0; i < 2000; ++i) {
    std::string s = random_word(rng, "ABCODQ", 8);
    std::string t = random_word(rng, "ABCODQ", 8);
    CostUnits d = distance(s, t, model);
    std::size_t lo = s.size() > t.size() ? s.size() - t.size()
                                         : t.size() - s.size();
    CHECK(d >= 10 * lo);
    CHECK(d <= 10 * std::max(s.size(), t.size()));
  }
}

TEST_CASE("weighted distance never exceeds classic") {
  std::mt19937_64 rng(77);
  CostModel classic;
  CostModel model = weighted_model();
  for (int i = 0; i < 2000; ++i) {
    std::string s = random_word(rng, "ABODQUVFPCG", 8);
    std::string t = random_word(rng, "ABODQUVFPCG", 8);
    CHECK(distance(s, t, model) <= distance(s, t, classic));
  }
}

TEST_CASE("format_matrix lays out words and decimals") {
  DpMatrix m = distance_matrix("AB", "B", CostModel{});
  std::string text = lexdist::format_matrix(m, "AB", "B");
  CHECK(text.find("A") != std::string::npos);
  CHECK(text.find("B") != std::string::npos);
  CHECK(text.find("0.0") != std::string::npos);
  CHECK(text.find("2.0") != std::string::npos);
  // One line per matrix row plus the header.
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);
}
