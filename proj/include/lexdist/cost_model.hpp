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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lexdist {

// All edit costs are exact integers in tenths of one classic edit, so
// fractional substitution weights (0.4 and friends) never touch floating
// point and ties compare exactly. A classic insert/delete/substitute
// costs kEditCost = 10 units; display divides by 10.
using CostUnits = std::uint32_t;

inline constexpr CostUnits kEditCost = 10;
inline constexpr int kAlphabetSize = 26;

inline constexpr bool is_upper_alpha(char c) { return c >= 'A' && c <= 'Z'; }

inline int letter_index(char c) {
  if (!is_upper_alpha(c))
    throw std::domain_error(std::string("character '") + c +
                            "' outside alphabet A-Z");
  return c - 'A';
}

// Renders units as a decimal string: 20 -> "2.0", 8 -> "0.8".
inline std::string format_cost(CostUnits units) {
  return std::to_string(units / 10) + "." + std::to_string(units % 10);
}

// One set of mutually confusable letters sharing a substitution weight.
struct ConfusionGroup {
  std::string members;  // distinct uppercase letters, at least two
  CostUnits weight;     // 0 < weight < kEditCost
};

// Validated collection of pairwise-disjoint confusion groups. An empty
// set describes the classic model where every mismatch costs kEditCost.
class ConfusionGroupSet {
 public:
  ConfusionGroupSet() = default;

  explicit ConfusionGroupSet(std::vector<ConfusionGroup> groups)
      : groups_(std::move(groups)) {
    membership_.fill(-1);
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      const ConfusionGroup& group = groups_[g];
      if (group.members.size() < 2)
        throw std::invalid_argument("confusion group needs at least two letters, got \"" +
                                    group.members + "\"");
      if (group.weight == 0 || group.weight >= kEditCost)
        throw std::invalid_argument(
            "group weight must be strictly between 0 and " +
            format_cost(kEditCost) + ", got " + format_cost(group.weight));
      for (char c : group.members) {
        int idx = letter_index(c);
        if (membership_[static_cast<std::size_t>(idx)] >= 0)
          throw std::invalid_argument(std::string("letter '") + c +
                                      "' appears in two groups");
        membership_[static_cast<std::size_t>(idx)] = static_cast<int>(g);
      }
    }
  }

  bool empty() const { return groups_.empty(); }
  std::size_t size() const { return groups_.size(); }
  const std::vector<ConfusionGroup>& groups() const { return groups_; }

  // Index of the group containing c, if any. Throws on non A-Z input.
  std::optional<std::size_t> group_of(char c) const {
    if (groups_.empty()) {
      letter_index(c);
      return std::nullopt;
    }
    int g = membership_[static_cast<std::size_t>(letter_index(c))];
    if (g < 0) return std::nullopt;
    return static_cast<std::size_t>(g);
  }

 private:
  std::vector<ConfusionGroup> groups_;
  std::array<int, kAlphabetSize> membership_{};
};

// The five shape-confusion groups shipped as defaults, all at weight 0.4.
inline ConfusionGroupSet default_confusion_groups() {
  return ConfusionGroupSet({{"ODQ", 4},
                            {"IJLT", 4},
                            {"UV", 4},
                            {"FP", 4},
                            {"CG", 4}});
}

// Immutable substitution/insert/delete cost table over A-Z.
//
// substitution(a, a) = 0; distinct letters in the same confusion group
// cost that group's weight; all other mismatches cost kEditCost.
// Insertions and deletions always cost kEditCost. The table is symmetric
// and satisfies the triangle inequality, so the resulting edit distance
// is a metric.
class CostModel {
 public:
  // Classic model: every mismatch costs one full edit.
  CostModel() : CostModel(ConfusionGroupSet{}) {}

  explicit CostModel(ConfusionGroupSet groups) : groups_(std::move(groups)) {
    for (int a = 0; a < kAlphabetSize; ++a)
      for (int b = 0; b < kAlphabetSize; ++b)
        table_[static_cast<std::size_t>(a * kAlphabetSize + b)] =
            a == b ? 0 : kEditCost;
    for (const ConfusionGroup& group : groups_.groups())
      for (char a : group.members)
        for (char b : group.members)
          if (a != b)
            table_[cell(a - 'A', b - 'A')] = group.weight;
  }

  // Builds a model from an arbitrary substitution function sampled over
  // A-Z. The function must be symmetric with a zero diagonal; mismatch
  // costs must lie in (0, kEditCost] and obey the triangle inequality.
  template <typename Fn>
  static CostModel with_substitution(Fn&& fn) {
    CostModel model;
    for (int a = 0; a < kAlphabetSize; ++a)
      for (int b = 0; b < kAlphabetSize; ++b)
        model.table_[cell(a, b)] =
            fn(static_cast<char>('A' + a), static_cast<char>('A' + b));
    model.groups_ = ConfusionGroupSet{};
    model.validate_table();
    return model;
  }

  CostUnits substitution(char a, char b) const {
    return table_[cell(letter_index(a), letter_index(b))];
  }

  CostUnits insert_cost() const { return kEditCost; }
  CostUnits delete_cost() const { return kEditCost; }

  const ConfusionGroupSet& groups() const { return groups_; }

 private:
  static std::size_t cell(int a, int b) {
    return static_cast<std::size_t>(a * kAlphabetSize + b);
  }

  void validate_table() const {
    for (int a = 0; a < kAlphabetSize; ++a) {
      if (table_[cell(a, a)] != 0)
        throw std::invalid_argument("substitution table diagonal must be zero");
      for (int b = 0; b < kAlphabetSize; ++b) {
        if (table_[cell(a, b)] != table_[cell(b, a)])
          throw std::invalid_argument("substitution table must be symmetric");
        if (a != b && (table_[cell(a, b)] == 0 || table_[cell(a, b)] > kEditCost))
          throw std::invalid_argument("mismatch costs must lie in (0, " +
                                      format_cost(kEditCost) + "]");
      }
    }
    for (int a = 0; a < kAlphabetSize; ++a)
      for (int b = 0; b < kAlphabetSize; ++b)
        for (int c = 0; c < kAlphabetSize; ++c)
          if (table_[cell(a, c)] > table_[cell(a, b)] + table_[cell(b, c)])
            throw std::invalid_argument("substitution table violates the triangle inequality");
  }

  std::array<CostUnits, kAlphabetSize * kAlphabetSize> table_{};
  ConfusionGroupSet groups_;
};

}  // namespace lexdist
