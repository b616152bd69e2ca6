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

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lexdist/cost_model.hpp"

namespace lexdist {

namespace detail {

inline void require_alpha(std::string_view word) {
  for (char c : word)
    if (!is_upper_alpha(c))
      throw std::domain_error(std::string("character '") + c +
                              "' outside alphabet A-Z");
}

}  // namespace detail

// Full dynamic-programming table for source s (columns 0..n) against
// target t (rows 0..m). Cell (i, j) holds the cost of transforming the
// first j characters of s into the first i characters of t.
class DpMatrix {
 public:
  DpMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

  CostUnits& at(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
  CostUnits at(std::size_t i, std::size_t j) const {
    return cells_[i * cols_ + j];
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  // The distance sits in the lower right corner.
  CostUnits result() const { return cells_.back(); }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<CostUnits> cells_;
};

// Materializes the whole table. Row 0 is initialized with multiples of
// the insert cost, column 0 with multiples of the delete cost, and
// every inner cell is
//   min(above + delete, left + insert, diagonal + substitution).
// Both words must already be normalized uppercase (possibly empty).
inline DpMatrix distance_matrix(std::string_view source,
                                std::string_view target,
                                const CostModel& model) {
  detail::require_alpha(source);
  detail::require_alpha(target);
  const std::size_t n = source.size();
  const std::size_t m = target.size();
  DpMatrix d(m + 1, n + 1);
  for (std::size_t j = 0; j <= n; ++j)
    d.at(0, j) = static_cast<CostUnits>(j) * model.insert_cost();
  for (std::size_t i = 0; i <= m; ++i)
    d.at(i, 0) = static_cast<CostUnits>(i) * model.delete_cost();
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      CostUnits sub = model.substitution(source[j - 1], target[i - 1]);
      d.at(i, j) = std::min({d.at(i - 1, j) + model.delete_cost(),
                             d.at(i, j - 1) + model.insert_cost(),
                             d.at(i - 1, j - 1) + sub});
    }
  }
  return d;
}

namespace detail {

// Shared rolling-row core: O(min(m, n)) storage. When bound is set,
// abandons once a whole row exceeds it and reports nullopt; the final
// value is also checked against the bound. The cost table is symmetric,
// so swapping the words never changes the result.
inline std::optional<CostUnits> rolling_distance(
    std::string_view source, std::string_view target, const CostModel& model,
    std::optional<CostUnits> bound) {
  require_alpha(source);
  require_alpha(target);
  if (source.size() < target.size()) std::swap(source, target);
  // source is now the longer word (outer loop), target the shorter (row).
  const std::size_t outer = source.size();
  const std::size_t inner = target.size();

  if (bound && (outer - inner) * kEditCost > *bound) return std::nullopt;

  std::vector<CostUnits> prev(inner + 1);
  std::vector<CostUnits> cur(inner + 1);
  for (std::size_t j = 0; j <= inner; ++j)
    prev[j] = static_cast<CostUnits>(j) * kEditCost;

  for (std::size_t i = 1; i <= outer; ++i) {
    cur[0] = static_cast<CostUnits>(i) * kEditCost;
    CostUnits row_min = cur[0];
    for (std::size_t j = 1; j <= inner; ++j) {
      CostUnits sub = model.substitution(source[i - 1], target[j - 1]);
      cur[j] = std::min({prev[j] + kEditCost, cur[j - 1] + kEditCost,
                         prev[j - 1] + sub});
      row_min = std::min(row_min, cur[j]);
    }
    if (bound && row_min > *bound) return std::nullopt;
    std::swap(prev, cur);
  }
  if (bound && prev[inner] > *bound) return std::nullopt;
  return prev[inner];
}

}  // namespace detail

// Edit distance between two normalized uppercase words under the given
// cost model. Value-identical to distance_matrix(...).result().
inline CostUnits distance(std::string_view source, std::string_view target,
                          const CostModel& model) {
  return *detail::rolling_distance(source, target, model, std::nullopt);
}

// Early-abandoning variant: returns the exact distance when it is at
// most bound, otherwise nullopt. Agrees with distance() whenever a
// value is produced.
inline std::optional<CostUnits> distance_with_cutoff(std::string_view source,
                                                     std::string_view target,
                                                     const CostModel& model,
                                                     CostUnits bound) {
  return detail::rolling_distance(source, target, model, bound);
}

// Renders the full table with the source spelled across the top and the
// target down the side, one decimal per cell.
inline std::string format_matrix(const DpMatrix& d, std::string_view source,
                                 std::string_view target) {
  constexpr int kWidth = 6;
  std::ostringstream out;
  auto pad = [&](const std::string& text) {
    for (std::size_t k = text.size(); k < kWidth; ++k) out << ' ';
    out << text;
  };
  out << "  ";
  pad("");
  for (char c : source) pad(std::string(1, c));
  out << '\n';
  for (std::size_t i = 0; i < d.rows(); ++i) {
    out << (i == 0 ? ' ' : target[i - 1]) << ' ';
    for (std::size_t j = 0; j < d.cols(); ++j) pad(format_cost(d.at(i, j)));
    out << '\n';
  }
  return out.str();
}

}  // namespace lexdist
