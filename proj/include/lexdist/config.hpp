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

#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "lexdist/cost_model.hpp"

namespace lexdist {

namespace detail {

// Parses a decimal weight like "0.4" or ".4" into tenth-units. The
// value must be an exact multiple of 0.1 strictly between 0 and 1;
// anything else (including extra nonzero digits) is rejected.
inline CostUnits parse_weight(const std::string& text) {
  auto fail = [&](const std::string& why) -> CostUnits {
    throw std::invalid_argument("bad weight \"" + text + "\": " + why);
  };
  std::size_t dot = text.find('.');
  if (dot == std::string::npos) return fail("expected a decimal like 0.4");
  std::string whole = text.substr(0, dot);
  std::string frac = text.substr(dot + 1);
  if (frac.empty()) return fail("missing digits after the decimal point");
  for (char c : whole)
    if (c < '0' || c > '9') return fail("not a number");
  for (char c : frac)
    if (c < '0' || c > '9') return fail("not a number");
  for (std::size_t k = 1; k < frac.size(); ++k)
    if (frac[k] != '0') return fail("must be a multiple of 0.1");
  if (!whole.empty() && whole != "0")
    return fail("must lie strictly between 0 and 1");
  CostUnits units = static_cast<CostUnits>(frac[0] - '0');
  if (units == 0) return fail("must lie strictly between 0 and 1");
  return units;
}

}  // namespace detail

// Reads a confusion-group config: one group per line as
//   MEMBERS WEIGHT
// e.g. "ODQ 0.4". Blank lines and lines starting with '#' are ignored.
// Validation errors carry the offending line number.
inline ConfusionGroupSet parse_group_config(std::istream& in) {
  std::vector<ConfusionGroup> groups;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string members, weight_text, extra;
    if (!(fields >> members >> weight_text) || (fields >> extra))
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected MEMBERS WEIGHT");
    try {
      for (char c : members) letter_index(c);
      groups.push_back({members, detail::parse_weight(weight_text)});
    } catch (const std::exception& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " +
                                  e.what());
    }
  }
  return ConfusionGroupSet(std::move(groups));
}

inline ConfusionGroupSet load_group_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open group config: " + path.string());
  try {
    return parse_group_config(in);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

}  // namespace lexdist
