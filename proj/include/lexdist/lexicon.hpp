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
#include <cctype>
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexdist/cost_model.hpp"

namespace lexdist {

// Uppercases an ASCII word; nullopt when any character falls outside
// A-Z after conversion (or the word is empty).
inline std::optional<std::string> try_normalize_word(std::string_view raw) {
  if (raw.empty()) return std::nullopt;
  std::string word;
  word.reserve(raw.size());
  for (char c : raw) {
    char up = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (!is_upper_alpha(up)) return std::nullopt;
    word.push_back(up);
  }
  return word;
}

// Throwing form, for boundaries where a bad word is a caller error.
inline std::string normalize_word(std::string_view raw) {
  auto word = try_normalize_word(raw);
  if (!word)
    throw std::domain_error("word \"" + std::string(raw) +
                            "\" is not a letter sequence A-Z");
  return *word;
}

struct LoadOptions {
  std::size_t min_len = 1;
  std::size_t max_len = std::numeric_limits<std::size_t>::max();
  std::set<std::size_t> allowed_lengths;  // empty = all lengths
};

// Deduplicated dictionary of normalized uppercase words, stored sorted
// by (length, word) so that every length bucket is one contiguous span.
// Immutable after load; lookups may share it freely across threads.
class Lexicon {
 public:
  // Reads one word per line. Lines are trimmed and uppercased; comment
  // lines starting with '#' and blank lines are ignored; anything that
  // fails [A-Z]+ or the length filters is counted as skipped.
  // An empty result is an error, since lookup over nothing is
  // meaningless.
  static Lexicon from_stream(std::istream& in, const LoadOptions& options = {},
                             std::string source_name = "<stream>") {
    if (!in)
      throw std::runtime_error("cannot read word list: " + source_name);
    std::set<std::string> seen;
    std::size_t skipped = 0;
    std::string line;
    while (std::getline(in, line)) {
      std::size_t begin = line.find_first_not_of(" \t\r\n");
      if (begin == std::string::npos) continue;
      std::size_t end = line.find_last_not_of(" \t\r\n");
      std::string_view token(line.data() + begin, end - begin + 1);
      if (token.front() == '#') continue;
      auto word = try_normalize_word(token);
      if (!word || !length_allowed(word->size(), options)) {
        ++skipped;
        continue;
      }
      seen.insert(std::move(*word));
    }
    if (seen.empty())
      throw std::runtime_error("empty lexicon: " + source_name);

    Lexicon lex;
    lex.source_name_ = std::move(source_name);
    lex.skipped_ = skipped;
    lex.words_.assign(seen.begin(), seen.end());
    std::stable_sort(lex.words_.begin(), lex.words_.end(),
                     [](const std::string& a, const std::string& b) {
                       return a.size() < b.size();
                     });
    std::size_t start = 0;
    for (std::size_t i = 1; i <= lex.words_.size(); ++i) {
      if (i == lex.words_.size() ||
          lex.words_[i].size() != lex.words_[start].size()) {
        lex.spans_[lex.words_[start].size()] = {start, i};
        start = i;
      }
    }
    return lex;
  }

  static Lexicon from_file(const std::filesystem::path& path,
                           const LoadOptions& options = {}) {
    std::ifstream in(path);
    if (!in)
      throw std::runtime_error("cannot open word list: " + path.string());
    return from_stream(in, options, path.string());
  }

  // All words, sorted by (length, word). The order is part of the
  // contract: corpus sampling indexes into it.
  const std::vector<std::string>& words() const { return words_; }

  std::span<const std::string> words_of_length(std::size_t len) const {
    auto it = spans_.find(len);
    if (it == spans_.end()) return {};
    return {words_.data() + it->second.first,
            it->second.second - it->second.first};
  }

  // Lengths present, ascending.
  std::vector<std::size_t> lengths() const {
    std::vector<std::size_t> out;
    out.reserve(spans_.size());
    for (const auto& [len, span] : spans_) out.push_back(len);
    return out;
  }

  std::size_t size() const { return words_.size(); }
  std::size_t skipped() const { return skipped_; }
  const std::string& source_name() const { return source_name_; }

 private:
  static bool length_allowed(std::size_t len, const LoadOptions& options) {
    if (len < options.min_len || len > options.max_len) return false;
    return options.allowed_lengths.empty() ||
           options.allowed_lengths.count(len) > 0;
  }

  std::vector<std::string> words_;
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> spans_;
  std::string source_name_;
  std::size_t skipped_ = 0;
};

}  // namespace lexdist
