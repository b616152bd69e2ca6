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

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lexdist/cost_model.hpp"
#include "lexdist/distance.hpp"
#include "lexdist/lexicon.hpp"
#include "lexdist/rng.hpp"

namespace lexdist {

// Substitution-only corruption, standing in for a sloppy OCR front end.
// Noise never inserts or deletes, so the observed word always has the
// ground truth's length.
struct NoiseParams {
  double p_sub = 0.3;             // per-character substitution probability
  double within_group_bias = 0.8; // chance a grouped letter stays in-group
  std::uint64_t seed = 0;

  void validate() const {
    if (p_sub < 0.0 || p_sub > 1.0)
      throw std::invalid_argument("p_sub must lie in [0, 1]");
    if (within_group_bias < 0.0 || within_group_bias > 1.0)
      throw std::invalid_argument("within_group_bias must lie in [0, 1]");
  }
};

struct CorpusPair {
  std::string truth;
  std::string observed;

  friend bool operator==(const CorpusPair&, const CorpusPair&) = default;
};

// Corrupts one word. Each position p consumes up to three
// counter-addressed draws under word_key(seed, word):
//   draw 3p   -> substitute here iff unit_interval < p_sub
//   draw 3p+1 -> if the letter is grouped: stay in-group iff < bias
//   draw 3p+2 -> pick the replacement (mod the choice count)
// In-group picks choose among the group's other members in config
// order; out-of-group picks choose among the other 25 letters in
// alphabet order. Draw addresses are fixed per position, so skipped
// draws never shift later ones.
inline std::string corrupt_word(std::string_view word,
                                const NoiseParams& params,
                                const ConfusionGroupSet& groups) {
  params.validate();
  detail::require_alpha(word);
  const std::uint64_t key = rng::word_key(params.seed, word);
  std::string out(word);
  for (std::size_t p = 0; p < out.size(); ++p) {
    if (rng::unit_interval(rng::draw(key, 3 * p)) >= params.p_sub) continue;
    const char original = out[p];
    auto group = groups.group_of(original);
    if (group &&
        rng::unit_interval(rng::draw(key, 3 * p + 1)) < params.within_group_bias) {
      const std::string& members = groups.groups()[*group].members;
      std::string others;
      for (char c : members)
        if (c != original) others.push_back(c);
      out[p] = others[rng::draw(key, 3 * p + 2) % others.size()];
    } else {
      std::uint64_t pick = rng::draw(key, 3 * p + 2) % (kAlphabetSize - 1);
      char c = static_cast<char>('A' + pick);
      if (c >= original) ++c;  // skip the original letter
      out[p] = c;
    }
  }
  return out;
}

// Draws n (truth, observed) pairs. Truths are sampled uniformly from
// the lexicon's word array (draw 2i mod size under key mix64(seed));
// each pair corrupts its truth under its own derived seed (draw 2i+1),
// so pairs are independent and the whole corpus is reproducible from
// (lexicon, n, params, groups) alone, in any generation order.
inline std::vector<CorpusPair> generate_corpus(const Lexicon& lex,
                                               std::size_t n,
                                               const NoiseParams& params,
                                               const ConfusionGroupSet& groups) {
  params.validate();
  if (n == 0) throw std::invalid_argument("corpus size must be at least 1");
  const std::uint64_t key = rng::mix64(params.seed);
  std::vector<CorpusPair> pairs;
  pairs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& truth =
        lex.words()[rng::draw(key, 2 * i) % lex.size()];
    NoiseParams pair_params = params;
    pair_params.seed = rng::draw(key, 2 * i + 1);
    pairs.push_back({truth, corrupt_word(truth, pair_params, groups)});
  }
  return pairs;
}

// --- corpus files: tab-separated "TRUTH<TAB>OBSERVED" lines ---------------

inline void write_corpus(std::ostream& out,
                         const std::vector<CorpusPair>& pairs) {
  for (const CorpusPair& pair : pairs)
    out << pair.truth << '\t' << pair.observed << '\n';
}

struct CorpusFile {
  std::vector<CorpusPair> pairs;
  std::size_t skipped = 0;  // malformed or non-word records
};

// Reads a corpus, skipping (and counting) records that are missing a
// field or fail [A-Z]+ normalization. Blank and '#' lines are ignored.
inline CorpusFile read_corpus(std::istream& in) {
  CorpusFile corpus;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      ++corpus.skipped;
      continue;
    }
    auto truth = try_normalize_word(line.substr(0, tab));
    auto observed = try_normalize_word(line.substr(tab + 1));
    if (!truth || !observed) {
      ++corpus.skipped;
      continue;
    }
    corpus.pairs.push_back({std::move(*truth), std::move(*observed)});
  }
  return corpus;
}

// Hash of a corpus in its file serialization, stamped into evaluation
// reports so both methods can be shown to have scored identical data.
inline std::uint64_t corpus_hash(const std::vector<CorpusPair>& pairs) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  auto feed = [&](std::string_view text) {
    for (char c : text) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001B3ULL;
    }
  };
  for (const CorpusPair& pair : pairs) {
    feed(pair.truth);
    feed("\t");
    feed(pair.observed);
    feed("\n");
  }
  return h;
}

}  // namespace lexdist
