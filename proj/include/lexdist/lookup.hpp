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
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include "lexdist/distance.hpp"
#include "lexdist/lexicon.hpp"

namespace lexdist {

struct Candidate {
  std::string word;
  CostUnits dist;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

// Ranked nearest words for one query. Sorted by (dist, word); holds
// every lexicon word whose distance is at most the k-th smallest, so a
// tie at the cutoff is never split (the list may be longer than k).
struct LookupResult {
  std::string query;
  std::vector<Candidate> candidates;
  std::size_t k_requested = 0;

  CostUnits best_distance() const { return candidates.front().dist; }
};

// Where the ground-truth word landed in a lookup result.
//   UniqueBest:   sole candidate at the minimum distance
//   TiedBest:     at the minimum distance, sharing it with others
//   InCandidates: returned, but beaten by closer words
//   Miss:         not returned at all
enum class RecognitionOutcome { UniqueBest, TiedBest, InCandidates, Miss };

inline const char* to_string(RecognitionOutcome outcome) {
  switch (outcome) {
    case RecognitionOutcome::UniqueBest: return "unique-best";
    case RecognitionOutcome::TiedBest: return "tied-best";
    case RecognitionOutcome::InCandidates: return "in-candidates";
    case RecognitionOutcome::Miss: return "miss";
  }
  return "?";
}

// Top-k nearest-word scan with tie expansion. Deterministic: the result
// depends only on (lex, query, model, k), never on scan order. Length
// buckets are visited nearest-length first and dropped once the length
// lower bound |len(q) - len(w)| * 10 exceeds the current cutoff;
// individual words are abandoned early via distance_with_cutoff. The
// pruning is transparent: results match a full scan exactly.
inline LookupResult lookup(const Lexicon& lex, std::string_view query,
                           const CostModel& model, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  std::string q = normalize_word(query);
  const std::size_t qlen = q.size();

  std::vector<std::size_t> lengths = lex.lengths();
  std::sort(lengths.begin(), lengths.end(),
            [qlen](std::size_t a, std::size_t b) {
              std::size_t da = a > qlen ? a - qlen : qlen - a;
              std::size_t db = b > qlen ? b - qlen : qlen - b;
              return da != db ? da < db : a < b;
            });

  // k smallest distances seen so far, with multiplicity; the top is the
  // running cutoff once k words have been scored.
  std::priority_queue<CostUnits> best;
  std::vector<Candidate> kept;
  auto cutoff = [&]() -> std::optional<CostUnits> {
    if (best.size() < k) return std::nullopt;
    return best.top();
  };

  for (std::size_t len : lengths) {
    std::size_t gap = len > qlen ? len - qlen : qlen - len;
    auto bound = cutoff();
    if (bound && gap * kEditCost > *bound) continue;
    for (const std::string& word : lex.words_of_length(len)) {
      std::optional<CostUnits> d;
      if (bound)
        d = distance_with_cutoff(q, word, model, *bound);
      else
        d = distance(q, word, model);
      if (!d) continue;
      kept.push_back({word, *d});
      best.push(*d);
      if (best.size() > k) best.pop();
      bound = cutoff();
    }
  }

  // The scan keeps everything at or below the running cutoff, which
  // only tightens; trim to the final one and order by (dist, word).
  CostUnits final_cutoff = best.top();
  std::erase_if(kept, [&](const Candidate& c) { return c.dist > final_cutoff; });
  std::sort(kept.begin(), kept.end(), [](const Candidate& a, const Candidate& b) {
    return a.dist != b.dist ? a.dist < b.dist : a.word < b.word;
  });

  return LookupResult{std::move(q), std::move(kept), k};
}

// Classifies how well a lookup recovered the ground-truth word.
inline RecognitionOutcome classify_recognition(const LookupResult& result,
                                               std::string_view truth) {
  std::string want = normalize_word(truth);
  const auto& c = result.candidates;
  auto hit = std::find_if(c.begin(), c.end(),
                          [&](const Candidate& cand) { return cand.word == want; });
  if (hit == c.end()) return RecognitionOutcome::Miss;
  if (hit->dist > result.best_distance()) return RecognitionOutcome::InCandidates;
  std::size_t at_best = 0;
  for (const Candidate& cand : c) {
    if (cand.dist != result.best_distance()) break;
    ++at_best;
  }
  return at_best == 1 ? RecognitionOutcome::UniqueBest
                      : RecognitionOutcome::TiedBest;
}

}  // namespace lexdist
