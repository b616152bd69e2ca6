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
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lexdist/lookup.hpp"
#include "lexdist/noise.hpp"

namespace lexdist {

// Remaining failures for one method within one length bucket.
//   strict:   the truth was not the unique closest candidate
//   coverage: the truth was absent from the candidate list entirely
// Strict is the harder bar, so strict >= coverage always.
struct MethodCounts {
  std::size_t unrecognized_strict = 0;
  std::size_t unrecognized_coverage = 0;

  friend bool operator==(const MethodCounts&, const MethodCounts&) = default;
};

struct BucketRow {
  std::size_t total = 0;
  std::size_t baseline_miss = 0;  // pairs the noise actually changed
  MethodCounts ld;                // classic, uniform costs
  MethodCounts mld;               // group-weighted costs

  friend bool operator==(const BucketRow&, const BucketRow&) = default;
};

// Word-recovery comparison of the classic and group-weighted methods
// over one corpus, bucketed by word length. Both methods score the
// identical pairs with the identical k; the corpus hash in the header
// pins that down.
struct EvalReport {
  std::size_t k = 0;
  std::uint64_t corpus_hash = 0;
  std::size_t skipped = 0;  // malformed corpus records dropped on read
  std::map<std::size_t, BucketRow> by_length;
  BucketRow overall;

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

// Runs both methods over every pair. The weighted model carries the
// confusion groups; the classic baseline is derived from it by
// flattening every mismatch to one full edit.
inline EvalReport evaluate(const Lexicon& lex,
                           const std::vector<CorpusPair>& pairs,
                           const CostModel& weighted, std::size_t k) {
  const CostModel classic;
  EvalReport report;
  report.k = k;
  report.corpus_hash = corpus_hash(pairs);

  auto tally = [&](BucketRow& row, const CorpusPair& pair) {
    row.total += 1;
    if (pair.observed != pair.truth) row.baseline_miss += 1;
    auto score = [&](const CostModel& model, MethodCounts& counts) {
      RecognitionOutcome outcome =
          classify_recognition(lookup(lex, pair.observed, model, k), pair.truth);
      if (outcome != RecognitionOutcome::UniqueBest)
        counts.unrecognized_strict += 1;
      if (outcome == RecognitionOutcome::Miss)
        counts.unrecognized_coverage += 1;
    };
    score(classic, row.ld);
    score(weighted, row.mld);
  };

  for (const CorpusPair& pair : pairs) {
    tally(report.by_length[pair.truth.size()], pair);
    tally(report.overall, pair);
  }
  return report;
}

// --- report serialization --------------------------------------------------
//
// Machine form is line-oriented TSV with a fixed field order, one
// record per bucket and method plus "all" rows:
//
//   #lexdist-eval\tk=4\tcorpus_fnv1a64=<16 hex>\tskipped=0
//   #bucket\tmethod\ttotal\tbaseline_miss\tunrecognized_strict\tunrecognized_coverage
//   3\tLD\t250\t35\t23\t4
//   ...
//   all\tMLD\t500\t93\t52\t8

namespace detail {

inline std::string hash_hex(std::uint64_t h) {
  std::ostringstream out;
  out << std::hex << std::setfill('0') << std::setw(16) << h;
  return out.str();
}

inline void write_machine_rows(std::ostream& out, const std::string& bucket,
                               const BucketRow& row) {
  auto record = [&](const char* method, const MethodCounts& counts) {
    out << bucket << '\t' << method << '\t' << row.total << '\t'
        << row.baseline_miss << '\t' << counts.unrecognized_strict << '\t'
        << counts.unrecognized_coverage << '\n';
  };
  record("LD", row.ld);
  record("MLD", row.mld);
}

}  // namespace detail

inline void write_machine_report(std::ostream& out, const EvalReport& report) {
  out << "#lexdist-eval\tk=" << report.k << "\tcorpus_fnv1a64="
      << detail::hash_hex(report.corpus_hash) << "\tskipped=" << report.skipped
      << '\n';
  out << "#bucket\tmethod\ttotal\tbaseline_miss\tunrecognized_strict\t"
         "unrecognized_coverage\n";
  for (const auto& [len, row] : report.by_length)
    detail::write_machine_rows(out, std::to_string(len), row);
  detail::write_machine_rows(out, "all", report.overall);
}

// Inverse of write_machine_report; round-trips every count exactly.
inline EvalReport parse_machine_report(std::istream& in) {
  EvalReport report;
  std::string line;
  if (!std::getline(in, line) || line.rfind("#lexdist-eval\t", 0) != 0)
    throw std::runtime_error("not a machine report: missing #lexdist-eval header");
  {
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, '\t')) {
      if (field.rfind("k=", 0) == 0)
        report.k = std::stoul(field.substr(2));
      else if (field.rfind("corpus_fnv1a64=", 0) == 0)
        report.corpus_hash = std::stoull(field.substr(15), nullptr, 16);
      else if (field.rfind("skipped=", 0) == 0)
        report.skipped = std::stoul(field.substr(8));
    }
  }
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    std::string bucket, method;
    std::size_t total, baseline, strict, coverage;
    if (!(std::getline(fields, bucket, '\t') &&
          std::getline(fields, method, '\t') &&
          (fields >> total >> baseline >> strict >> coverage)))
      throw std::runtime_error("malformed report record: " + line);
    BucketRow& row = bucket == "all" ? report.overall
                                     : report.by_length[std::stoul(bucket)];
    row.total = total;
    row.baseline_miss = baseline;
    MethodCounts& counts = method == "MLD" ? row.mld : row.ld;
    counts.unrecognized_strict = strict;
    counts.unrecognized_coverage = coverage;
  }
  return report;
}

// Table shaped like the classic unrecognized-words comparison: one
// block per recognition criterion, one row per length bucket.
inline void write_human_report(std::ostream& out, const EvalReport& report) {
  out << "Evaluated " << report.overall.total << " pairs (corpus fnv1a64 "
      << detail::hash_hex(report.corpus_hash) << ", k=" << report.k << ")\n";
  if (report.skipped > 0)
    out << "Skipped " << report.skipped << " malformed corpus record(s)\n";

  auto block = [&](const char* title, auto pick_strict) {
    out << '\n' << title << '\n';
    out << "  Length     Total  Unrecognized  After LD  After MLD\n";
    auto line = [&](const std::string& label, const BucketRow& row) {
      out << "  " << std::left << std::setw(9) << label << std::right
          << std::setw(7) << row.total << std::setw(14) << row.baseline_miss
          << std::setw(10) << pick_strict(row.ld) << std::setw(11)
          << pick_strict(row.mld) << '\n';
    };
    for (const auto& [len, row] : report.by_length)
      line(std::to_string(len), row);
    line("all", report.overall);
  };

  block("Strict recognition (truth must be the unique closest candidate):",
        [](const MethodCounts& counts) { return counts.unrecognized_strict; });
  block("Coverage (truth anywhere in the returned candidates):",
        [](const MethodCounts& counts) { return counts.unrecognized_coverage; });
}

}  // namespace lexdist
