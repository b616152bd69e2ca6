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

// lexdist command line: one-shot distance queries, nearest-word lookup,
// synthetic corpus generation, and the LD-vs-MLD evaluation.
//
// Exit codes: 0 ok, 1 usage or config problem, 2 data problem
// (unreadable or empty inputs).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lexdist/lexdist.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

// Thrown for unreadable/empty inputs so main can map them to exit 2.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

lexdist::ConfusionGroupSet groups_from_flag(const std::string& path) {
  if (path.empty()) return lexdist::default_confusion_groups();
  try {
    return lexdist::load_group_config(path);
  } catch (const std::runtime_error& e) {
    throw DataError(e.what());  // unreadable file
  }
}

lexdist::CostModel model_from_flag(const std::string& path) {
  // No config means the classic model for distance/lookup.
  if (path.empty()) return lexdist::CostModel{};
  return lexdist::CostModel{groups_from_flag(path)};
}

lexdist::LoadOptions load_options(const std::vector<std::size_t>& lengths) {
  lexdist::LoadOptions options;
  options.allowed_lengths.insert(lengths.begin(), lengths.end());
  return options;
}

lexdist::Lexicon load_lexicon_or_die(const std::string& path,
                                     const std::vector<std::size_t>& lengths) {
  try {
    return lexdist::Lexicon::from_file(path, load_options(lengths));
  } catch (const std::runtime_error& e) {
    throw DataError(e.what());
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write: " + path);
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Dictionary lookup via classic and confusion-group-weighted "
               "edit distance"};
  app.require_subcommand(1);

  std::string groups_path;  // empty = built-in defaults (or classic)
  std::string dict_path;
  std::string corpus_path;
  std::string out_path;
  std::string format = "human";
  std::vector<std::size_t> lengths;
  std::size_t k = 4;
  std::size_t n = 0;
  lexdist::NoiseParams noise;

  auto add_groups_flag = [&](CLI::App* cmd) {
    cmd->add_option("--groups", groups_path,
                    "Group config file (MEMBERS WEIGHT lines)");
  };
  auto add_dict_flag = [&](CLI::App* cmd) {
    cmd->add_option("--dict", dict_path, "Word list, one word per line")
        ->required();
    cmd->add_option("--lengths", lengths,
                    "Keep only these word lengths (e.g. --lengths 3,5)")
        ->delimiter(',');
  };
  auto add_noise_flags = [&](CLI::App* cmd) {
    cmd->add_option("--seed", noise.seed, "Generator seed");
    cmd->add_option("--p-sub", noise.p_sub,
                    "Per-character substitution probability")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--bias", noise.within_group_bias,
                    "Probability a substitution stays within its group")
        ->check(CLI::Range(0.0, 1.0));
  };

  // distance S T
  auto* cmd_distance = app.add_subcommand(
      "distance", "Edit distance between two words (decimal)");
  std::string word_s, word_t;
  bool verbose = false;
  cmd_distance->add_option("source", word_s, "Source word")->required();
  cmd_distance->add_option("target", word_t, "Target word")->required();
  add_groups_flag(cmd_distance);
  cmd_distance->add_flag("-v,--verbose", verbose, "Print the full matrix");

  // lookup QUERY --dict FILE
  auto* cmd_lookup =
      app.add_subcommand("lookup", "Closest dictionary words for a query");
  std::string query;
  cmd_lookup->add_option("query", query, "Word to look up")->required();
  add_dict_flag(cmd_lookup);
  add_groups_flag(cmd_lookup);
  cmd_lookup->add_option("--k", k, "Closest matches to return (ties kept)");

  // corrupt --dict FILE --n N
  auto* cmd_corrupt = app.add_subcommand(
      "corrupt", "Generate a TRUTH<TAB>OBSERVED corpus of noisy words");
  add_dict_flag(cmd_corrupt);
  add_groups_flag(cmd_corrupt);
  add_noise_flags(cmd_corrupt);
  cmd_corrupt->add_option("--n", n, "Number of pairs")->required();
  cmd_corrupt->add_option("-o,--out", out_path, "Output file (default stdout)");

  // eval --dict FILE (--corpus FILE | --n N)
  auto* cmd_eval = app.add_subcommand(
      "eval", "Compare classic vs weighted recovery over a corpus");
  add_dict_flag(cmd_eval);
  add_groups_flag(cmd_eval);
  add_noise_flags(cmd_eval);
  cmd_eval->add_option("--corpus", corpus_path, "Existing corpus TSV");
  cmd_eval->add_option("--n", n, "Generate this many pairs instead");
  cmd_eval->add_option("--k", k, "Closest matches per lookup");
  cmd_eval->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"human", "machine"}));
  cmd_eval->add_option("-o,--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // CLI11's own exit codes run past 100; fold every usage failure to 1.
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  if (cmd_distance->parsed()) {
    lexdist::CostModel model = model_from_flag(groups_path);
    std::string s = lexdist::normalize_word(word_s);
    std::string t = lexdist::normalize_word(word_t);
    if (verbose) {
      lexdist::DpMatrix matrix = lexdist::distance_matrix(s, t, model);
      std::cout << lexdist::format_matrix(matrix, s, t);
      std::cout << lexdist::format_cost(matrix.result()) << '\n';
    } else {
      std::cout << lexdist::format_cost(lexdist::distance(s, t, model)) << '\n';
    }
    return 0;
  }

  if (cmd_lookup->parsed()) {
    lexdist::Lexicon lex = load_lexicon_or_die(dict_path, lengths);
    lexdist::LookupResult result =
        lexdist::lookup(lex, query, model_from_flag(groups_path), k);
    for (const lexdist::Candidate& candidate : result.candidates)
      std::cout << candidate.word << '\t' << lexdist::format_cost(candidate.dist)
                << '\n';
    return 0;
  }

  if (cmd_corrupt->parsed()) {
    lexdist::Lexicon lex = load_lexicon_or_die(dict_path, lengths);
    auto pairs = lexdist::generate_corpus(lex, n, noise,
                                          groups_from_flag(groups_path));
    if (out_path.empty()) {
      lexdist::write_corpus(std::cout, pairs);
    } else {
      auto out = open_output(out_path);
      lexdist::write_corpus(out, pairs);
    }
    return 0;
  }

  if (cmd_eval->parsed()) {
    if (corpus_path.empty() == (n == 0))
      throw CLI::ValidationError("eval", "pass exactly one of --corpus or --n");
    lexdist::Lexicon lex = load_lexicon_or_die(dict_path, lengths);
    lexdist::ConfusionGroupSet groups = groups_from_flag(groups_path);

    lexdist::CorpusFile corpus;
    if (!corpus_path.empty()) {
      std::ifstream in(corpus_path);
      if (!in) throw DataError("cannot open corpus: " + corpus_path);
      corpus = lexdist::read_corpus(in);
      if (corpus.pairs.empty()) throw DataError("empty corpus: " + corpus_path);
    } else {
      corpus.pairs = lexdist::generate_corpus(lex, n, noise, groups);
    }

    lexdist::EvalReport report =
        lexdist::evaluate(lex, corpus.pairs, lexdist::CostModel{groups}, k);
    report.skipped = corpus.skipped;

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
      file = open_output(out_path);
      out = &file;
    }
    if (format == "machine")
      lexdist::write_machine_report(*out, report);
    else
      lexdist::write_human_report(*out, report);
    return 0;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
