// Copyright 2026 The semspace Authors
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
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semspace/corpus.hpp"
#include "semspace/lsa.hpp"
#include "semspace/similarity.hpp"
#include "semspace/stemming.hpp"

namespace semspace {

enum class PairLabel { Similar, Different };

std::string_view to_string(PairLabel label) noexcept;

struct WordPair {
  std::string word_a;
  std::string word_b;
  PairLabel label = PairLabel::Similar;
  std::optional<std::string> gloss;
  std::optional<std::string> transliteration;
};

/// Parses `word_a<TAB>word_b<TAB>Similar|Different[<TAB>gloss[<TAB>transliteration]]`
/// lines; blank lines and '#' comments are skipped. Throws Error(Format)
/// with `source:line`.
std::vector<WordPair> parse_pairs(std::string_view text, std::string_view source = "<pairs>");
std::vector<WordPair> load_pairs(const std::filesystem::path& file);

struct ReportRow {
  WordPair pair;
  StemMode stemmer = StemMode::Light;
  std::string stem_a;  // row keys the words mapped to
  std::string stem_b;
  std::array<SimilarityResult, 4> measures;  // Cosine, Euclidean, Pearson, Jaccard
  std::vector<std::string> out_of_vocabulary;  // surface words missing from the space

  bool conflated() const { return out_of_vocabulary.empty() && stem_a == stem_b; }
};

struct SpaceSummary {
  StemMode stemmer = StemMode::Light;
  std::size_t rows = 0;
  std::size_t columns = 0;
  std::size_t k = 0;
};

struct ReportMetadata {
  std::uint64_t corpus_fingerprint = 0;
  std::uint64_t rules_fingerprint = 0;
  CorpusStats corpus;
  Scaling scaling = Scaling::PlainU;
  bool normalize = false;
  std::vector<SpaceSummary> spaces;
};

struct ComparisonReport {
  ReportMetadata metadata;
  std::vector<StemMode> stemmers;
  std::vector<ReportRow> rows;  // stemmer-major, pairs in input order
};

struct ComparisonOptions {
  std::vector<StemMode> stemmers = {StemMode::Light, StemMode::Root};
  std::optional<std::size_t> k;
  Scaling scaling = Scaling::PlainU;
  /// Scale rows to unit length before measuring.
  bool normalize = false;
};

/// Builds one space per requested stemmer over the same corpus and scores
/// every pair in each. Missing words become marked rows.
ComparisonReport run_comparison(const Corpus& corpus, std::span<const WordPair> pairs,
                                std::shared_ptr<const RuleSet> rules, const ComparisonOptions& options);

/// Scores one pair in an existing space; used by run_comparison and `sim`.
ReportRow score_pair(const SemanticSpace& space, const Stemmer& stemmer, const WordPair& pair, bool normalize);

enum class ReportFormat { Tsv, Markdown };

std::optional<ReportFormat> parse_report_format(std::string_view name) noexcept;

/// Formats a measure value the way reports print it.
std::string format_value(double v);

std::string render_report(const ComparisonReport& report, ReportFormat format);

}  // namespace semspace
