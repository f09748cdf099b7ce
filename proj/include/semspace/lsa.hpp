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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semspace/corpus.hpp"
#include "semspace/dense.hpp"
#include "semspace/error.hpp"
#include "semspace/stemming.hpp"
#include "semspace/svd.hpp"

namespace semspace {

/// Dense token <-> row index map; indices follow first insertion.
class Vocabulary {
 public:
  std::size_t add(std::string_view token);
  std::optional<std::size_t> find(std::string_view token) const;

  const std::string& token(std::size_t index) const { return tokens_.at(index); }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }
  std::size_t size() const noexcept { return tokens_.size(); }

  bool operator==(const Vocabulary& other) const { return tokens_ == other.tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct ColumnId {
  std::string doc_id;
  std::size_t paragraph = 0;
};

/// Word x paragraph occurrence counts. Each column stores its non-zero
/// (row, count) entries sorted by row.
struct CooccurrenceMatrix {
  Vocabulary vocabulary;
  std::vector<ColumnId> columns;
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> entries;
  StemMode stem_mode = StemMode::None;

  std::size_t rows() const noexcept { return vocabulary.size(); }
  std::size_t cols() const noexcept { return columns.size(); }
  std::uint32_t at(std::size_t row, std::size_t col) const;
  DenseMatrix to_dense() const;
};

/// Counts stemmed tokens per paragraph. Stopwords of the stemmer's rule set
/// are skipped. Throws Error(Io, "empty corpus") when there is nothing to
/// count.
CooccurrenceMatrix build_matrix(std::span<const Paragraph> paragraphs, const Stemmer& stemmer);

SvdFactors svd(const CooccurrenceMatrix& matrix, const SvdOptions& options = {});

enum class Scaling { PlainU, USigma };

std::string_view to_string(Scaling scaling) noexcept;
/// Accepts "u" and "usigma".
std::optional<Scaling> parse_scaling(std::string_view name) noexcept;

struct Provenance {
  StemMode stem_mode = StemMode::None;
  std::uint64_t rules_fingerprint = 0;
  std::uint64_t corpus_fingerprint = 0;

  std::uint64_t fingerprint() const;
  bool operator==(const Provenance&) const = default;
};

/// Truncated word space: row i is U[i, 0..k) (PlainU) or that row scaled
/// entrywise by sigma[0..k) (USigma).
struct SemanticSpace {
  std::size_t k = 0;
  std::size_t columns = 0;  // paragraphs in the source matrix
  Scaling scaling = Scaling::PlainU;
  Vocabulary vocabulary;
  std::vector<double> sigma;  // first k singular values
  DenseMatrix vectors;        // vocabulary.size() x k
  Provenance provenance;

  std::span<const double> row(std::size_t i) const { return vectors.row(i); }
  bool operator==(const SemanticSpace&) const = default;
};

constexpr std::size_t kDefaultMaxDimensions = 300;

/// Keeps the k largest singular directions; 1 <= k <= n or Error(Usage).
SemanticSpace truncate(const SvdFactors& factors, std::size_t k, Scaling scaling);

/// Matrix, SVD and truncation in one step. k defaults to
/// min(kDefaultMaxDimensions, n).
SemanticSpace build_space(const Corpus& corpus, const Stemmer& stemmer, std::optional<std::size_t> k,
                          Scaling scaling);

/// Normalizes and stems `word` the same way build_matrix did, then returns
/// its row. Throws Error(OutOfVocabulary) naming both forms.
std::span<const double> word_vector(const SemanticSpace& space, std::string_view word, const Stemmer& stemmer);

// Persisted space. Layout (little-endian): "SEMSPACE", u32 version,
// u8 stem mode, u64 rules fingerprint, u64 corpus fingerprint,
// u64 provenance fingerprint, u64 m, u64 c, u64 k, u8 scaling,
// m x (u32 length, UTF-8 bytes), k x f64 sigma, m*k x f64 vectors
// (row-major), u64 FNV-1a checksum of everything before it.

constexpr std::uint32_t kSpaceFormatVersion = 1;

class SpaceFileError : public Error {
 public:
  enum class Kind { BadMagic, Version, Truncated, Checksum, Malformed };

  SpaceFileError(Kind kind, const std::string& what) : Error(ErrorCode::Format, what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

std::string serialize_space(const SemanticSpace& space);
SemanticSpace deserialize_space(std::string_view bytes);

void save_space(const SemanticSpace& space, const std::filesystem::path& file);
SemanticSpace load_space(const std::filesystem::path& file);

}  // namespace semspace
