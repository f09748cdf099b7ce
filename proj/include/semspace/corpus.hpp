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
#include <string>
#include <string_view>
#include <vector>

namespace semspace {

struct RawDocument {
  std::string id;  // path relative to the corpus root, '/'-separated
  std::string text;
  std::filesystem::path source;
  std::optional<std::string> category;
};

/// A blank-line delimited block of a document; one column of the
/// co-occurrence matrix.
struct Paragraph {
  std::string doc_id;
  std::size_t index = 0;
  std::vector<std::string> tokens;
};

struct FileError {
  std::filesystem::path path;
  std::string message;
};

struct Corpus {
  std::vector<RawDocument> documents;  // lexicographic by id
  std::vector<std::string> warnings;
  std::vector<FileError> errors;       // files that were skipped

  bool partial() const noexcept { return !errors.empty(); }
};

struct CorpusStats {
  std::size_t n_documents = 0;
  std::size_t n_categories = 0;
  std::size_t n_words = 0;
  std::size_t n_paragraphs = 0;
  std::uintmax_t size_bytes = 0;

  bool operator==(const CorpusStats&) const = default;
};

struct LoadOptions {
  std::string extension = ".txt";
};

/// True for the Arabic letters kept by normalize (U+0621..U+063A,
/// U+0641..U+064A).
bool is_arabic_letter(char32_t cp) noexcept;

/// Strips diacritics (U+064B..U+0652), tatweel and every non-letter; folds
/// alef with hamza/madda to bare alef and alef maqsura to ya. Ta marbuta is
/// kept. Returns an empty string when nothing Arabic remains.
std::string normalize(std::string_view raw);

/// Splits on Unicode whitespace and normalizes each piece, dropping pieces
/// that normalize to nothing.
std::vector<std::string> tokenize(std::string_view text);

std::vector<Paragraph> segment_paragraphs(const RawDocument& doc);

/// All paragraphs of all documents, in document order.
std::vector<Paragraph> segment_corpus(const Corpus& corpus);

/// Reads every `options.extension` file directly under `root` or one
/// directory below it (the directory name becomes the category). Throws
/// Error(Io) when `root` cannot be listed; bad files land in Corpus::errors.
Corpus load_corpus(const std::filesystem::path& root, const LoadOptions& options = {});

CorpusStats corpus_stats(const Corpus& corpus);

/// Stable hash of document ids and contents.
std::uint64_t corpus_fingerprint(const Corpus& corpus);

}  // namespace semspace
