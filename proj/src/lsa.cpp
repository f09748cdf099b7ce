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

#include "semspace/lsa.hpp"

#include <algorithm>
#include <map>

#include "semspace/hash.hpp"

namespace semspace {

std::size_t Vocabulary::add(std::string_view token) {
  std::string key(token);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  const std::size_t idx = tokens_.size();
  index_.emplace(key, idx);
  tokens_.push_back(std::move(key));
  return idx;
}

std::optional<std::size_t> Vocabulary::find(std::string_view token) const {
  if (auto it = index_.find(std::string(token)); it != index_.end()) return it->second;
  return std::nullopt;
}

std::uint32_t CooccurrenceMatrix::at(std::size_t row, std::size_t col) const {
  const auto& column = entries.at(col);
  auto it = std::lower_bound(column.begin(), column.end(), row,
                             [](const auto& entry, std::size_t r) { return entry.first < r; });
  return it != column.end() && it->first == row ? it->second : 0;
}

DenseMatrix CooccurrenceMatrix::to_dense() const {
  DenseMatrix x(rows(), cols());
  for (std::size_t j = 0; j < entries.size(); ++j)
    for (const auto& [row, count] : entries[j]) x(row, j) = count;
  return x;
}

CooccurrenceMatrix build_matrix(std::span<const Paragraph> paragraphs, const Stemmer& stemmer) {
  CooccurrenceMatrix m;
  m.stem_mode = stemmer.mode();
  std::unordered_map<std::string, std::string> memo;
  for (const auto& p : paragraphs) {
    std::map<std::size_t, std::uint32_t> counts;
    for (const auto& tok : p.tokens) {
      if (stemmer.is_stopword(tok)) continue;
      auto it = memo.find(tok);
      if (it == memo.end()) it = memo.emplace(tok, stemmer.apply(tok)).first;
      ++counts[m.vocabulary.add(it->second)];
    }
    if (counts.empty()) continue;
    m.columns.push_back({p.doc_id, p.index});
    m.entries.emplace_back(counts.begin(), counts.end());
  }
  if (m.rows() == 0 || m.cols() == 0) throw Error(ErrorCode::Io, "empty corpus");
  return m;
}

SvdFactors svd(const CooccurrenceMatrix& matrix, const SvdOptions& options) {
  return svd(matrix.to_dense(), options);
}

std::string_view to_string(Scaling scaling) noexcept { return scaling == Scaling::PlainU ? "u" : "usigma"; }

std::optional<Scaling> parse_scaling(std::string_view name) noexcept {
  if (name == "u") return Scaling::PlainU;
  if (name == "usigma") return Scaling::USigma;
  return std::nullopt;
}

std::uint64_t Provenance::fingerprint() const {
  return Fnv1a{}
      .update(to_string(stem_mode))
      .update_u64(rules_fingerprint)
      .update_u64(corpus_fingerprint)
      .digest();
}

SemanticSpace truncate(const SvdFactors& factors, std::size_t k, Scaling scaling) {
  if (k < 1 || k > factors.n()) {
    throw Error(ErrorCode::Usage,
                "k must lie in [1, " + std::to_string(factors.n()) + "], got " + std::to_string(k));
  }
  SemanticSpace s;
  s.k = k;
  s.columns = factors.v.rows();
  s.scaling = scaling;
  s.sigma.assign(factors.sigma.begin(), factors.sigma.begin() + static_cast<std::ptrdiff_t>(k));
  s.vectors = DenseMatrix(factors.u.rows(), k);
  for (std::size_t i = 0; i < factors.u.rows(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      s.vectors(i, j) = scaling == Scaling::PlainU ? factors.u(i, j) : factors.u(i, j) * factors.sigma[j];
    }
  }
  return s;
}

SemanticSpace build_space(const Corpus& corpus, const Stemmer& stemmer, std::optional<std::size_t> k,
                          Scaling scaling) {
  const auto paragraphs = segment_corpus(corpus);
  CooccurrenceMatrix matrix = build_matrix(paragraphs, stemmer);
  const SvdFactors factors = svd(matrix);
  SemanticSpace space = truncate(factors, k.value_or(std::min(kDefaultMaxDimensions, factors.n())), scaling);
  space.vocabulary = std::move(matrix.vocabulary);
  space.provenance = {stemmer.mode(), stemmer.rules().fingerprint(), corpus_fingerprint(corpus)};
  return space;
}

std::span<const double> word_vector(const SemanticSpace& space, std::string_view word, const Stemmer& stemmer) {
  if (stemmer.mode() != space.provenance.stem_mode) {
    throw Error(ErrorCode::Usage, "space was built with stemmer '" +
                                      std::string(to_string(space.provenance.stem_mode)) + "', queried with '" +
                                      std::string(to_string(stemmer.mode())) + "'");
  }
  const std::string token = normalize(word);
  const std::string stemmed = token.empty() ? token : stemmer.apply(token);
  const auto row = stemmed.empty() ? std::nullopt : space.vocabulary.find(stemmed);
  if (!row) {
    throw Error(ErrorCode::OutOfVocabulary,
                "out of vocabulary: '" + std::string(word) + "' (stemmed '" + stemmed + "')");
  }
  return space.row(*row);
}

}  // namespace semspace
