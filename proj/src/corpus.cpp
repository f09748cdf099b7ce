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

#include "semspace/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

#include "semspace/error.hpp"
#include "semspace/hash.hpp"
#include "semspace/utf8.hpp"

namespace semspace {

namespace fs = std::filesystem;

bool is_arabic_letter(char32_t cp) noexcept {
  return (cp >= 0x0621 && cp <= 0x063A) || (cp >= 0x0641 && cp <= 0x064A);
}

std::string normalize(std::string_view raw) {
  std::string out;
  for (char32_t cp : utf8::decode_lossy(raw)) {
    switch (cp) {
      case 0x0622:  // alef with madda
      case 0x0623:  // alef with hamza above
      case 0x0625:  // alef with hamza below
        cp = 0x0627;
        break;
      case 0x0649:  // alef maqsura
        cp = 0x064A;
        break;
      default:
        break;
    }
    if (is_arabic_letter(cp)) utf8::append(out, cp);
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  const std::u32string cps = utf8::decode_lossy(text);
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    if (end > start) {
      std::string tok = normalize(utf8::encode(std::u32string_view(cps).substr(start, end - start)));
      if (!tok.empty()) tokens.push_back(std::move(tok));
    }
  };
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (utf8::is_space(cps[i])) {
      flush(i);
      start = i + 1;
    }
  }
  flush(cps.size());
  return tokens;
}

namespace {

bool is_blank(std::string_view line) {
  const std::u32string cps = utf8::decode_lossy(line);
  return std::all_of(cps.begin(), cps.end(), utf8::is_space);
}

}  // namespace

std::vector<Paragraph> segment_paragraphs(const RawDocument& doc) {
  std::vector<Paragraph> paragraphs;
  std::vector<std::string> block;
  auto close_block = [&] {
    if (block.empty()) return;
    Paragraph p{doc.id, paragraphs.size(), {}};
    for (const auto& line : block) {
      auto toks = tokenize(line);
      p.tokens.insert(p.tokens.end(), std::make_move_iterator(toks.begin()),
                      std::make_move_iterator(toks.end()));
    }
    block.clear();
    if (!p.tokens.empty()) paragraphs.push_back(std::move(p));
  };

  std::string_view text = doc.text;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (is_blank(line)) {
      close_block();
    } else {
      block.emplace_back(line);
    }
  }
  close_block();
  return paragraphs;
}

std::vector<Paragraph> segment_corpus(const Corpus& corpus) {
  std::vector<Paragraph> all;
  for (const auto& doc : corpus.documents) {
    auto ps = segment_paragraphs(doc);
    all.insert(all.end(), std::make_move_iterator(ps.begin()), std::make_move_iterator(ps.end()));
  }
  return all;
}

namespace {

struct Candidate {
  std::string id;
  fs::path path;
  std::optional<std::string> category;
};

std::optional<std::string> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return std::move(ss).str();
}

}  // namespace

Corpus load_corpus(const fs::path& root, const LoadOptions& options) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw Error(ErrorCode::Io, "cannot read corpus directory: " + root.string());
  }

  std::vector<Candidate> candidates;
  Corpus corpus;
  auto is_text = [&](const fs::directory_entry& e) {
    return e.is_regular_file() && e.path().extension() == options.extension;
  };

  fs::directory_iterator top(root, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot read corpus directory: " + root.string() + ": " + ec.message());
  for (const auto& entry : top) {
    if (is_text(entry)) {
      candidates.push_back({entry.path().filename().generic_string(), entry.path(), std::nullopt});
    } else if (entry.is_directory()) {
      const std::string category = entry.path().filename().generic_string();
      fs::directory_iterator sub(entry.path(), ec);
      if (ec) {
        corpus.errors.push_back({entry.path(), "cannot read directory: " + ec.message()});
        ec.clear();
        continue;
      }
      for (const auto& inner : sub) {
        if (is_text(inner)) {
          candidates.push_back({category + "/" + inner.path().filename().generic_string(), inner.path(), category});
        } else if (inner.is_directory()) {
          corpus.warnings.push_back("ignoring nested directory " + inner.path().generic_string());
        }
      }
    }
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) { return a.id < b.id; });

  for (auto& c : candidates) {
    auto text = read_file(c.path);
    if (!text) {
      corpus.errors.push_back({c.path, "unreadable file"});
      continue;
    }
    if (!utf8::is_valid(*text)) {
      corpus.errors.push_back({c.path, "not valid UTF-8"});
      continue;
    }
    if (is_blank(*text)) {
      corpus.warnings.push_back("skipping empty document " + c.id);
      continue;
    }
    corpus.documents.push_back({std::move(c.id), std::move(*text), std::move(c.path), std::move(c.category)});
  }

  if (corpus.documents.empty()) corpus.warnings.push_back("empty corpus: no documents under " + root.string());
  return corpus;
}

CorpusStats corpus_stats(const Corpus& corpus) {
  CorpusStats stats;
  std::set<std::string> categories;
  for (const auto& doc : corpus.documents) {
    ++stats.n_documents;
    stats.size_bytes += doc.text.size();
    if (doc.category) categories.insert(*doc.category);
    for (const auto& p : segment_paragraphs(doc)) {
      ++stats.n_paragraphs;
      stats.n_words += p.tokens.size();
    }
  }
  stats.n_categories = categories.size();
  return stats;
}

std::uint64_t corpus_fingerprint(const Corpus& corpus) {
  Fnv1a h;
  h.update_u64(corpus.documents.size());
  for (const auto& doc : corpus.documents) {
    h.update_u64(doc.id.size()).update(doc.id);
    h.update_u64(doc.text.size()).update(doc.text);
  }
  return h.digest();
}

}  // namespace semspace
