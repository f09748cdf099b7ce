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

#include "semspace/semspace.h"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "semspace/corpus.hpp"
#include "semspace/error.hpp"
#include "semspace/experiment.hpp"
#include "semspace/lsa.hpp"
#include "semspace/similarity.hpp"
#include "semspace/stemming.hpp"

struct semspace_rules {
  std::shared_ptr<semspace::RuleSet> rules;
};

struct semspace_corpus {
  semspace::Corpus corpus;
  std::vector<std::string> error_lines;
};

struct semspace_space {
  semspace::SemanticSpace space;
};

struct semspace_pairs {
  std::vector<semspace::WordPair> pairs;
};

namespace {

thread_local std::string g_last_error;

semspace_status fail(semspace_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into a status and the thread-local
// message.
template <typename F>
semspace_status guarded(F&& body) noexcept {
  try {
    g_last_error.clear();
    body();
    return SEMSPACE_OK;
  } catch (const semspace::Error& e) {
    return fail(static_cast<semspace_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SEMSPACE_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SEMSPACE_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SEMSPACE_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw semspace::Error(semspace::ErrorCode::Usage, what);
}

char* dup_string(const std::string& s) {
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.data(), s.size());
  p[s.size()] = '\0';
  return p;
}

char* dup_optional(const std::optional<std::string>& s) { return s ? dup_string(*s) : nullptr; }

semspace::StemMode to_mode(semspace_stem_mode mode) {
  switch (mode) {
    case SEMSPACE_MODE_ROOT:
      return semspace::StemMode::Root;
    case SEMSPACE_MODE_LIGHT:
      return semspace::StemMode::Light;
    case SEMSPACE_MODE_NONE:
      return semspace::StemMode::None;
  }
  throw semspace::Error(semspace::ErrorCode::Usage, "unknown stem mode");
}

semspace_stem_mode from_mode(semspace::StemMode mode) {
  switch (mode) {
    case semspace::StemMode::Root:
      return SEMSPACE_MODE_ROOT;
    case semspace::StemMode::Light:
      return SEMSPACE_MODE_LIGHT;
    case semspace::StemMode::None:
      break;
  }
  return SEMSPACE_MODE_NONE;
}

semspace::Scaling to_scaling(semspace_scaling scaling) {
  switch (scaling) {
    case SEMSPACE_SCALING_U:
      return semspace::Scaling::PlainU;
    case SEMSPACE_SCALING_USIGMA:
      return semspace::Scaling::USigma;
  }
  throw semspace::Error(semspace::ErrorCode::Usage, "unknown scaling");
}

std::shared_ptr<const semspace::RuleSet> rules_of(const semspace_rules* rules) {
  if (rules != nullptr) return rules->rules;
  return std::shared_ptr<const semspace::RuleSet>(&semspace::default_rules(), [](const semspace::RuleSet*) {});
}

void fill_measures(const std::array<semspace::SimilarityResult, 4>& results, semspace_measures* out) {
  for (std::size_t i = 0; i < results.size(); ++i) {
    out->defined[i] = results[i].defined() ? 1 : 0;
    out->value[i] = results[i].value.value_or(0.0);
  }
}

}  // namespace

extern "C" {

const char* semspace_version(void) { return SEMSPACE_VERSION_STRING; }

const char* semspace_last_error(void) { return g_last_error.c_str(); }

void semspace_string_free(char* s) { std::free(s); }

semspace_status semspace_rules_default(semspace_rules** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    *out = new semspace_rules{std::make_shared<semspace::RuleSet>(semspace::default_rules())};
  });
}

semspace_status semspace_rules_load(const char* dir, semspace_rules** out) {
  return guarded([&] {
    require(dir != nullptr && out != nullptr, "null argument");
    *out = new semspace_rules{std::make_shared<semspace::RuleSet>(semspace::load_rules(dir))};
  });
}

semspace_status semspace_rules_add_stopwords(semspace_rules* rules, const char* file) {
  return guarded([&] {
    require(rules != nullptr && file != nullptr, "null argument");
    auto words = semspace::load_stopwords(file);
    rules->rules->stopwords.insert(words.begin(), words.end());
  });
}

uint64_t semspace_rules_fingerprint(const semspace_rules* rules) { return rules_of(rules)->fingerprint(); }

void semspace_rules_free(semspace_rules* rules) { delete rules; }

semspace_status semspace_normalize(const char* raw, char** out) {
  return guarded([&] {
    require(raw != nullptr && out != nullptr, "null argument");
    *out = dup_string(semspace::normalize(raw));
  });
}

semspace_status semspace_stem(const semspace_rules* rules, semspace_stem_mode mode, const char* word,
                              semspace_stem_result* out) {
  return guarded([&] {
    require(word != nullptr && out != nullptr, "null argument");
    *out = semspace_stem_result{};
    const semspace::Stemmer stemmer(to_mode(mode), rules_of(rules));
    const auto r = stemmer.stem(semspace::normalize(word));
    semspace_stem_result tmp{};
    try {
      tmp.original = dup_string(r.original);
      tmp.output = dup_string(r.output);
      tmp.residual = dup_string(r.residual);
      tmp.antefix = dup_optional(r.stripped.antefix);
      tmp.prefix = dup_optional(r.stripped.prefix);
      tmp.suffix = dup_optional(r.stripped.suffix);
      tmp.postfix = dup_optional(r.stripped.postfix);
      tmp.pattern = dup_optional(r.pattern);
    } catch (...) {
      semspace_stem_result_clear(&tmp);
      throw;
    }
    tmp.is_root = r.kind == semspace::StemKind::Root ? 1 : 0;
    *out = tmp;
  });
}

void semspace_stem_result_clear(semspace_stem_result* result) {
  if (result == nullptr) return;
  for (char* p : {result->original, result->output, result->residual, result->antefix, result->prefix,
                  result->suffix, result->postfix, result->pattern}) {
    std::free(p);
  }
  *result = semspace_stem_result{};
}

semspace_status semspace_corpus_load(const char* dir, semspace_corpus** out) {
  return guarded([&] {
    require(dir != nullptr && out != nullptr, "null argument");
    auto handle = std::make_unique<semspace_corpus>();
    handle->corpus = semspace::load_corpus(dir);
    for (const auto& e : handle->corpus.errors) {
      handle->error_lines.push_back(e.path.string() + ": " + e.message);
    }
    *out = handle.release();
  });
}

semspace_status semspace_corpus_stats_get(const semspace_corpus* corpus, semspace_corpus_stats* out) {
  return guarded([&] {
    require(corpus != nullptr && out != nullptr, "null argument");
    const auto s = semspace::corpus_stats(corpus->corpus);
    *out = semspace_corpus_stats{s.n_documents, s.n_categories, s.n_words, s.n_paragraphs, s.size_bytes};
  });
}

size_t semspace_corpus_warning_count(const semspace_corpus* corpus) {
  return corpus == nullptr ? 0 : corpus->corpus.warnings.size();
}

const char* semspace_corpus_warning(const semspace_corpus* corpus, size_t i) {
  if (corpus == nullptr || i >= corpus->corpus.warnings.size()) return nullptr;
  return corpus->corpus.warnings[i].c_str();
}

size_t semspace_corpus_error_count(const semspace_corpus* corpus) {
  return corpus == nullptr ? 0 : corpus->error_lines.size();
}

const char* semspace_corpus_error(const semspace_corpus* corpus, size_t i) {
  if (corpus == nullptr || i >= corpus->error_lines.size()) return nullptr;
  return corpus->error_lines[i].c_str();
}

uint64_t semspace_corpus_fingerprint(const semspace_corpus* corpus) {
  return corpus == nullptr ? 0 : semspace::corpus_fingerprint(corpus->corpus);
}

void semspace_corpus_free(semspace_corpus* corpus) { delete corpus; }

semspace_status semspace_space_build(const semspace_corpus* corpus, const semspace_rules* rules,
                                     semspace_stem_mode mode, size_t k, semspace_scaling scaling,
                                     semspace_space** out) {
  return guarded([&] {
    require(corpus != nullptr && out != nullptr, "null argument");
    const semspace::Stemmer stemmer(to_mode(mode), rules_of(rules));
    std::optional<std::size_t> dims;
    if (k != 0) dims = k;
    auto handle = std::make_unique<semspace_space>();
    handle->space = semspace::build_space(corpus->corpus, stemmer, dims, to_scaling(scaling));
    *out = handle.release();
  });
}

semspace_status semspace_space_save(const semspace_space* space, const char* path) {
  return guarded([&] {
    require(space != nullptr && path != nullptr, "null argument");
    semspace::save_space(space->space, path);
  });
}

semspace_status semspace_space_load(const char* path, semspace_space** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    auto handle = std::make_unique<semspace_space>();
    handle->space = semspace::load_space(path);
    *out = handle.release();
  });
}

semspace_status semspace_space_info_get(const semspace_space* space, semspace_space_info* out) {
  return guarded([&] {
    require(space != nullptr && out != nullptr, "null argument");
    const auto& s = space->space;
    out->mode = from_mode(s.provenance.stem_mode);
    out->scaling = s.scaling == semspace::Scaling::USigma ? SEMSPACE_SCALING_USIGMA : SEMSPACE_SCALING_U;
    out->rows = s.vocabulary.size();
    out->columns = s.columns;
    out->k = s.k;
    out->rules_fingerprint = s.provenance.rules_fingerprint;
    out->corpus_fingerprint = s.provenance.corpus_fingerprint;
  });
}

semspace_status semspace_space_word_vector(const semspace_space* space, const semspace_rules* rules,
                                           const char* word, double* out, size_t capacity, size_t* dims) {
  return guarded([&] {
    require(space != nullptr && word != nullptr, "null argument");
    const semspace::Stemmer stemmer(space->space.provenance.stem_mode, rules_of(rules));
    const auto v = semspace::word_vector(space->space, word, stemmer);
    if (dims != nullptr) *dims = v.size();
    require(out != nullptr || capacity == 0, "null output buffer");
    require(capacity >= v.size(), "output buffer too small");
    std::copy(v.begin(), v.end(), out);
  });
}

void semspace_space_free(semspace_space* space) { delete space; }

semspace_status semspace_measure_all(const double* a, const double* b, size_t dims, semspace_measures* out) {
  return guarded([&] {
    require(out != nullptr && (dims == 0 || (a != nullptr && b != nullptr)), "null argument");
    fill_measures(semspace::measure_all({a, dims}, {b, dims}), out);
  });
}

semspace_status semspace_space_similarity(const semspace_space* space, const semspace_rules* rules,
                                          const char* word_a, const char* word_b, int normalize,
                                          semspace_measures* out) {
  return guarded([&] {
    require(space != nullptr && word_a != nullptr && word_b != nullptr && out != nullptr, "null argument");
    const semspace::Stemmer stemmer(space->space.provenance.stem_mode, rules_of(rules));
    // Look both words up first so a missing word is reported as an error.
    (void)semspace::word_vector(space->space, word_a, stemmer);
    (void)semspace::word_vector(space->space, word_b, stemmer);
    semspace::WordPair pair{word_a, word_b, semspace::PairLabel::Similar, std::nullopt, std::nullopt};
    const auto row = semspace::score_pair(space->space, stemmer, pair, normalize != 0);
    fill_measures(row.measures, out);
  });
}

semspace_status semspace_pairs_create(semspace_pairs** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    *out = new semspace_pairs{};
  });
}

semspace_status semspace_pairs_load(semspace_pairs* pairs, const char* file) {
  return guarded([&] {
    require(pairs != nullptr && file != nullptr, "null argument");
    auto loaded = semspace::load_pairs(file);
    pairs->pairs.insert(pairs->pairs.end(), loaded.begin(), loaded.end());
  });
}

size_t semspace_pairs_count(const semspace_pairs* pairs) { return pairs == nullptr ? 0 : pairs->pairs.size(); }

void semspace_pairs_free(semspace_pairs* pairs) { delete pairs; }

semspace_status semspace_report_run(const semspace_corpus* corpus, const semspace_pairs* pairs,
                                    const semspace_rules* rules, const semspace_report_options* options,
                                    semspace_format format, char** out_text) {
  return guarded([&] {
    require(corpus != nullptr && pairs != nullptr && out_text != nullptr, "null argument");
    semspace::ComparisonOptions opts;
    if (options != nullptr) {
      if (options->modes != nullptr) {
        opts.stemmers.clear();
        for (size_t i = 0; i < options->n_modes; ++i) opts.stemmers.push_back(to_mode(options->modes[i]));
      }
      if (options->k != 0) opts.k = options->k;
      opts.scaling = to_scaling(options->scaling);
      opts.normalize = options->normalize != 0;
    }
    require(!opts.stemmers.empty(), "no stemmers selected");
    const auto report = semspace::run_comparison(corpus->corpus, pairs->pairs, rules_of(rules), opts);
    const auto fmt = format == SEMSPACE_FORMAT_MARKDOWN ? semspace::ReportFormat::Markdown
                                                        : semspace::ReportFormat::Tsv;
    *out_text = dup_string(semspace::render_report(report, fmt));
  });
}

}  // extern "C"
