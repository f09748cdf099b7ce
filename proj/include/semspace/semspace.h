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

/* C interface to libsemspace. Objects are opaque handles created by
 * semspace_*_create/load/build functions and released with the matching
 * *_free. Every fallible call returns a semspace_status; on failure
 * semspace_last_error() describes the problem for the calling thread.
 * Strings returned through char** are owned by the caller and released with
 * semspace_string_free. All text is UTF-8. */

#ifndef SEMSPACE_SEMSPACE_H
#define SEMSPACE_SEMSPACE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SEMSPACE_BUILDING_LIBRARY)
#    define SEMSPACE_API __declspec(dllexport)
#  else
#    define SEMSPACE_API __declspec(dllimport)
#  endif
#else
#  define SEMSPACE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum semspace_status {
  SEMSPACE_OK = 0,
  SEMSPACE_ERR_USAGE = 1,
  SEMSPACE_ERR_IO = 2,
  SEMSPACE_ERR_NUMERIC = 3,
  SEMSPACE_ERR_FORMAT = 4,
  SEMSPACE_ERR_OUT_OF_VOCABULARY = 5,
  SEMSPACE_ERR_UNDEFINED = 6,
  SEMSPACE_ERR_INTERNAL = 7
} semspace_status;

typedef enum semspace_stem_mode {
  SEMSPACE_MODE_ROOT = 0,
  SEMSPACE_MODE_LIGHT = 1,
  SEMSPACE_MODE_NONE = 2
} semspace_stem_mode;

typedef enum semspace_scaling { SEMSPACE_SCALING_U = 0, SEMSPACE_SCALING_USIGMA = 1 } semspace_scaling;

typedef enum semspace_format { SEMSPACE_FORMAT_TSV = 0, SEMSPACE_FORMAT_MARKDOWN = 1 } semspace_format;

/* Column order of the four measures in semspace_measures. */
enum {
  SEMSPACE_COSINE = 0,
  SEMSPACE_EUCLIDEAN = 1,
  SEMSPACE_PEARSON = 2,
  SEMSPACE_JACCARD = 3
};

typedef struct semspace_rules semspace_rules;
typedef struct semspace_corpus semspace_corpus;
typedef struct semspace_space semspace_space;
typedef struct semspace_pairs semspace_pairs;

SEMSPACE_API const char* semspace_version(void);
SEMSPACE_API const char* semspace_last_error(void);
SEMSPACE_API void semspace_string_free(char* s);

/* ---- rules -------------------------------------------------------------- */

SEMSPACE_API semspace_status semspace_rules_default(semspace_rules** out);
SEMSPACE_API semspace_status semspace_rules_load(const char* dir, semspace_rules** out);
SEMSPACE_API semspace_status semspace_rules_add_stopwords(semspace_rules* rules, const char* file);
SEMSPACE_API uint64_t semspace_rules_fingerprint(const semspace_rules* rules);
SEMSPACE_API void semspace_rules_free(semspace_rules* rules);

/* ---- text and stemming -------------------------------------------------- */

SEMSPACE_API semspace_status semspace_normalize(const char* raw, char** out);

typedef struct semspace_stem_result {
  char* original;
  char* output;
  char* residual;
  char* antefix; /* NULL when nothing was stripped in that position */
  char* prefix;
  char* suffix;
  char* postfix;
  char* pattern; /* matched template, NULL when none */
  int is_root;   /* 1 for root output, 0 for a stem */
} semspace_stem_result;

/* Normalizes `word`, then stems it. `rules` may be NULL for the defaults. */
SEMSPACE_API semspace_status semspace_stem(const semspace_rules* rules, semspace_stem_mode mode, const char* word,
                                           semspace_stem_result* out);
SEMSPACE_API void semspace_stem_result_clear(semspace_stem_result* result);

/* ---- corpus ------------------------------------------------------------- */

typedef struct semspace_corpus_stats {
  uint64_t n_documents;
  uint64_t n_categories;
  uint64_t n_words;
  uint64_t n_paragraphs;
  uint64_t size_bytes;
} semspace_corpus_stats;

/* Succeeds with skipped files recorded as errors; see
 * semspace_corpus_error_count. */
SEMSPACE_API semspace_status semspace_corpus_load(const char* dir, semspace_corpus** out);
SEMSPACE_API semspace_status semspace_corpus_stats_get(const semspace_corpus* corpus, semspace_corpus_stats* out);
SEMSPACE_API size_t semspace_corpus_warning_count(const semspace_corpus* corpus);
SEMSPACE_API const char* semspace_corpus_warning(const semspace_corpus* corpus, size_t i);
SEMSPACE_API size_t semspace_corpus_error_count(const semspace_corpus* corpus);
SEMSPACE_API const char* semspace_corpus_error(const semspace_corpus* corpus, size_t i);
SEMSPACE_API uint64_t semspace_corpus_fingerprint(const semspace_corpus* corpus);
SEMSPACE_API void semspace_corpus_free(semspace_corpus* corpus);

/* ---- semantic spaces ---------------------------------------------------- */

typedef struct semspace_space_info {
  semspace_stem_mode mode;
  semspace_scaling scaling;
  uint64_t rows;
  uint64_t columns;
  uint64_t k;
  uint64_t rules_fingerprint;
  uint64_t corpus_fingerprint;
} semspace_space_info;

/* k == 0 selects min(300, n). */
SEMSPACE_API semspace_status semspace_space_build(const semspace_corpus* corpus, const semspace_rules* rules,
                                                  semspace_stem_mode mode, size_t k, semspace_scaling scaling,
                                                  semspace_space** out);
SEMSPACE_API semspace_status semspace_space_save(const semspace_space* space, const char* path);
SEMSPACE_API semspace_status semspace_space_load(const char* path, semspace_space** out);
SEMSPACE_API semspace_status semspace_space_info_get(const semspace_space* space, semspace_space_info* out);
/* Copies the row of `word` into out[0..capacity); *dims receives k. */
SEMSPACE_API semspace_status semspace_space_word_vector(const semspace_space* space, const semspace_rules* rules,
                                                        const char* word, double* out, size_t capacity,
                                                        size_t* dims);
SEMSPACE_API void semspace_space_free(semspace_space* space);

/* ---- similarity --------------------------------------------------------- */

typedef struct semspace_measures {
  double value[4];
  int defined[4];
} semspace_measures;

SEMSPACE_API semspace_status semspace_measure_all(const double* a, const double* b, size_t dims,
                                                  semspace_measures* out);
/* Both words are looked up with the space's stemmer; normalize != 0 scales
 * rows to unit length first. */
SEMSPACE_API semspace_status semspace_space_similarity(const semspace_space* space, const semspace_rules* rules,
                                                       const char* word_a, const char* word_b, int normalize,
                                                       semspace_measures* out);

/* ---- comparison reports ------------------------------------------------- */

SEMSPACE_API semspace_status semspace_pairs_create(semspace_pairs** out);
/* Appends the pairs of a TSV pair file. */
SEMSPACE_API semspace_status semspace_pairs_load(semspace_pairs* pairs, const char* file);
SEMSPACE_API size_t semspace_pairs_count(const semspace_pairs* pairs);
SEMSPACE_API void semspace_pairs_free(semspace_pairs* pairs);

typedef struct semspace_report_options {
  const semspace_stem_mode* modes; /* NULL selects light then root */
  size_t n_modes;
  size_t k; /* 0 selects min(300, n) per space */
  semspace_scaling scaling;
  int normalize;
} semspace_report_options;

SEMSPACE_API semspace_status semspace_report_run(const semspace_corpus* corpus, const semspace_pairs* pairs,
                                                 const semspace_rules* rules,
                                                 const semspace_report_options* options, semspace_format format,
                                                 char** out_text);

#ifdef __cplusplus
}
#endif

#endif /* SEMSPACE_SEMSPACE_H */
