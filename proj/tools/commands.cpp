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

#include "commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

namespace semspace::cli {

namespace {

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using Rules = std::unique_ptr<semspace_rules, Deleter<semspace_rules, semspace_rules_free>>;
using Corpus = std::unique_ptr<semspace_corpus, Deleter<semspace_corpus, semspace_corpus_free>>;
using Space = std::unique_ptr<semspace_space, Deleter<semspace_space, semspace_space_free>>;
using Pairs = std::unique_ptr<semspace_pairs, Deleter<semspace_pairs, semspace_pairs_free>>;

struct Failure {
  int code;
  std::string message;
};

void check(semspace_status status) {
  if (status != SEMSPACE_OK) throw Failure{exit_code_for(status), semspace_last_error()};
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string format_measure(double v) {
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

const char* mode_name(semspace_stem_mode m) {
  switch (m) {
    case SEMSPACE_MODE_ROOT: return "root";
    case SEMSPACE_MODE_LIGHT: return "light";
    case SEMSPACE_MODE_NONE: return "none";
  }
  return "none";
}

Rules load_rules(const RunConfig& cfg) {
  semspace_rules* raw = nullptr;
  check(cfg.rules_dir ? semspace_rules_load(cfg.rules_dir->c_str(), &raw) : semspace_rules_default(&raw));
  Rules rules(raw);
  if (cfg.stopwords) check(semspace_rules_add_stopwords(rules.get(), cfg.stopwords->c_str()));
  return rules;
}

// Loads a corpus and reports skipped files and warnings. Returns whether
// every file was read.
Corpus load_corpus(const std::string& dir, std::ostream& err, bool& partial) {
  semspace_corpus* raw = nullptr;
  check(semspace_corpus_load(dir.c_str(), &raw));
  Corpus corpus(raw);
  for (std::size_t i = 0; i < semspace_corpus_warning_count(raw); ++i) {
    err << "semspace: warning: " << semspace_corpus_warning(raw, i) << '\n';
  }
  for (std::size_t i = 0; i < semspace_corpus_error_count(raw); ++i) {
    err << "semspace: skipped " << semspace_corpus_error(raw, i) << '\n';
  }
  partial = semspace_corpus_error_count(raw) > 0;
  return corpus;
}

int cmd_stats(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  bool partial = false;
  const Corpus corpus = load_corpus(cfg.paths.at(0), err, partial);
  semspace_corpus_stats s{};
  check(semspace_corpus_stats_get(corpus.get(), &s));
  out << "Number of Documents\t" << s.n_documents << '\n'
      << "Size\t" << s.size_bytes << '\n'
      << "Number of categories\t" << s.n_categories << '\n'
      << "Number of Words\t" << s.n_words << '\n'
      << "Number of Paragraphs\t" << s.n_paragraphs << '\n';
  return partial ? kExitIo : kExitOk;
}

std::string stripped_parts(const semspace_stem_result& r) {
  std::string out;
  const std::pair<const char*, const char*> parts[] = {
      {"antefix", r.antefix}, {"prefix", r.prefix}, {"suffix", r.suffix}, {"postfix", r.postfix}};
  for (const auto& [name, value] : parts) {
    if (value == nullptr) continue;
    if (!out.empty()) out += ',';
    out += std::string(name) + "=" + value;
  }
  return out.empty() ? "-" : out;
}

int cmd_stem(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Rules rules = load_rules(cfg);
  int code = kExitOk;
  for (const auto& word : cfg.paths) {
    semspace_stem_result r{};
    check(semspace_stem(rules.get(), cfg.mode, word.c_str(), &r));
    if (r.original[0] == '\0') {
      err << "semspace: '" << word << "' has no Arabic letters\n";
      code = kExitData;
    } else {
      out << r.original << '\t' << r.output << '\t' << (r.is_root ? "root" : "stem") << '\t' << stripped_parts(r)
          << '\n';
    }
    semspace_stem_result_clear(&r);
  }
  return code;
}

int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Rules rules = load_rules(cfg);
  bool partial = false;
  const Corpus corpus = load_corpus(cfg.paths.at(0), err, partial);
  semspace_space* raw = nullptr;
  check(semspace_space_build(corpus.get(), rules.get(), cfg.mode, cfg.k.value_or(0), cfg.scaling, &raw));
  const Space space(raw);
  check(semspace_space_save(space.get(), cfg.output->c_str()));
  semspace_space_info info{};
  check(semspace_space_info_get(space.get(), &info));
  out << "mode\t" << mode_name(info.mode) << '\n'
      << "rows\t" << info.rows << '\n'
      << "columns\t" << info.columns << '\n'
      << "k\t" << info.k << '\n'
      << "scaling\t" << (info.scaling == SEMSPACE_SCALING_USIGMA ? "usigma" : "u") << '\n'
      << "rules_fingerprint\t" << hex64(info.rules_fingerprint) << '\n'
      << "corpus_fingerprint\t" << hex64(info.corpus_fingerprint) << '\n';
  return partial ? kExitIo : kExitOk;
}

int cmd_sim(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  semspace_space* raw = nullptr;
  check(semspace_space_load(cfg.paths.at(0).c_str(), &raw));
  const Space space(raw);
  const Rules rules = load_rules(cfg);
  semspace_space_info info{};
  check(semspace_space_info_get(space.get(), &info));
  const std::uint64_t current = semspace_rules_fingerprint(rules.get());
  if (current != info.rules_fingerprint) {
    err << "semspace: warning: space was built with rules " << hex64(info.rules_fingerprint)
        << ", querying with rules " << hex64(current) << '\n';
  }
  semspace_measures m{};
  check(semspace_space_similarity(space.get(), rules.get(), cfg.paths.at(1).c_str(), cfg.paths.at(2).c_str(),
                                  cfg.normalize ? 1 : 0, &m));
  const char* names[] = {"cosine", "euclidean", "pearson", "jaccard"};
  for (int i = 0; i < 4; ++i) {
    out << names[i] << '\t' << (m.defined[i] ? format_measure(m.value[i]) : "undefined") << '\n';
  }
  return kExitOk;
}

int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Rules rules = load_rules(cfg);
  semspace_pairs* raw_pairs = nullptr;
  check(semspace_pairs_create(&raw_pairs));
  const Pairs pairs(raw_pairs);
  for (const auto& file : cfg.pairs) check(semspace_pairs_load(pairs.get(), file.c_str()));

  bool partial = false;
  const Corpus corpus = load_corpus(*cfg.corpus, err, partial);
  semspace_report_options opts{cfg.modes.data(), cfg.modes.size(), cfg.k.value_or(0), cfg.scaling,
                               cfg.normalize ? 1 : 0};
  char* text = nullptr;
  check(semspace_report_run(corpus.get(), pairs.get(), rules.get(), &opts, cfg.format, &text));
  out << text;
  semspace_string_free(text);
  return partial ? kExitIo : kExitOk;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Command::Stats: return cmd_stats(cfg, out, err);
    case Command::Stem: return cmd_stem(cfg, out, err);
    case Command::Build: return cmd_build(cfg, out, err);
    case Command::Sim: return cmd_sim(cfg, out, err);
    case Command::Report: return cmd_report(cfg, out, err);
  }
  return kExitUsage;
}

}  // namespace

int exit_code_for(semspace_status status) {
  switch (status) {
    case SEMSPACE_OK: return kExitOk;
    case SEMSPACE_ERR_USAGE: return kExitUsage;
    case SEMSPACE_ERR_IO: return kExitIo;
    case SEMSPACE_ERR_FORMAT:
    case SEMSPACE_ERR_OUT_OF_VOCABULARY: return kExitData;
    case SEMSPACE_ERR_NUMERIC:
    case SEMSPACE_ERR_UNDEFINED:
    case SEMSPACE_ERR_INTERNAL: break;
  }
  return kExitNumeric;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  // With -o, data is buffered and written only when the command succeeds.
  std::ostringstream buffer;
  const bool to_file = cfg.output && cfg.command != Command::Build;
  int code = kExitOk;
  try {
    code = dispatch(cfg, to_file ? buffer : out, err);
  } catch (const Failure& f) {
    err << "semspace: " << f.message << '\n';
    return f.code;
  }
  if (to_file) {
    std::ofstream file(*cfg.output, std::ios::binary | std::ios::trunc);
    file << buffer.str();
    if (!file) {
      err << "semspace: cannot write " << *cfg.output << '\n';
      return kExitIo;
    }
  }
  return code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const char* env = std::getenv("SEMSPACE_RULES");
  auto parsed = parse_args(argc, argv, env ? std::optional<std::string>(env) : std::nullopt);
  if (!parsed.config) {
    (parsed.exit_code == 0 ? out : err) << parsed.text;
    return parsed.exit_code;
  }
  return run(*parsed.config, out, err);
}

}  // namespace semspace::cli
