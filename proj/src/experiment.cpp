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

#include "semspace/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>

#include "semspace/error.hpp"

namespace semspace {

std::string_view to_string(PairLabel label) noexcept {
  return label == PairLabel::Similar ? "Similar" : "Different";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto tab = line.find('\t');
    out.push_back(trim(line.substr(0, tab)));
    if (tab == std::string_view::npos) break;
    line.remove_prefix(tab + 1);
  }
  return out;
}

}  // namespace

std::vector<WordPair> parse_pairs(std::string_view text, std::string_view source) {
  std::vector<WordPair> pairs;
  std::size_t lineno = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (line.empty() || line.front() == '#') continue;

    auto fail = [&](const std::string& msg) {
      throw Error(ErrorCode::Format, std::string(source) + ":" + std::to_string(lineno) + ": " + msg);
    };
    const auto fields = split_tabs(line);
    if (fields.size() < 3 || fields.size() > 5) fail("expected 3 to 5 tab-separated fields");
    if (fields[0].empty() || fields[1].empty()) fail("empty word");

    WordPair p;
    p.word_a = fields[0];
    p.word_b = fields[1];
    if (fields[2] == "Similar") {
      p.label = PairLabel::Similar;
    } else if (fields[2] == "Different") {
      p.label = PairLabel::Different;
    } else {
      fail("label must be Similar or Different, got '" + std::string(fields[2]) + "'");
    }
    if (fields.size() > 3 && !fields[3].empty()) p.gloss = std::string(fields[3]);
    if (fields.size() > 4 && !fields[4].empty()) p.transliteration = std::string(fields[4]);
    pairs.push_back(std::move(p));
  }
  return pairs;
}

std::vector<WordPair> load_pairs(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read pair file " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_pairs(ss.str(), file.filename().string());
}

ReportRow score_pair(const SemanticSpace& space, const Stemmer& stemmer, const WordPair& pair, bool normalize_rows) {
  ReportRow row;
  row.pair = pair;
  row.stemmer = stemmer.mode();

  auto lookup = [&](const std::string& word, std::string& stem) -> std::optional<std::vector<double>> {
    const std::string token = normalize(word);
    stem = token.empty() ? token : stemmer.apply(token);
    const auto idx = stem.empty() ? std::nullopt : space.vocabulary.find(stem);
    if (!idx) {
      row.out_of_vocabulary.push_back(word);
      return std::nullopt;
    }
    const auto r = space.row(*idx);
    std::vector<double> v(r.begin(), r.end());
    if (normalize_rows) {
      double n = 0.0;
      for (double x : v) n += x * x;
      n = std::sqrt(n);
      if (n > 0.0)
        for (double& x : v) x /= n;
    }
    return v;
  };

  const auto a = lookup(pair.word_a, row.stem_a);
  const auto b = lookup(pair.word_b, row.stem_b);
  if (a && b) {
    row.measures = measure_all(*a, *b);
  } else {
    const Measure order[] = {Measure::Cosine, Measure::Euclidean, Measure::Pearson, Measure::Jaccard};
    for (std::size_t i = 0; i < 4; ++i) row.measures[i] = {order[i], std::nullopt, "out of vocabulary"};
  }
  return row;
}

ComparisonReport run_comparison(const Corpus& corpus, std::span<const WordPair> pairs,
                                std::shared_ptr<const RuleSet> rules, const ComparisonOptions& options) {
  if (!rules) rules = std::make_shared<const RuleSet>(default_rules());

  std::vector<Stemmer> stemmers;
  for (StemMode mode : options.stemmers) stemmers.emplace_back(mode, rules);

  // Spaces are independent; build them concurrently.
  std::vector<std::future<SemanticSpace>> builds;
  for (const auto& stemmer : stemmers) {
    builds.push_back(std::async(std::launch::async, [&corpus, &stemmer, &options] {
      return build_space(corpus, stemmer, options.k, options.scaling);
    }));
  }
  std::vector<SemanticSpace> spaces;
  for (auto& f : builds) spaces.push_back(f.get());

  ComparisonReport report;
  report.stemmers = options.stemmers;
  report.metadata.corpus_fingerprint = corpus_fingerprint(corpus);
  report.metadata.rules_fingerprint = rules->fingerprint();
  report.metadata.corpus = corpus_stats(corpus);
  report.metadata.scaling = options.scaling;
  report.metadata.normalize = options.normalize;
  for (std::size_t s = 0; s < stemmers.size(); ++s) {
    report.metadata.spaces.push_back(
        {stemmers[s].mode(), spaces[s].vocabulary.size(), spaces[s].columns, spaces[s].k});
    for (const auto& pair : pairs) report.rows.push_back(score_pair(spaces[s], stemmers[s], pair, options.normalize));
  }
  return report;
}

std::optional<ReportFormat> parse_report_format(std::string_view name) noexcept {
  if (name == "tsv") return ReportFormat::Tsv;
  if (name == "markdown" || name == "md") return ReportFormat::Markdown;
  return std::nullopt;
}

std::string format_value(double v) {
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

namespace {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string stemmer_title(StemMode mode) {
  switch (mode) {
    case StemMode::Light: return "Light stemmer (stem-based)";
    case StemMode::Root: return "Root stemmer (root-based)";
    case StemMode::None: return "No stemming";
  }
  return "";
}

std::string notes(const ReportRow& row) {
  std::string out;
  auto add = [&](const std::string& s) {
    if (!out.empty()) out += "; ";
    out += s;
  };
  if (!row.out_of_vocabulary.empty()) {
    std::string s = "oov:";
    for (const auto& w : row.out_of_vocabulary) {
      s += " " + w + " (" + (w == row.pair.word_a ? row.stem_a : row.stem_b) + ")";
    }
    add(s);
    return out;
  }
  if (row.conflated()) add("same row: " + row.stem_a);
  std::string undefined;
  for (const auto& m : row.measures) {
    if (m.defined()) continue;
    if (!undefined.empty()) undefined += ", ";
    undefined += to_string(m.measure);
  }
  if (!undefined.empty()) add("undefined: " + undefined);
  return out;
}

std::vector<std::string> cells(const ReportRow& row) {
  std::vector<std::string> c;
  c.push_back("(" + row.pair.word_a + ", " + row.pair.word_b + ")");
  c.push_back(row.pair.transliteration.value_or(""));
  c.push_back(row.pair.gloss.value_or(""));
  for (const auto& m : row.measures) {
    if (m.defined()) {
      c.push_back(format_value(*m.value));
    } else {
      c.push_back(row.out_of_vocabulary.empty() ? "undefined" : "oov");
    }
  }
  c.push_back(notes(row));
  return c;
}

const std::vector<std::string>& headers() {
  static const std::vector<std::string> h = {"Words",  "Transliteration", "English Translation", "Cosine",
                                             "Euclidean", "Pearson",      "Jaccard",             "Notes"};
  return h;
}

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

void metadata_lines(const ComparisonReport& r, std::vector<std::pair<std::string, std::string>>& kv) {
  const auto& m = r.metadata;
  kv.emplace_back("corpus_fingerprint", hex64(m.corpus_fingerprint));
  kv.emplace_back("rules_fingerprint", hex64(m.rules_fingerprint));
  kv.emplace_back("documents", std::to_string(m.corpus.n_documents));
  kv.emplace_back("paragraphs", std::to_string(m.corpus.n_paragraphs));
  kv.emplace_back("words", std::to_string(m.corpus.n_words));
  kv.emplace_back("scaling", std::string(to_string(m.scaling)));
  kv.emplace_back("normalize", m.normalize ? "true" : "false");
  for (const auto& s : m.spaces) {
    kv.emplace_back("space." + std::string(to_string(s.stemmer)),
                    "rows=" + std::to_string(s.rows) + " columns=" + std::to_string(s.columns) +
                        " k=" + std::to_string(s.k));
  }
}

}  // namespace

std::string render_report(const ComparisonReport& report, ReportFormat format) {
  std::ostringstream out;
  std::vector<std::pair<std::string, std::string>> kv;
  metadata_lines(report, kv);

  const bool md = format == ReportFormat::Markdown;
  if (md) {
    out << "# Word similarity report\n\n| Key | Value |\n|---|---|\n";
    for (const auto& [k, v] : kv) out << "| " << k << " | " << v << " |\n";
  } else {
    for (const auto& [k, v] : kv) out << "# " << k << '\t' << v << '\n';
  }

  for (StemMode stemmer : report.stemmers) {
    for (PairLabel label : {PairLabel::Similar, PairLabel::Different}) {
      if (md) {
        out << "\n## " << stemmer_title(stemmer) << ": " << to_string(label) << " words\n\n|";
        for (const auto& h : headers()) out << ' ' << h << " |";
        out << "\n|";
        for (std::size_t i = 0; i < headers().size(); ++i) out << "---|";
        out << '\n';
      } else {
        out << "\n## " << to_string(stemmer) << '\t' << to_string(label) << '\n';
        for (std::size_t i = 0; i < headers().size(); ++i) out << (i ? "\t" : "") << headers()[i];
        out << '\n';
      }
      for (const auto& row : report.rows) {
        if (row.stemmer != stemmer || row.pair.label != label) continue;
        const auto c = cells(row);
        if (md) {
          out << '|';
          for (const auto& cell : c) out << ' ' << md_escape(cell) << " |";
        } else {
          for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "\t" : "") << c[i];
        }
        out << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace semspace
