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

#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "semspace/error.hpp"
#include "semspace/experiment.hpp"
#include "test_support.hpp"

using namespace semspace;

namespace {

std::vector<WordPair> bundled_pairs() {
  auto pairs = load_pairs(test::pairs_dir() / "pairs-similar.tsv");
  const auto diff = load_pairs(test::pairs_dir() / "pairs-different.tsv");
  pairs.insert(pairs.end(), diff.begin(), diff.end());
  return pairs;
}

// The golden report's settings: both stemmers, k = 50, plain U rows.
ComparisonOptions options() {
  ComparisonOptions o;
  o.k = 50;
  return o;
}

const ComparisonReport& fixture_report() {
  static const ComparisonReport report = run_comparison(test::fixture_corpus(), bundled_pairs(), nullptr, options());
  return report;
}

bool identity_row(const ReportRow& r) {
  return r.measures[0].defined() && std::abs(*r.measures[0].value - 1.0) <= 1e-9 && r.measures[1].defined() &&
         *r.measures[1].value <= 1e-9 && r.measures[2].defined() && std::abs(*r.measures[2].value - 1.0) <= 1e-9 &&
         r.measures[3].defined() && std::abs(*r.measures[3].value - 1.0) <= 1e-9;
}

}  // namespace

TEST_SUITE("experiment") {

TEST_CASE("pair parsing") {
  const auto ps = parse_pairs("# header\n\nا\tب\tSimilar\tgloss\ttr\nج\tد\tDifferent\n\nج\tد\tDifferent\r\n");
  REQUIRE(ps.size() == 3);
  CHECK(ps[0].word_a == "ا");
  CHECK(ps[0].gloss == "gloss");
  CHECK(ps[0].transliteration == "tr");
  CHECK(ps[1].label == PairLabel::Different);
  CHECK_FALSE(ps[1].gloss.has_value());
  CHECK(parse_pairs("").empty());
}

TEST_CASE("malformed pair lines name the line") {
  for (const char* bad : {"ا\tب\n\nا\tب\tSame\n", "ا\tب\n", "ا\t\tSimilar\n", "ا\tب\tSimilar\t1\t2\t3\n"}) {
    CAPTURE(bad);
    try {
      parse_pairs(bad, "p.tsv");
      FAIL("expected a format error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Format);
      CHECK(std::string(e.what()).rfind("p.tsv:", 0) == 0);
    }
  }
  try {
    parse_pairs("ا\tب\tSimilar\nا\tب\tSame\n", "p.tsv");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).rfind("p.tsv:2:", 0) == 0);
  }
}

TEST_CASE("bundled pair files") {
  const auto similar = load_pairs(test::pairs_dir() / "pairs-similar.tsv");
  const auto different = load_pairs(test::pairs_dir() / "pairs-different.tsv");
  auto has = [](const std::vector<WordPair>& ps, const char* a, const char* b, const char* gloss) {
    return std::any_of(ps.begin(), ps.end(),
                       [&](const WordPair& p) { return p.word_a == a && p.word_b == b && p.gloss == gloss; });
  };
  CHECK(has(similar, "رفضه", "واستنكاره", "Rejection"));
  CHECK(has(different, "السفارة", "السفير", "(Ambassador, Embassy)"));
  for (const auto& p : similar) CHECK(p.label == PairLabel::Similar);
  for (const auto& p : different) CHECK(p.label == PairLabel::Different);
  CHECK_THROWS_AS(load_pairs(test::pairs_dir() / "missing.tsv"), Error);
}

TEST_CASE("every bundled pair word occurs in the fixture") {
  const Stemmer none(StemMode::None, nullptr);
  const auto& vocab = test::fixture_vocabulary();
  for (const auto& p : bundled_pairs()) {
    for (const auto& w : {p.word_a, p.word_b}) {
      CAPTURE(w);
      CHECK(std::binary_search(vocab.begin(), vocab.end(), normalize(w)));
    }
  }
}

TEST_CASE("report completeness and order") {
  const auto& r = fixture_report();
  const auto pairs = bundled_pairs();
  REQUIRE(r.rows.size() == pairs.size() * 2);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    CHECK(r.rows[i].stemmer == StemMode::Light);
    CHECK(r.rows[i].pair.word_a == pairs[i].word_a);
    CHECK(r.rows[pairs.size() + i].stemmer == StemMode::Root);
  }
  CHECK(r.metadata.spaces.size() == 2);
  CHECK(r.metadata.corpus.n_documents == 12);
}

TEST_CASE("conflated pairs are identity rows") {
  std::size_t conflated = 0;
  for (const auto& row : fixture_report().rows) {
    if (!row.conflated()) continue;
    ++conflated;
    CAPTURE(row.pair.word_a);
    CHECK(identity_row(row));
  }
  CHECK(conflated >= 4);
}

TEST_CASE("light conflation implies root conflation") {
  const auto& rows = fixture_report().rows;
  const std::size_t n = rows.size() / 2;
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].conflated()) CHECK(rows[n + i].conflated());
  }
}

TEST_CASE("identical words") {
  const std::vector<WordPair> pairs = {{"الدولة", "الدولة", PairLabel::Similar, std::nullopt, std::nullopt}};
  const auto r = run_comparison(test::fixture_corpus(), pairs, nullptr, {{StemMode::Light, StemMode::Root, StemMode::None}});
  REQUIRE(r.rows.size() == 3);
  for (const auto& row : r.rows) CHECK(identity_row(row));
}

TEST_CASE("out-of-vocabulary pairs become marked rows") {
  const std::vector<WordPair> pairs = {{"حاسوب", "الدولة", PairLabel::Different, std::nullopt, std::nullopt}};
  const auto r = run_comparison(test::fixture_corpus(), pairs, nullptr, {{StemMode::Light}});
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].out_of_vocabulary == std::vector<std::string>{"حاسوب"});
  for (const auto& m : r.rows[0].measures) CHECK_FALSE(m.defined());
  const auto text = render_report(r, ReportFormat::Tsv);
  CHECK(text.find("oov: حاسوب (حاسوب)") != std::string::npos);
}

TEST_CASE("normalized rows") {
  const std::vector<WordPair> pairs = {{"السفير", "السفارة", PairLabel::Different, std::nullopt, std::nullopt}};
  ComparisonOptions plain{{StemMode::Light}};
  ComparisonOptions unit = plain;
  unit.normalize = true;
  const auto a = run_comparison(test::fixture_corpus(), pairs, nullptr, plain);
  const auto b = run_comparison(test::fixture_corpus(), pairs, nullptr, unit);
  CHECK(*a.rows[0].measures[0].value == doctest::Approx(*b.rows[0].measures[0].value).epsilon(1e-12));
  CHECK(*b.rows[0].measures[1].value <= 2.0);
  CHECK(b.metadata.normalize);
}

TEST_CASE("rendering") {
  ComparisonReport empty;
  empty.stemmers = {StemMode::Light};
  const auto tsv = render_report(empty, ReportFormat::Tsv);
  CHECK(tsv.find("Words\tTransliteration\tEnglish Translation\tCosine\tEuclidean\tPearson\tJaccard") !=
        std::string::npos);

  const std::vector<WordPair> pairs = {{"الدولة", "البلد", PairLabel::Different, std::string("(State, Country)"),
                                        std::string("(āldwlh, ālbld)")}};
  const auto r = run_comparison(test::fixture_corpus(), pairs, nullptr, {{StemMode::Light}});
  const auto text = render_report(r, ReportFormat::Tsv);
  std::size_t data_rows = 0;
  std::size_t pos = 0;
  while ((pos = text.find("(الدولة, البلد)", pos)) != std::string::npos) {
    ++data_rows;
    const auto eol = text.find('\n', pos);
    const auto line = text.substr(pos, eol - pos);
    CHECK(std::count(line.begin(), line.end(), '\t') == 7);
    pos = eol;
  }
  CHECK(data_rows == 1);
}

TEST_CASE("formatting values") {
  CHECK(format_value(0.0) == "0");
  CHECK(format_value(-0.0) == "0");
  CHECK(format_value(1.0) == "1");
  CHECK(format_value(0.123456789) == "0.123457");
  CHECK(format_value(-1.5e-14) == "-1.5e-14");
  CHECK(parse_report_format("md") == ReportFormat::Markdown);
  CHECK(parse_report_format("tsv") == ReportFormat::Tsv);
  CHECK_FALSE(parse_report_format("html").has_value());
}

TEST_CASE("markdown report matches the golden file") {
  const auto text = render_report(fixture_report(), ReportFormat::Markdown);
  const auto golden = test::source_dir() / "tests" / "golden" / "fixture-report.md";
  if (std::getenv("SEMSPACE_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(golden, std::ios::binary) << text;
  }
  CHECK(text == test::read_file(golden));
}

TEST_CASE("reports are reproducible") {
  const auto again = run_comparison(test::fixture_corpus(), bundled_pairs(), nullptr, options());
  CHECK(render_report(again, ReportFormat::Tsv) == render_report(fixture_report(), ReportFormat::Tsv));
}

}  // TEST_SUITE
