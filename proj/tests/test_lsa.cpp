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
#include <random>

#include "oracle.hpp"
#include "semspace/error.hpp"
#include "semspace/lsa.hpp"
#include "test_support.hpp"

using namespace semspace;

namespace {

std::vector<Paragraph> paragraphs(std::initializer_list<std::vector<std::string>> blocks) {
  std::vector<Paragraph> out;
  for (const auto& b : blocks) out.push_back({"d.txt", out.size(), b});
  return out;
}

const Stemmer& none() {
  static const Stemmer s(StemMode::None, nullptr);
  return s;
}

const Stemmer& light() {
  static const Stemmer s(StemMode::Light, nullptr);
  return s;
}

const Stemmer& root() {
  static const Stemmer s(StemMode::Root, nullptr);
  return s;
}

const SemanticSpace& fixture_space(const Stemmer& stemmer) {
  static const SemanticSpace light_space = build_space(test::fixture_corpus(), light(), std::nullopt, Scaling::PlainU);
  static const SemanticSpace root_space = build_space(test::fixture_corpus(), root(), std::nullopt, Scaling::PlainU);
  return stemmer.mode() == StemMode::Light ? light_space : root_space;
}

}  // namespace

TEST_SUITE("lsa") {

TEST_CASE("counting") {
  const auto ps = paragraphs({{"اب", "اب", "جد"}, {"جد"}});
  const auto m = build_matrix(ps, none());
  REQUIRE(m.rows() == 2);
  REQUIRE(m.cols() == 2);
  CHECK(m.vocabulary.find("اب") == 0u);
  CHECK(m.vocabulary.find("جد") == 1u);
  CHECK(m.at(0, 0) == 2);
  CHECK(m.at(0, 1) == 0);
  CHECK(m.at(1, 0) == 1);
  CHECK(m.at(1, 1) == 1);
  CHECK(m.columns[1].paragraph == 1);
  CHECK(m.stem_mode == StemMode::None);
}

TEST_CASE("single paragraph") {
  const auto m = build_matrix(paragraphs({{"اب"}}), none());
  CHECK(m.to_dense() == DenseMatrix(1, 1, 1.0));
}

TEST_CASE("empty corpus") {
  try {
    build_matrix({}, none());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
    CHECK(std::string(e.what()) == "empty corpus");
  }
}

TEST_CASE("stopwords are not counted") {
  RuleSet rules = default_rules();
  rules.stopwords = {"في"};
  const Stemmer s(StemMode::None, std::make_shared<RuleSet>(rules));
  const auto m = build_matrix(paragraphs({{"في", "اب"}, {"في"}}), s);
  CHECK(m.rows() == 1);
  CHECK(m.cols() == 1);
}

TEST_CASE("column sums equal paragraph token counts") {
  const auto ps = segment_corpus(test::fixture_corpus());
  const auto m = build_matrix(ps, light());
  REQUIRE(m.cols() == ps.size());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::uint64_t sum = 0;
    for (const auto& [row, count] : m.entries[j]) {
      CHECK(count > 0);
      sum += count;
    }
    CHECK(sum == ps[j].tokens.size());
  }
}

TEST_CASE("row structure of the fixture") {
  const auto ps = segment_corpus(test::fixture_corpus());
  const auto r = build_matrix(ps, root());
  const auto l = build_matrix(ps, light());
  CHECK(r.vocabulary.find(root().apply("السفير")) == r.vocabulary.find(root().apply("السفارة")));
  CHECK(l.vocabulary.find(light().apply("السفير")).has_value());
  CHECK(l.vocabulary.find(light().apply("السفير")) != l.vocabulary.find(light().apply("السفارة")));
  CHECK(r.rows() < l.rows());
}

TEST_CASE("truncation") {
  std::mt19937_64 rng(3);
  const auto x = oracle::random_integer_matrix(rng, 6, 8, 0, 5);
  const auto f = svd(x);
  SUBCASE("k = n with PlainU is U") {
    const auto s = truncate(f, f.n(), Scaling::PlainU);
    CHECK(s.vectors == f.u);
    CHECK(s.columns == 8);
  }
  SUBCASE("USigma scales by sigma") {
    const auto s = truncate(f, 3, Scaling::USigma);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(s.vectors(i, j) == f.u(i, j) * f.sigma[j]);
    CHECK(s.sigma.size() == 3);
  }
  SUBCASE("k out of range") {
    CHECK_THROWS_AS(truncate(f, 0, Scaling::PlainU), Error);
    CHECK_THROWS_AS(truncate(f, f.n() + 1, Scaling::PlainU), Error);
  }
}

TEST_CASE("rank-one space") {
  DenseMatrix x(2, 2);
  x(0, 0) = 3;
  x(1, 0) = 4;
  const auto s = truncate(svd(x), 1, Scaling::PlainU);
  CHECK(s.vectors(0, 0) == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(s.vectors(1, 0) == doctest::Approx(0.8).epsilon(1e-14));
}

TEST_CASE("parse scaling") {
  CHECK(parse_scaling("u") == Scaling::PlainU);
  CHECK(parse_scaling("usigma") == Scaling::USigma);
  CHECK_FALSE(parse_scaling("sigma").has_value());
}

TEST_CASE("fixture spaces") {
  const auto& space = fixture_space(light());
  const auto ps = segment_corpus(test::fixture_corpus());
  CHECK(space.columns == ps.size());
  CHECK(space.k == std::min<std::size_t>(300, std::min(space.vocabulary.size(), space.columns)));
  CHECK(space.vectors.rows() == space.vocabulary.size());
  CHECK(space.provenance.stem_mode == StemMode::Light);
  CHECK(space.provenance.corpus_fingerprint == corpus_fingerprint(test::fixture_corpus()));
  CHECK(space.provenance.rules_fingerprint == default_rules().fingerprint());
  for (std::size_t i = 1; i < space.sigma.size(); ++i) CHECK(space.sigma[i - 1] >= space.sigma[i]);
}

TEST_CASE("word lookup") {
  const auto& space = fixture_space(light());
  const auto row = *space.vocabulary.find("عراقي");
  const auto v = word_vector(space, "العراقية", light());
  CHECK(v.data() == space.row(row).data());
  CHECK(word_vector(space, "العراقي", light()).data() == v.data());
  CHECK(word_vector(space, "عراقي", light()).data() == v.data());
  try {
    word_vector(space, "حاسوب", light());
    FAIL("expected out of vocabulary");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfVocabulary);
    CHECK(std::string(e.what()).find("حاسوب") != std::string::npos);
  }
  CHECK_THROWS_AS(word_vector(space, "abc", light()), Error);
  CHECK_THROWS_AS(word_vector(space, "العراقية", root()), Error);
}

TEST_CASE("builds are deterministic") {
  const auto again = build_space(test::fixture_corpus(), light(), std::nullopt, Scaling::PlainU);
  CHECK(again == fixture_space(light()));
}

}  // TEST_SUITE
