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

#include <algorithm>
#include <set>

#include "semspace/corpus.hpp"
#include "semspace/error.hpp"
#include "semspace/utf8.hpp"
#include "test_support.hpp"

using namespace semspace;

namespace {

RawDocument doc(std::string text) { return {"d.txt", std::move(text), {}, std::nullopt}; }

bool arabic_only(const std::string& token) {
  const auto cps = utf8::decode(token);
  return cps && !cps->empty() && std::all_of(cps->begin(), cps->end(), is_arabic_letter);
}

}  // namespace

TEST_SUITE("corpus") {

TEST_CASE("normalize") {
  CHECK(normalize("مُحَمَّد") == "محمد");
  CHECK(normalize("abc123") == "");
  CHECK(normalize("إسلام") == "اسلام");
  CHECK(normalize("أحمد") == "احمد");
  CHECK(normalize("آمن") == "امن");
  CHECK(normalize("مستشفى") == "مستشفي");
  CHECK(normalize("مدرسة") == "مدرسة");
  CHECK(normalize("الســـلام") == "السلام");
  CHECK(normalize("،؟!") == "");
  CHECK(normalize("٣٤") == "");
}

TEST_CASE("tokenize") {
  CHECK(tokenize("العربية الفصحى") == std::vector<std::string>{"العربية", "الفصحي"});
  CHECK(tokenize("").empty());
  CHECK(tokenize("العربيةُ، الفصحى!") == std::vector<std::string>{"العربية", "الفصحي"});
  CHECK(tokenize("  a  العربية \t123  الفصحى　") == std::vector<std::string>{"العربية", "الفصحي"});
}

TEST_CASE("tokenize of joined tokens is idempotent") {
  const std::string text = test::read_file(test::fixture_dir() / "sim" / "sim-01.txt");
  const auto once = tokenize(text);
  std::string joined;
  for (const auto& t : once) joined += t + " ";
  CHECK(tokenize(joined) == once);
  for (const auto& t : once) CHECK(arabic_only(t));
}

TEST_CASE("paragraph segmentation") {
  auto ps = segment_paragraphs(doc("سطر\n\nسطر"));
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].tokens.size() == 1);
  CHECK(ps[1].tokens.size() == 1);
  CHECK(ps[1].index == 1);

  CHECK(segment_paragraphs(doc("سطر اول\nسطر ثان\nسطر")).size() == 1);
  CHECK(segment_paragraphs(doc("اول\n\n\nثان\n\n\nثالث")).size() == 3);
  CHECK(segment_paragraphs(doc("")).empty());
  CHECK(segment_paragraphs(doc("اول\r\n\r\nثان\r\n")).size() == 2);
  CHECK(segment_paragraphs(doc("اول\n \t\nثان")).size() == 2);
  // A block with nothing Arabic is dropped and does not consume an index.
  ps = segment_paragraphs(doc("اول\n\n123 abc\n\nثان"));
  REQUIRE(ps.size() == 2);
  CHECK(ps[1].index == 1);
  CHECK(ps[1].tokens == std::vector<std::string>{"ثان"});
}

TEST_CASE("load an empty directory") {
  test::TempDir dir;
  const auto c = load_corpus(dir.path());
  CHECK(c.documents.empty());
  CHECK_FALSE(c.warnings.empty());
  CHECK(corpus_stats(c) == CorpusStats{});
}

TEST_CASE("load a categorized directory") {
  test::TempDir dir;
  dir.write("pol/a.txt", "الدولة");
  dir.write("econ/b.txt", "السوق\n\nالنفط");
  dir.write("sport/c.txt", "الفريق");
  dir.write("sport/notes.md", "ignored");
  const auto c = load_corpus(dir.path());
  REQUIRE(c.documents.size() == 3);
  CHECK(c.documents[0].id == "econ/b.txt");
  CHECK(c.documents[0].category == "econ");
  CHECK(c.documents[2].id == "sport/c.txt");
  const auto s = corpus_stats(c);
  CHECK(s.n_documents == 3);
  CHECK(s.n_categories == 3);
  CHECK(s.n_paragraphs == 4);
  CHECK(s.n_words == 4);
}

TEST_CASE("flat layout has no categories") {
  test::TempDir dir;
  dir.write("b.txt", "ب");
  dir.write("a.txt", "ا");
  const auto c = load_corpus(dir.path());
  REQUIRE(c.documents.size() == 2);
  CHECK(c.documents[0].id == "a.txt");
  CHECK_FALSE(c.documents[0].category.has_value());
  CHECK(corpus_stats(c).n_categories == 0);
}

TEST_CASE("bad files are recorded and skipped") {
  test::TempDir dir;
  dir.write("good.txt", "الدولة");
  dir.write("bad.txt", "\xff\xfe broken");
  dir.write("blank.txt", " \n\n ");
  dir.write("x/y/deep.txt", "عميق");
  const auto c = load_corpus(dir.path());
  CHECK(c.documents.size() == 1);
  REQUIRE(c.errors.size() == 1);
  CHECK(c.errors[0].path.filename() == "bad.txt");
  CHECK(c.partial());
  CHECK(c.warnings.size() == 2);
}

TEST_CASE("missing root is an I/O error") {
  test::TempDir dir;
  try {
    load_corpus(dir.path() / "nope");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
}

TEST_CASE("fixture corpus statistics") {
  const auto& c = test::fixture_corpus();
  const auto s = corpus_stats(c);
  CHECK(s.n_documents == 12);
  CHECK(s.n_categories == 2);
  std::set<std::string> cats;
  for (const auto& d : c.documents) cats.insert(d.category.value_or(""));
  CHECK(cats == std::set<std::string>{"diff", "sim"});
  CHECK(c.errors.empty());

  std::size_t words = 0;
  std::size_t paragraphs = 0;
  std::uintmax_t bytes = 0;
  for (const auto& d : c.documents) {
    const auto ps = segment_paragraphs(d);
    paragraphs += ps.size();
    for (const auto& p : ps) {
      CHECK_FALSE(p.tokens.empty());
      words += p.tokens.size();
    }
    bytes += std::filesystem::file_size(d.source);
  }
  CHECK(s.n_words == words);
  CHECK(s.n_paragraphs == paragraphs);
  CHECK(s.size_bytes == bytes);
  CHECK(s.n_paragraphs >= s.n_documents);
  CHECK(s.n_paragraphs >= 150);
  CHECK(s.n_paragraphs <= 240);
}

TEST_CASE("fingerprint tracks content") {
  test::TempDir dir;
  dir.write("a.txt", "الدولة");
  const auto fp1 = corpus_fingerprint(load_corpus(dir.path()));
  CHECK(fp1 == corpus_fingerprint(load_corpus(dir.path())));
  dir.write("a.txt", "البلد");
  CHECK(fp1 != corpus_fingerprint(load_corpus(dir.path())));
}

}  // TEST_SUITE
