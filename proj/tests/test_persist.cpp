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

#include "semspace/error.hpp"
#include "semspace/lsa.hpp"
#include "test_support.hpp"

using namespace semspace;

namespace {

SemanticSpace small_space(Scaling scaling = Scaling::PlainU) {
  const std::vector<Paragraph> ps = {{"a.txt", 0, {"اب", "اب", "جد"}}, {"a.txt", 1, {"جد", "هو"}},
                                     {"b.txt", 0, {"هو", "اب"}}};
  const Stemmer stemmer(StemMode::None, nullptr);
  const auto m = build_matrix(ps, stemmer);
  auto s = truncate(svd(m), 2, scaling);
  s.vocabulary = m.vocabulary;
  s.provenance = {StemMode::None, 0x1122334455667788ULL, 0x99AABBCCDDEEFF00ULL};
  return s;
}

SpaceFileError::Kind kind_of(std::string_view bytes) {
  try {
    deserialize_space(bytes);
  } catch (const SpaceFileError& e) {
    CHECK(e.code() == ErrorCode::Format);
    return e.kind();
  }
  FAIL("expected a space file error");
  return SpaceFileError::Kind::Malformed;
}

}  // namespace

TEST_SUITE("persist") {

TEST_CASE("round-trip is bit-exact") {
  for (auto scaling : {Scaling::PlainU, Scaling::USigma}) {
    const auto s = small_space(scaling);
    const auto bytes = serialize_space(s);
    const auto back = deserialize_space(bytes);
    CHECK(back == s);
    CHECK(serialize_space(back) == bytes);
  }
}

TEST_CASE("file round-trip") {
  test::TempDir dir;
  const auto s = small_space();
  save_space(s, dir.path() / "s.bin");
  CHECK(load_space(dir.path() / "s.bin") == s);
  CHECK(test::read_file(dir.path() / "s.bin") == serialize_space(s));
}

TEST_CASE("layout") {
  const auto s = small_space();
  const auto bytes = serialize_space(s);
  CHECK(bytes.substr(0, 8) == "SEMSPACE");
  CHECK(bytes[8] == 1);  // version, little-endian
  CHECK(bytes[9] == 0);
  CHECK(bytes[12] == static_cast<char>(StemMode::None));
  CHECK(static_cast<unsigned char>(bytes[13]) == 0x88);  // rules fingerprint low byte
  // header 62 bytes, vocabulary, sigma, vectors, checksum
  std::size_t vocab = 0;
  for (const auto& t : s.vocabulary.tokens()) vocab += 4 + t.size();
  CHECK(bytes.size() == 62 + vocab + 8 * s.k + 8 * s.k * s.vocabulary.size() + 8);
}

TEST_CASE("corrupted payload byte") {
  auto bytes = serialize_space(small_space());
  bytes[bytes.size() - 20] ^= 0x01;
  CHECK(kind_of(bytes) == SpaceFileError::Kind::Checksum);
  bytes = serialize_space(small_space());
  bytes[66] ^= 0x01;  // first byte of the first vocabulary token
  CHECK(kind_of(bytes) == SpaceFileError::Kind::Checksum);
}

TEST_CASE("truncation") {
  const auto bytes = serialize_space(small_space());
  for (std::size_t cut : {std::size_t{10}, std::size_t{40}, bytes.size() / 2, bytes.size() - 1}) {
    CAPTURE(cut);
    CHECK(kind_of(std::string_view(bytes).substr(0, cut)) == SpaceFileError::Kind::Truncated);
  }
}

TEST_CASE("bad magic and version") {
  auto bytes = serialize_space(small_space());
  CHECK(kind_of("") == SpaceFileError::Kind::BadMagic);
  CHECK(kind_of("NOTASPACEFILE") == SpaceFileError::Kind::BadMagic);
  bytes[8] = 2;
  CHECK(kind_of(bytes) == SpaceFileError::Kind::Version);
}

TEST_CASE("trailing bytes") {
  auto bytes = serialize_space(small_space());
  bytes += "x";
  CHECK(kind_of(bytes) == SpaceFileError::Kind::Malformed);
}

TEST_CASE("provenance survives and differs across rule sets") {
  const Corpus& c = test::fixture_corpus();
  RuleFiles files = default_rule_files();
  files["light/suffixes.txt"] += "\nها\n";
  const Stemmer altered(StemMode::Light, std::make_shared<RuleSet>(parse_rules(files)));
  const Stemmer shipped(StemMode::Light, nullptr);
  const auto a = deserialize_space(serialize_space(build_space(c, altered, 5, Scaling::PlainU)));
  const auto b = deserialize_space(serialize_space(build_space(c, shipped, 5, Scaling::PlainU)));
  CHECK(a.provenance.rules_fingerprint != b.provenance.rules_fingerprint);
  CHECK(a.provenance.corpus_fingerprint == b.provenance.corpus_fingerprint);
  CHECK(b.provenance.rules_fingerprint == default_rules().fingerprint());
}

TEST_CASE("missing file") {
  test::TempDir dir;
  try {
    load_space(dir.path() / "none.bin");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
}

}  // TEST_SUITE
