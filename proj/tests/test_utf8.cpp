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

#include "semspace/hash.hpp"
#include "semspace/utf8.hpp"

using namespace semspace;

TEST_SUITE("utf8") {

TEST_CASE("decode and encode round-trip") {
  const std::string s = "abc سلام €𝄞";
  const auto cps = utf8::decode(s);
  REQUIRE(cps.has_value());
  CHECK(cps->size() == 11);
  CHECK((*cps)[4] == U'س');
  CHECK((*cps)[10] == U'\U0001D11E');
  CHECK(utf8::encode(*cps) == s);
  CHECK(utf8::length(s) == 11);
}

TEST_CASE("invalid sequences") {
  CHECK_FALSE(utf8::is_valid("\xff"));
  CHECK_FALSE(utf8::is_valid("\xd8"));          // truncated two-byte sequence
  CHECK_FALSE(utf8::is_valid("\xc0\xaf"));      // overlong
  CHECK_FALSE(utf8::is_valid("\xed\xa0\x80"));  // surrogate
  CHECK_FALSE(utf8::is_valid("\xf4\x90\x80\x80"));
  CHECK(utf8::is_valid(""));
  CHECK(utf8::decode_lossy("a\xffب") == U"aب");
}

TEST_CASE("unicode whitespace") {
  CHECK(utf8::is_space(U' '));
  CHECK(utf8::is_space(U'\t'));
  CHECK(utf8::is_space(0x00A0));
  CHECK(utf8::is_space(0x2003));
  CHECK(utf8::is_space(0x3000));
  CHECK_FALSE(utf8::is_space(U'ا'));
  CHECK_FALSE(utf8::is_space(0x200B));
}

TEST_CASE("fnv1a reference values") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

}  // TEST_SUITE
