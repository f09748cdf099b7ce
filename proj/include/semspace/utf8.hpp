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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semspace::utf8 {

/// Decodes a UTF-8 string. Returns nullopt on any malformed sequence,
/// overlong encoding, surrogate or out-of-range code point.
std::optional<std::u32string> decode(std::string_view bytes);

/// Decodes, silently dropping bytes that do not start a valid sequence.
std::u32string decode_lossy(std::string_view bytes);

bool is_valid(std::string_view bytes);

std::string encode(std::u32string_view cps);
void append(std::string& out, char32_t cp);

/// Number of code points; the input must be valid UTF-8.
std::size_t length(std::string_view valid);

bool is_space(char32_t cp) noexcept;

}  // namespace semspace::utf8
