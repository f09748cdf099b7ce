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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace semspace {

enum class StemMode { Root, Light, None };
enum class StemKind { Root, Stem };

std::string_view to_string(StemMode mode) noexcept;
std::string_view to_string(StemKind kind) noexcept;
/// Accepts "root", "light", "stem" (alias of light) and "none".
std::optional<StemMode> parse_stem_mode(std::string_view name) noexcept;

/// Affix lists for the four positions of an Arabic word
/// (antefix + prefix + core + suffix + postfix). Every list is deduplicated
/// and ordered longest-first; ties keep file order.
struct AffixTable {
  std::vector<std::string> antefixes;
  std::vector<std::string> prefixes;
  std::vector<std::string> suffixes;
  std::vector<std::string> postfixes;
  std::size_t min_stem_len = 2;
};

/// A template over the placeholders ف ع ل. Letters outside root_positions
/// must match literally.
struct Pattern {
  std::string templ;
  std::vector<std::size_t> root_positions;  // 3 (triliteral) or 4 (quadriliteral)
  std::size_t length = 0;                   // in letters
};

struct PatternTable {
  std::vector<Pattern> patterns;
};

/// Everything a stemmer needs. The light table drives light stemming; root
/// stemming runs the light table first and then searches the root table and
/// patterns on what is left.
struct RuleSet {
  AffixTable light;
  AffixTable root;
  PatternTable patterns;
  std::unordered_set<std::string> stopwords;

  /// Stable hash over the parsed tables.
  std::uint64_t fingerprint() const;
};

struct StrippedParts {
  std::optional<std::string> antefix;
  std::optional<std::string> prefix;
  std::optional<std::string> suffix;
  std::optional<std::string> postfix;
};

struct StemResult {
  std::string original;
  std::string output;
  StemKind kind = StemKind::Stem;
  StrippedParts stripped;
  /// What remains after affix stripping; antefix + prefix + residual +
  /// suffix + postfix == original.
  std::string residual;
  /// Template that produced the root, when one matched.
  std::optional<std::string> pattern;
};

struct Decomposition {
  std::optional<std::string> antefix;
  std::optional<std::string> prefix;
  std::string core;  // root when a template matched, the residual otherwise
  std::optional<std::string> suffix;
  std::optional<std::string> postfix;

  bool operator==(const Decomposition&) const = default;
};

/// Strips the longest antefix+prefix cluster and the longest suffix+postfix
/// cluster that leave at least `table.min_stem_len` letters, repeating until
/// nothing more can be stripped. The result is a fixpoint of light_stem.
StemResult light_stem(std::string_view token, const AffixTable& table);

/// Root search on a single token: tries every affix split that keeps
/// `table.min_stem_len` letters, least stripping first, and returns the root
/// of the first split whose residual fits a triliteral template (then a
/// quadriliteral one). Falls back to the unstripped token.
StemResult extract_root(std::string_view token, const AffixTable& table, const PatternTable& patterns);

/// light_stem with rules.light, then extract_root with rules.root on the
/// light output. Words sharing a light stem therefore share a root.
StemResult root_stem(std::string_view token, const RuleSet& rules);

Decomposition decompose(std::string_view token, const RuleSet& rules);

/// Rule data as {relative file name -> contents}, e.g. "root/suffixes.txt".
using RuleFiles = std::map<std::string, std::string>;

/// Parses rule files. Throws Error(Format) naming the file and line.
RuleSet parse_rules(const RuleFiles& files);

/// The rule set shipped in data/rules, compiled into the library.
const RuleSet& default_rules();
const RuleFiles& default_rule_files();

/// Loads a rules directory laid out like data/rules. Missing files fall back
/// to the shipped defaults; an optional stopwords.txt is honored.
RuleSet load_rules(const std::filesystem::path& dir);

std::unordered_set<std::string> load_stopwords(const std::filesystem::path& file);

class Stemmer {
 public:
  Stemmer(StemMode mode, std::shared_ptr<const RuleSet> rules);

  StemMode mode() const noexcept { return mode_; }
  const RuleSet& rules() const noexcept { return *rules_; }
  std::shared_ptr<const RuleSet> shared_rules() const noexcept { return rules_; }

  /// The form used as a matrix row key.
  std::string apply(std::string_view token) const;
  StemResult stem(std::string_view token) const;
  bool is_stopword(std::string_view token) const;

 private:
  StemMode mode_;
  std::shared_ptr<const RuleSet> rules_;
};

}  // namespace semspace
