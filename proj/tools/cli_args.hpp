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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semspace/semspace.h"

namespace semspace::cli {

enum class Command { Stats, Stem, Build, Sim, Report };

struct RunConfig {
  Command command = Command::Stats;
  semspace_stem_mode mode = SEMSPACE_MODE_LIGHT;
  std::optional<std::size_t> k;
  semspace_scaling scaling = SEMSPACE_SCALING_U;
  std::optional<std::string> rules_dir;
  std::optional<std::string> stopwords;
  bool normalize = false;
  semspace_format format = SEMSPACE_FORMAT_TSV;
  std::vector<semspace_stem_mode> modes = {SEMSPACE_MODE_LIGHT, SEMSPACE_MODE_ROOT};
  std::optional<std::string> corpus;
  std::vector<std::string> pairs;
  std::optional<std::string> output;
  std::vector<std::string> paths;  // positional inputs
};

/// Result of parsing a command line. When `config` is empty the caller
/// prints `text` (to stdout for exit code 0, stderr otherwise) and exits.
struct ParseOutcome {
  std::optional<RunConfig> config;
  int exit_code = 0;
  std::string text;
};

/// Flat `key = value` settings; '#' starts a comment line.
using ConfigValues = std::map<std::string, std::string>;

/// Throws semspace::cli::UsageError on malformed lines.
ConfigValues parse_config(const std::string& text, const std::string& source);

struct UsageError {
  std::string message;
};

/// Parses argv. Precedence: flags, then the --config file, then
/// `env_rules` (SEMSPACE_RULES) for the rules directory, then defaults.
ParseOutcome parse_args(int argc, const char* const* argv, std::optional<std::string> env_rules = std::nullopt);

std::optional<semspace_stem_mode> parse_mode(const std::string& s);
std::optional<semspace_scaling> parse_scaling(const std::string& s);
std::optional<semspace_format> parse_format(const std::string& s);

}  // namespace semspace::cli
