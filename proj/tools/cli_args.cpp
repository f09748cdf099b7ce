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

#include "cli_args.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace semspace::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void usage(std::string message) { throw UsageError{std::move(message)}; }

std::size_t parse_k(const std::string& s, const std::string& where) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v < 1) usage(where + ": k must be a positive integer");
  return v;
}

bool parse_bool(const std::string& s, const std::string& where) {
  if (s == "true" || s == "yes" || s == "1") return true;
  if (s == "false" || s == "no" || s == "0") return false;
  usage(where + ": expected true or false, got '" + s + "'");
}

std::vector<semspace_stem_mode> parse_modes(const std::string& s, const std::string& where) {
  std::vector<semspace_stem_mode> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto m = parse_mode(trim(item));
    if (!m) usage(where + ": unknown stemmer '" + trim(item) + "'");
    out.push_back(*m);
  }
  if (out.empty()) usage(where + ": no stemmers given");
  return out;
}

// Applies one setting from the config file or a flag.
void apply(RunConfig& cfg, const std::string& key, const std::string& value, const std::string& where) {
  if (key == "mode") {
    const auto m = parse_mode(value);
    if (!m) usage(where + ": unknown mode '" + value + "'");
    cfg.mode = *m;
  } else if (key == "k") {
    cfg.k = parse_k(value, where);
  } else if (key == "scaling") {
    const auto s = parse_scaling(value);
    if (!s) usage(where + ": unknown scaling '" + value + "'");
    cfg.scaling = *s;
  } else if (key == "rules") {
    cfg.rules_dir = value;
  } else if (key == "stopwords") {
    cfg.stopwords = value;
  } else if (key == "normalize") {
    cfg.normalize = parse_bool(value, where);
  } else if (key == "format") {
    const auto f = parse_format(value);
    if (!f) usage(where + ": unknown format '" + value + "'");
    cfg.format = *f;
  } else if (key == "modes") {
    cfg.modes = parse_modes(value, where);
  } else if (key == "corpus") {
    cfg.corpus = value;
  } else {
    usage(where + ": unknown key '" + key + "'");
  }
}

std::string read_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) usage("cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::optional<semspace_stem_mode> parse_mode(const std::string& s) {
  if (s == "root") return SEMSPACE_MODE_ROOT;
  if (s == "light" || s == "stem") return SEMSPACE_MODE_LIGHT;
  if (s == "none") return SEMSPACE_MODE_NONE;
  return std::nullopt;
}

std::optional<semspace_scaling> parse_scaling(const std::string& s) {
  if (s == "u") return SEMSPACE_SCALING_U;
  if (s == "usigma") return SEMSPACE_SCALING_USIGMA;
  return std::nullopt;
}

std::optional<semspace_format> parse_format(const std::string& s) {
  if (s == "tsv") return SEMSPACE_FORMAT_TSV;
  if (s == "markdown" || s == "md") return SEMSPACE_FORMAT_MARKDOWN;
  return std::nullopt;
}

ConfigValues parse_config(const std::string& text, const std::string& source) {
  ConfigValues values;
  std::istringstream in(text);
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    const std::string where = source + ":" + std::to_string(lineno);
    if (eq == std::string::npos) usage(where + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) usage(where + ": empty key");
    values[key] = trim(line.substr(eq + 1));
  }
  return values;
}

ParseOutcome parse_args(int argc, const char* const* argv, std::optional<std::string> env_rules) {
  CLI::App app{"Word similarity in LSA spaces built over stemmed Arabic text", "semspace"};
  app.require_subcommand(1);
  app.set_version_flag("--version", semspace_version());

  // Raw flag values; converted after parsing so that config values can sit
  // underneath them.
  std::string config_path, mode, scaling, rules, stopwords, format, modes, corpus, output;
  std::size_t k = 0;
  bool normalize = false;
  std::vector<std::string> pairs, paths;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Settings file of key = value lines");
    sub->add_option("--rules", rules, "Rules directory (default: $SEMSPACE_RULES or the built-in rules)");
    sub->add_option("--stopwords", stopwords, "Stopword file, one word per line");
    sub->add_option("-o,--output", output, "Write data to this file instead of stdout");
  };

  auto* stats = app.add_subcommand("stats", "Print corpus characteristics as key<TAB>value rows");
  common(stats);
  stats->add_option("corpus", paths, "Corpus directory")->required()->expected(1);

  auto* stem = app.add_subcommand("stem", "Stem words: original<TAB>output<TAB>kind<TAB>stripped parts");
  common(stem);
  stem->add_option("--mode", mode, "root, light or none");
  stem->add_option("words", paths, "Words to stem")->required();

  auto* build = app.add_subcommand("build", "Build a semantic space and save it");
  common(build);
  build->add_option("--mode", mode, "root, light or none");
  build->add_option("-k", k, "Retained dimensions (default min(300, n))");
  build->add_option("--scaling", scaling, "u or usigma");
  build->add_option("corpus", paths, "Corpus directory")->required()->expected(1);

  auto* sim = app.add_subcommand("sim", "Compare two words in a saved space");
  common(sim);
  sim->add_flag("--normalize", normalize, "Scale word vectors to unit length first");
  sim->add_option("space", paths, "Space file, then two words")->required()->expected(3);

  auto* report = app.add_subcommand("report", "Score word pairs under several stemmers");
  common(report);
  report->add_option("--corpus", corpus, "Corpus directory");
  report->add_option("--pairs", pairs, "Pair file (repeatable)");
  report->add_option("--modes", modes, "Comma-separated stemmers (default light,root)");
  report->add_option("-k", k, "Retained dimensions (default min(300, n))");
  report->add_option("--scaling", scaling, "u or usigma");
  report->add_option("--format", format, "tsv or markdown");
  report->add_flag("--normalize", normalize, "Scale word vectors to unit length first");

  ParseOutcome outcome;
  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    outcome.exit_code = app.exit(e, out, err) == 0 ? 0 : 1;
    outcome.text = outcome.exit_code == 0 ? out.str() : err.str();
    return outcome;
  }

  CLI::App* sub = app.get_subcommands().front();
  RunConfig cfg;
  const std::string name = sub->get_name();
  cfg.command = name == "stats"   ? Command::Stats
                : name == "stem"  ? Command::Stem
                : name == "build" ? Command::Build
                : name == "sim"   ? Command::Sim
                                  : Command::Report;

  auto given = [&](const char* flag) { return sub->get_option_no_throw(flag) != nullptr && sub->count(flag) > 0; };

  try {
    if (env_rules && !env_rules->empty()) cfg.rules_dir = env_rules;
    if (given("--config")) {
      for (const auto& [key, value] : parse_config(read_config_file(config_path), config_path)) {
        apply(cfg, key, value, config_path);
      }
    }
    if (given("--mode")) apply(cfg, "mode", mode, "--mode");
    if (given("-k")) apply(cfg, "k", std::to_string(k), "-k");
    if (given("--scaling")) apply(cfg, "scaling", scaling, "--scaling");
    if (given("--rules")) apply(cfg, "rules", rules, "--rules");
    if (given("--stopwords")) apply(cfg, "stopwords", stopwords, "--stopwords");
    if (given("--format")) apply(cfg, "format", format, "--format");
    if (given("--modes")) apply(cfg, "modes", modes, "--modes");
    if (given("--corpus")) apply(cfg, "corpus", corpus, "--corpus");
    if (given("--normalize")) cfg.normalize = normalize;
    if (given("--output")) cfg.output = output;
    cfg.pairs = pairs;
    cfg.paths = paths;

    if (cfg.command == Command::Build && !cfg.output) usage("build: -o FILE is required");
    if (cfg.command == Command::Report) {
      if (!cfg.corpus) usage("report: --corpus DIR is required");
      if (cfg.pairs.empty()) usage("report: at least one --pairs FILE is required");
    }
  } catch (const UsageError& e) {
    outcome.exit_code = 1;
    outcome.text = "semspace: " + e.message + "\nRun with --help for usage.\n";
    return outcome;
  }
  outcome.config = std::move(cfg);
  return outcome;
}

}  // namespace semspace::cli
