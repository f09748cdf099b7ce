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

#include "semspace/stemming.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <tuple>

#include "default_rules.hpp"
#include "semspace/corpus.hpp"
#include "semspace/error.hpp"
#include "semspace/hash.hpp"
#include "semspace/utf8.hpp"

namespace semspace {

namespace fs = std::filesystem;

std::string_view to_string(StemMode mode) noexcept {
  switch (mode) {
    case StemMode::Root: return "root";
    case StemMode::Light: return "light";
    case StemMode::None: return "none";
  }
  return "none";
}

std::string_view to_string(StemKind kind) noexcept { return kind == StemKind::Root ? "root" : "stem"; }

std::optional<StemMode> parse_stem_mode(std::string_view name) noexcept {
  if (name == "root") return StemMode::Root;
  if (name == "light" || name == "stem") return StemMode::Light;
  if (name == "none") return StemMode::None;
  return std::nullopt;
}

namespace {

using U32 = std::u32string;

enum class Role { Antefix, Prefix, Suffix, Postfix };

struct Piece {
  Role role;
  U32 text;
};

// A candidate strip on one side of the word: (antefix, prefix) at the front
// or (suffix, postfix) at the back.
struct Cluster {
  U32 outer_first;  // antefix or suffix
  U32 second;       // prefix or postfix
  std::size_t size() const { return outer_first.size() + second.size(); }
};

struct Analysis {
  U32 original;
  std::vector<Piece> front;  // surface order
  std::vector<Piece> back;   // surface order
  U32 residual;
  U32 output;
  std::optional<std::string> pattern;
};

struct DecodedTable {
  std::vector<U32> antefixes, prefixes, suffixes, postfixes;
  std::size_t min_stem_len;
};

std::vector<U32> decode_all(const std::vector<std::string>& xs) {
  std::vector<U32> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(utf8::decode_lossy(x));
  return out;
}

DecodedTable decode_table(const AffixTable& t) {
  return {decode_all(t.antefixes), decode_all(t.prefixes), decode_all(t.suffixes), decode_all(t.postfixes),
          t.min_stem_len};
}

bool matches_at(const U32& w, std::size_t pos, const U32& piece) {
  return pos + piece.size() <= w.size() && w.compare(pos, piece.size(), piece) == 0;
}

bool matches_before(const U32& w, std::size_t end, const U32& piece) {
  return piece.size() <= end && w.compare(end - piece.size(), piece.size(), piece) == 0;
}

std::vector<Cluster> front_clusters(const U32& w, const DecodedTable& t) {
  std::vector<Cluster> out;
  auto add_prefixes = [&](const U32& a) {
    out.push_back({a, {}});
    for (const auto& p : t.prefixes) {
      if (matches_at(w, a.size(), p)) out.push_back({a, p});
    }
  };
  add_prefixes({});
  for (const auto& a : t.antefixes) {
    if (matches_at(w, 0, a)) add_prefixes(a);
  }
  return out;
}

std::vector<Cluster> back_clusters(const U32& w, const DecodedTable& t) {
  std::vector<Cluster> out;
  auto add_suffixes = [&](const U32& q) {
    out.push_back({{}, q});
    for (const auto& s : t.suffixes) {
      if (matches_before(w, w.size() - q.size(), s)) out.push_back({s, q});
    }
  };
  add_suffixes({});
  for (const auto& q : t.postfixes) {
    if (matches_before(w, w.size(), q)) add_suffixes(q);
  }
  return out;
}

// Longest first; on equal length the outermost piece (antefix / postfix)
// is the longer one.
void sort_longest_first(std::vector<Cluster>& cs, bool front) {
  std::stable_sort(cs.begin(), cs.end(), [front](const Cluster& a, const Cluster& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return front ? a.outer_first.size() > b.outer_first.size() : a.second.size() > b.second.size();
  });
}

void push_front_pieces(std::vector<Piece>& front, const Cluster& c) {
  if (!c.outer_first.empty()) front.push_back({Role::Antefix, c.outer_first});
  if (!c.second.empty()) front.push_back({Role::Prefix, c.second});
}

// Inner pieces go before the already collected (outer) back pieces.
void push_back_pieces(std::vector<Piece>& back, const Cluster& c) {
  std::vector<Piece> inner;
  if (!c.outer_first.empty()) inner.push_back({Role::Suffix, c.outer_first});
  if (!c.second.empty()) inner.push_back({Role::Postfix, c.second});
  back.insert(back.begin(), inner.begin(), inner.end());
}

Analysis light_analysis(const U32& token, const DecodedTable& t) {
  Analysis a{token, {}, {}, token, token, std::nullopt};
  U32 w = token;
  for (;;) {
    std::size_t stripped = 0;

    auto fronts = front_clusters(w, t);
    sort_longest_first(fronts, true);
    for (const auto& c : fronts) {
      if (c.size() > 0 && w.size() >= c.size() + t.min_stem_len) {
        push_front_pieces(a.front, c);
        w.erase(0, c.size());
        stripped += c.size();
        break;
      }
    }

    auto backs = back_clusters(w, t);
    sort_longest_first(backs, false);
    for (const auto& c : backs) {
      if (c.size() > 0 && w.size() >= c.size() + t.min_stem_len) {
        push_back_pieces(a.back, c);
        w.erase(w.size() - c.size());
        stripped += c.size();
        break;
      }
    }

    if (stripped == 0) break;
  }
  a.residual = w;
  a.output = w;
  return a;
}

bool pattern_fits(const Pattern& p, const U32& templ, const U32& r) {
  if (p.length != r.size()) return false;
  std::size_t next = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (next < p.root_positions.size() && p.root_positions[next] == i) {
      ++next;
      continue;
    }
    if (r[i] != templ[i]) return false;
  }
  return true;
}

Analysis root_analysis(const U32& token, const DecodedTable& t, const PatternTable& patterns) {
  struct Split {
    Cluster front, back;
  };
  std::vector<Split> splits;
  const std::size_t guard = std::max<std::size_t>(t.min_stem_len, 3);
  for (const auto& f : front_clusters(token, t)) {
    for (const auto& b : back_clusters(token, t)) {
      if (token.size() >= f.size() + b.size() + guard) splits.push_back({f, b});
    }
  }
  // Least stripping first; prefer stripping at the front, then the outer
  // pieces (antefix, postfix).
  std::stable_sort(splits.begin(), splits.end(), [](const Split& x, const Split& y) {
    const auto key = [](const Split& s) {
      return std::make_tuple(s.front.size() + s.back.size(), ~s.front.size(), ~s.front.outer_first.size(),
                             ~s.back.second.size());
    };
    return key(x) < key(y);
  });

  std::vector<U32> templates;
  templates.reserve(patterns.patterns.size());
  for (const auto& p : patterns.patterns) templates.push_back(utf8::decode_lossy(p.templ));

  for (std::size_t arity : {std::size_t{3}, std::size_t{4}}) {
    for (const auto& s : splits) {
      const U32 residual = token.substr(s.front.size(), token.size() - s.front.size() - s.back.size());
      for (std::size_t pi = 0; pi < patterns.patterns.size(); ++pi) {
        const Pattern& p = patterns.patterns[pi];
        if (p.root_positions.size() != arity || !pattern_fits(p, templates[pi], residual)) continue;
        Analysis a{token, {}, {}, residual, {}, p.templ};
        push_front_pieces(a.front, s.front);
        push_back_pieces(a.back, s.back);
        for (std::size_t pos : p.root_positions) a.output.push_back(residual[pos]);
        return a;
      }
    }
  }
  return Analysis{token, {}, {}, token, token, std::nullopt};
}

std::optional<std::string> join(const std::vector<Piece>& pieces, std::size_t from, std::size_t to) {
  U32 s;
  for (std::size_t i = from; i < to; ++i) s += pieces[i].text;
  if (s.empty()) return std::nullopt;
  return utf8::encode(s);
}

// Collapses the ordered pieces into the four positional slots while keeping
// their concatenation equal to the surface string.
StrippedParts to_parts(const Analysis& a) {
  StrippedParts parts;
  std::size_t split = 0;
  for (std::size_t i = 0; i < a.front.size(); ++i) {
    if (a.front[i].role == Role::Antefix) split = i + 1;
  }
  parts.antefix = join(a.front, 0, split);
  parts.prefix = join(a.front, split, a.front.size());

  split = a.back.size();
  for (std::size_t i = 0; i < a.back.size(); ++i) {
    if (a.back[i].role == Role::Postfix) {
      split = i;
      break;
    }
  }
  parts.suffix = join(a.back, 0, split);
  parts.postfix = join(a.back, split, a.back.size());
  return parts;
}

StemResult to_result(const Analysis& a, StemKind kind) {
  StemResult r;
  r.original = utf8::encode(a.original);
  r.output = utf8::encode(a.output);
  r.kind = kind;
  r.stripped = to_parts(a);
  r.residual = utf8::encode(a.residual);
  r.pattern = a.pattern;
  return r;
}

}  // namespace

StemResult light_stem(std::string_view token, const AffixTable& table) {
  return to_result(light_analysis(utf8::decode_lossy(token), decode_table(table)), StemKind::Stem);
}

StemResult extract_root(std::string_view token, const AffixTable& table, const PatternTable& patterns) {
  return to_result(root_analysis(utf8::decode_lossy(token), decode_table(table), patterns), StemKind::Root);
}

StemResult root_stem(std::string_view token, const RuleSet& rules) {
  const Analysis light = light_analysis(utf8::decode_lossy(token), decode_table(rules.light));
  Analysis root = root_analysis(light.output, decode_table(rules.root), rules.patterns);
  Analysis merged{light.original, light.front, root.back, root.residual, root.output, root.pattern};
  merged.front.insert(merged.front.end(), root.front.begin(), root.front.end());
  merged.back.insert(merged.back.end(), light.back.begin(), light.back.end());
  return to_result(merged, StemKind::Root);
}

Decomposition decompose(std::string_view token, const RuleSet& rules) {
  StemResult r = root_stem(token, rules);
  return {std::move(r.stripped.antefix), std::move(r.stripped.prefix), r.pattern ? r.output : r.residual,
          std::move(r.stripped.suffix), std::move(r.stripped.postfix)};
}

// ---------------------------------------------------------------------------
// Rule files

namespace {

constexpr const char* kTableDirs[] = {"light", "root"};
constexpr const char* kListNames[] = {"antefixes", "prefixes", "suffixes", "postfixes"};

std::string_view trim(std::string_view s) {
  const auto is_ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_ws(s.back())) s.remove_suffix(1);
  return s;
}

// Calls fn(line_number, content) for every non-blank, non-comment line.
template <typename Fn>
void for_each_entry(const std::string& text, Fn&& fn) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    fn(lineno, s);
  }
}

// True when `raw` holds only Arabic letters, diacritics and tatweel, i.e.
// normalization drops nothing but marks.
bool arabic_word(std::string_view raw) {
  const auto cps = utf8::decode(raw);
  if (!cps || cps->empty()) return false;
  return std::all_of(cps->begin(), cps->end(), [](char32_t cp) {
    return is_arabic_letter(cp) || (cp >= 0x064B && cp <= 0x0652) || cp == 0x0640;
  });
}

[[noreturn]] void format_error(const std::string& file, std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::Format, file + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> parse_list(const std::string& file, const std::string& text) {
  std::vector<std::string> out;
  for_each_entry(text, [&](std::size_t lineno, std::string_view s) {
    std::string entry = normalize(s);
    if (entry.empty() || !arabic_word(s)) {
      format_error(file, lineno, "entry is not a run of Arabic letters: " + std::string(s));
    }
    if (std::find(out.begin(), out.end(), entry) == out.end()) out.push_back(std::move(entry));
  });
  std::stable_sort(out.begin(), out.end(),
                   [](const std::string& a, const std::string& b) { return utf8::length(a) > utf8::length(b); });
  return out;
}

std::size_t parse_table_conf(const std::string& file, const std::string& text) {
  std::size_t min_len = 2;
  for_each_entry(text, [&](std::size_t lineno, std::string_view s) {
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) format_error(file, lineno, "expected key = value");
    const auto key = trim(s.substr(0, eq));
    const auto value = trim(s.substr(eq + 1));
    if (key != "min_stem_len") format_error(file, lineno, "unknown key: " + std::string(key));
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size() || v < 2) {
      format_error(file, lineno, "min_stem_len must be an integer >= 2");
    }
    min_len = v;
  });
  return min_len;
}

PatternTable parse_patterns(const std::string& file, const std::string& text) {
  PatternTable table;
  for_each_entry(text, [&](std::size_t lineno, std::string_view s) {
    const auto tab = s.find('\t');
    if (tab == std::string_view::npos) format_error(file, lineno, "expected template<TAB>positions");
    Pattern p;
    const std::string_view raw = trim(s.substr(0, tab));
    p.templ = normalize(raw);
    p.length = utf8::length(p.templ);
    if (p.templ.empty() || !arabic_word(raw)) {
      format_error(file, lineno, "template is not a run of Arabic letters");
    }
    std::string_view rest = trim(s.substr(tab + 1));
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto field = trim(rest.substr(0, comma));
      std::size_t pos = 0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), pos);
      if (ec != std::errc{} || ptr != field.data() + field.size()) format_error(file, lineno, "bad root position");
      if (pos >= p.length) format_error(file, lineno, "root position out of range");
      p.root_positions.push_back(pos);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    std::sort(p.root_positions.begin(), p.root_positions.end());
    if (std::adjacent_find(p.root_positions.begin(), p.root_positions.end()) != p.root_positions.end()) {
      format_error(file, lineno, "duplicate root position");
    }
    if (p.root_positions.size() != 3 && p.root_positions.size() != 4) {
      format_error(file, lineno, "a template selects 3 or 4 root letters");
    }
    table.patterns.push_back(std::move(p));
  });
  // Group by length; file order within a length.
  std::stable_sort(table.patterns.begin(), table.patterns.end(),
                   [](const Pattern& a, const Pattern& b) { return a.length < b.length; });
  return table;
}

std::unordered_set<std::string> parse_stopwords(const std::string& file, const std::string& text) {
  std::unordered_set<std::string> out;
  for_each_entry(text, [&](std::size_t lineno, std::string_view s) {
    std::string w = normalize(s);
    if (w.empty()) format_error(file, lineno, "stopword has no Arabic letters");
    out.insert(std::move(w));
  });
  return out;
}

std::optional<std::string> read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

void hash_list(Fnv1a& h, const std::vector<std::string>& xs) {
  h.update_u64(xs.size());
  for (const auto& x : xs) h.update_u64(x.size()).update(x);
}

}  // namespace

std::uint64_t RuleSet::fingerprint() const {
  Fnv1a h;
  for (const AffixTable* t : {&light, &root}) {
    h.update_u64(t->min_stem_len);
    hash_list(h, t->antefixes);
    hash_list(h, t->prefixes);
    hash_list(h, t->suffixes);
    hash_list(h, t->postfixes);
  }
  h.update_u64(patterns.patterns.size());
  for (const auto& p : patterns.patterns) {
    h.update_u64(p.templ.size()).update(p.templ);
    h.update_u64(p.root_positions.size());
    for (auto pos : p.root_positions) h.update_u64(pos);
  }
  std::vector<std::string> stops(stopwords.begin(), stopwords.end());
  std::sort(stops.begin(), stops.end());
  hash_list(h, stops);
  return h.digest();
}

RuleSet parse_rules(const RuleFiles& files) {
  auto get = [&](const std::string& name) -> const std::string& {
    static const std::string empty;
    const auto it = files.find(name);
    return it == files.end() ? empty : it->second;
  };
  RuleSet rules;
  for (const char* dir : kTableDirs) {
    AffixTable& t = std::string_view(dir) == "light" ? rules.light : rules.root;
    std::vector<std::string>* lists[] = {&t.antefixes, &t.prefixes, &t.suffixes, &t.postfixes};
    for (std::size_t i = 0; i < 4; ++i) {
      const std::string name = std::string(dir) + "/" + kListNames[i] + ".txt";
      *lists[i] = parse_list(name, get(name));
    }
    const std::string conf = std::string(dir) + "/table.conf";
    t.min_stem_len = parse_table_conf(conf, get(conf));
  }
  rules.patterns = parse_patterns("patterns.txt", get("patterns.txt"));
  rules.stopwords = parse_stopwords("stopwords.txt", get("stopwords.txt"));
  return rules;
}

const RuleFiles& default_rule_files() {
  static const RuleFiles files = [] {
    RuleFiles f;
    for (std::size_t i = 0; i < detail::kEmbeddedRuleFileCount; ++i) {
      f.emplace(detail::kEmbeddedRuleFiles[i].name, detail::kEmbeddedRuleFiles[i].contents);
    }
    return f;
  }();
  return files;
}

const RuleSet& default_rules() {
  static const RuleSet rules = parse_rules(default_rule_files());
  return rules;
}

RuleSet load_rules(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error(ErrorCode::Io, "rules directory not found: " + dir.string());
  RuleFiles files = default_rule_files();
  for (auto& [name, contents] : files) {
    if (auto text = read_text(dir / name)) contents = std::move(*text);
  }
  if (auto stops = read_text(dir / "stopwords.txt")) files["stopwords.txt"] = std::move(*stops);
  return parse_rules(files);
}

std::unordered_set<std::string> load_stopwords(const fs::path& file) {
  auto text = read_text(file);
  if (!text) throw Error(ErrorCode::Io, "cannot read stopword file: " + file.string());
  return parse_stopwords(file.filename().string(), *text);
}

// ---------------------------------------------------------------------------

Stemmer::Stemmer(StemMode mode, std::shared_ptr<const RuleSet> rules) : mode_(mode), rules_(std::move(rules)) {
  if (!rules_) rules_ = std::make_shared<const RuleSet>(default_rules());
}

std::string Stemmer::apply(std::string_view token) const {
  switch (mode_) {
    case StemMode::Root: return root_stem(token, *rules_).output;
    case StemMode::Light: return light_stem(token, rules_->light).output;
    case StemMode::None: break;
  }
  return std::string(token);
}

StemResult Stemmer::stem(std::string_view token) const {
  switch (mode_) {
    case StemMode::Root: return root_stem(token, *rules_);
    case StemMode::Light: return light_stem(token, rules_->light);
    case StemMode::None: break;
  }
  StemResult r;
  r.original = r.output = r.residual = std::string(token);
  return r;
}

bool Stemmer::is_stopword(std::string_view token) const {
  return rules_->stopwords.count(std::string(token)) > 0;
}

}  // namespace semspace
