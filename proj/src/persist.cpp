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

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include "semspace/hash.hpp"
#include "semspace/lsa.hpp"
#include "semspace/utf8.hpp"

namespace semspace {

namespace {

constexpr std::string_view kMagic = "SEMSPACE";

class Writer {
 public:
  void bytes(std::string_view s) { out_.append(s); }
  void u8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }

  std::string take() && { return std::move(out_); }
  const std::string& str() const { return out_; }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}

  std::string_view bytes(std::size_t n) {
    need(n);
    auto s = in_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  std::uint8_t u8() { return static_cast<std::uint8_t>(bytes(1)[0]); }
  std::uint32_t u32() {
    auto s = bytes(4);
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | static_cast<unsigned char>(s[i]);
    return v;
  }
  std::uint64_t u64() {
    auto s = bytes(8);
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | static_cast<unsigned char>(s[i]);
    return v;
  }
  double f64() { return std::bit_cast<double>(u64()); }

  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return in_.size() - pos_; }

 private:
  void need(std::size_t n) const {
    if (n > in_.size() - pos_) throw SpaceFileError(SpaceFileError::Kind::Truncated, "space file is truncated");
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

[[noreturn]] void malformed(const std::string& what) {
  throw SpaceFileError(SpaceFileError::Kind::Malformed, "malformed space file: " + what);
}

}  // namespace

std::string serialize_space(const SemanticSpace& space) {
  Writer w;
  w.bytes(kMagic);
  w.u32(kSpaceFormatVersion);
  w.u8(static_cast<std::uint8_t>(space.provenance.stem_mode));
  w.u64(space.provenance.rules_fingerprint);
  w.u64(space.provenance.corpus_fingerprint);
  w.u64(space.provenance.fingerprint());
  w.u64(space.vocabulary.size());
  w.u64(space.columns);
  w.u64(space.k);
  w.u8(static_cast<std::uint8_t>(space.scaling));
  for (const auto& tok : space.vocabulary.tokens()) {
    w.u32(static_cast<std::uint32_t>(tok.size()));
    w.bytes(tok);
  }
  for (double s : space.sigma) w.f64(s);
  for (double x : space.vectors.data()) w.f64(x);
  const std::uint64_t checksum = fnv1a64(w.str());
  w.u64(checksum);
  return std::move(w).take();
}

SemanticSpace deserialize_space(std::string_view bytes) {
  Reader r(bytes);
  if (bytes.size() < kMagic.size() || r.bytes(kMagic.size()) != kMagic) {
    throw SpaceFileError(SpaceFileError::Kind::BadMagic, "not a semspace file");
  }
  const std::uint32_t version = r.u32();
  if (version != kSpaceFormatVersion) {
    throw SpaceFileError(SpaceFileError::Kind::Version, "unsupported space format version " +
                                                            std::to_string(version) + " (expected " +
                                                            std::to_string(kSpaceFormatVersion) + ")");
  }

  SemanticSpace s;
  const std::uint8_t mode = r.u8();
  if (mode > static_cast<std::uint8_t>(StemMode::None)) malformed("unknown stem mode");
  s.provenance.stem_mode = static_cast<StemMode>(mode);
  s.provenance.rules_fingerprint = r.u64();
  s.provenance.corpus_fingerprint = r.u64();
  const std::uint64_t combined = r.u64();
  const std::uint64_t m = r.u64();
  s.columns = r.u64();
  s.k = r.u64();
  const std::uint8_t scaling = r.u8();
  if (scaling > static_cast<std::uint8_t>(Scaling::USigma)) malformed("unknown scaling");
  s.scaling = static_cast<Scaling>(scaling);

  // Every row costs at least 4 bytes of vocabulary and 8k bytes of vector
  // data; reject sizes that cannot fit before allocating.
  if (s.k == 0 || m == 0 || s.k > s.columns || s.k > m) malformed("bad dimensions");
  if (m > r.remaining() / 4 || s.k > r.remaining() / 8 || m * s.k > r.remaining() / 8) {
    throw SpaceFileError(SpaceFileError::Kind::Truncated, "space file is truncated");
  }

  std::vector<std::string_view> tokens(m);
  for (auto& tok : tokens) {
    const std::uint32_t len = r.u32();
    tok = r.bytes(len);
  }
  s.sigma.resize(s.k);
  for (auto& x : s.sigma) x = r.f64();
  s.vectors = DenseMatrix(m, s.k);
  for (auto& x : s.vectors.data()) x = r.f64();

  const std::size_t body_end = r.pos();
  const std::uint64_t stored = r.u64();
  if (r.remaining() != 0) malformed("trailing bytes after checksum");
  if (fnv1a64(bytes.substr(0, body_end)) != stored) {
    throw SpaceFileError(SpaceFileError::Kind::Checksum, "space file checksum mismatch");
  }
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].empty() || !utf8::is_valid(tokens[i])) malformed("vocabulary entry " + std::to_string(i));
    if (s.vocabulary.add(tokens[i]) != i) malformed("duplicate vocabulary entry " + std::to_string(i));
  }
  if (combined != s.provenance.fingerprint()) malformed("provenance fingerprint does not match its parts");
  return s;
}

void save_space(const SemanticSpace& space, const std::filesystem::path& file) {
  const std::string bytes = serialize_space(space);
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + file.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::Io, "write failed: " + file.string());
}

SemanticSpace load_space(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return deserialize_space(ss.str());
}

}  // namespace semspace
