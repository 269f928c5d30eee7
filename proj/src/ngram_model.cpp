/*
 * Copyright 2026 The Peyv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "peyv/ngram_model.hpp"

#include <algorithm>
#include <filesystem>

#include "peyv/errors.hpp"
#include "peyv/textfile.hpp"
#include "peyv/unicode.hpp"

namespace peyv {

namespace {

bool is_delimiter(char32_t c) {
  // Whitespace.
  if (c == U' ' || (c >= U'\t' && c <= U'\r')) return true;
  if (c == U' ' || c == U' ' || (c >= U' ' && c <= U' ')) return true;
  if (c == U' ' || c == U' ' || c == U' ' || c == U' ' || c == U'　')
    return true;
  // ASCII punctuation.
  if (c < 0x80) {
    return (c >= U'!' && c <= U'/') || (c >= U':' && c <= U'@') || (c >= U'[' && c <= U'`') ||
           (c >= U'{' && c <= U'~');
  }
  // Arabic-script and general punctuation seen in news text.
  switch (c) {
    case U'،': case U'؛': case U'؟': case U'٪': case U'٫':
    case U'٬': case U'۔': case U'«': case U'»': case U'‐':
    case U'‑': case U'‒': case U'–': case U'—': case U'―':
    case U'‘': case U'’': case U'“': case U'”': case U'•':
    case U'…': case U'·':
      return true;
    default:
      return false;
  }
}

bool is_digit(char32_t c) {
  return (c >= U'0' && c <= U'9') || (c >= U'٠' && c <= U'٩') ||
         (c >= U'۰' && c <= U'۹');
}

bool digits_only(const std::u32string& token) {
  for (char32_t c : token)
    if (!is_digit(c)) return false;
  return !token.empty();
}

constexpr char kMagic[4] = {'R', 'N', 'M', '1'};
constexpr std::uint32_t kVersion = 1;

struct ByteWriter {
  std::string buf;

  void u8(std::uint8_t v) { buf.push_back(static_cast<char>(v)); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
  void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }
  void str(const std::string& s) {
    u32(static_cast<std::uint32_t>(s.size()));
    buf += s;
  }
};

struct ByteReader {
  const std::string& buf;
  std::size_t pos = 0;

  void need(std::size_t count) const {
    if (pos + count > buf.size()) throw CorruptModelError("model file ends unexpectedly");
  }
  std::uint8_t u8() {
    need(1);
    return static_cast<std::uint8_t>(buf[pos++]);
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(buf[pos++])) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[pos++])) << (8 * i);
    return v;
  }
  std::int64_t i64() { return static_cast<std::int64_t>(u64()); }
  std::string str() {
    const std::uint32_t len = u32();
    need(len);
    std::string s = buf.substr(pos, len);
    pos += len;
    return s;
  }
};

} // namespace

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

const char* position_name(PositionClass position) {
  switch (position) {
    case PositionClass::beginning: return "beginning";
    case PositionClass::middle: return "middle";
    case PositionClass::end: return "end";
  }
  return "middle";
}

std::vector<GramExtraction> extract_grams(const std::u32string& word, std::size_t n) {
  std::vector<GramExtraction> out;
  if (word.empty() || n == 0) return out;
  if (word.size() <= n) {
    out.push_back({word, PositionClass::beginning, 0});
    return out;
  }
  for (std::size_t offset = 0; offset + n <= word.size(); ++offset) {
    GramExtraction g;
    g.gram = word.substr(offset, n);
    g.offset = offset;
    if (offset == 0) g.position = PositionClass::beginning;
    else if (offset == word.size() - n) g.position = PositionClass::end;
    else g.position = PositionClass::middle;
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<std::u32string> tokenize(const std::u32string& text) {
  std::vector<std::u32string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_delimiter(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !is_delimiter(text[i])) ++i;
    if (i == start) continue;
    std::u32string token = text.substr(start, i - start);
    if (!digits_only(token)) tokens.push_back(std::move(token));
  }
  return tokens;
}

void NGramIndex::Params::validate() const {
  if (n_values.empty()) throw ValidationError("no gram sizes configured");
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    if (n_values[i] == 0) throw ValidationError("gram size must be at least 1");
    if (i > 0 && n_values[i] <= n_values[i - 1])
      throw ValidationError("gram sizes must be strictly increasing");
  }
  if (min_word_freq < 0) throw ValidationError("min_word_freq must be non-negative");
}

std::int64_t NGramIndex::gram_frequency(const std::u32string& gram, PositionClass position,
                                        std::size_t n) const {
  const auto& entries = bucket(n, position);
  auto it = std::lower_bound(entries.begin(), entries.end(), gram,
                             [](const BucketEntry& e, const std::u32string& g) { return e.gram < g; });
  if (it == entries.end() || it->gram != gram) return 0;
  return it->frequency;
}

std::int64_t NGramIndex::word_frequency(const std::u32string& word) const {
  auto it = words_.find(word);
  return it == words_.end() ? 0 : it->second;
}

const std::vector<NGramIndex::BucketEntry>& NGramIndex::bucket(std::size_t n,
                                                               PositionClass position) const {
  static const std::vector<BucketEntry> empty;
  auto it = buckets_.find({n, position});
  return it == buckets_.end() ? empty : it->second;
}

NGramIndex::Stats NGramIndex::stats() const {
  Stats s;
  s.distinct_words = static_cast<std::int64_t>(words_.size());
  for (const auto& [word, freq] : words_) {
    s.total_tokens += freq;
    if (freq < params_.min_word_freq) ++s.dropped_words;
  }
  for (std::size_t n : params_.n_values) {
    std::int64_t count = 0;
    for (PositionClass pos : {PositionClass::beginning, PositionClass::middle, PositionClass::end})
      count += static_cast<std::int64_t>(bucket(n, pos).size());
    s.grams_per_n.emplace_back(n, count);
  }
  return s;
}

bool operator==(const NGramIndex& a, const NGramIndex& b) {
  return a.params_ == b.params_ && a.words_ == b.words_ && a.buckets_ == b.buckets_ &&
         a.checksums_ == b.checksums_;
}

void NGramIndex::save(const std::string& path) const {
  ByteWriter w;
  w.buf.append(kMagic, sizeof kMagic);
  w.u32(kVersion);
  w.u32(static_cast<std::uint32_t>(params_.n_values.size()));
  for (std::size_t n : params_.n_values) w.u64(n);
  w.i64(params_.min_word_freq);
  w.u32(static_cast<std::uint32_t>(checksums_.size()));
  for (const auto& [name, value] : checksums_) {
    w.str(name);
    w.u64(value);
  }
  w.u64(words_.size());
  for (const auto& [word, freq] : words_) {
    w.str(utf8_encode(word));
    w.i64(freq);
  }
  w.u32(static_cast<std::uint32_t>(buckets_.size()));
  for (const auto& [key, entries] : buckets_) {
    w.u64(key.first);
    w.u8(static_cast<std::uint8_t>(key.second));
    w.u64(entries.size());
    for (const BucketEntry& e : entries) {
      w.str(utf8_encode(e.gram));
      w.i64(e.frequency);
    }
  }
  w.u64(fnv1a64(w.buf));
  write_file(path, w.buf);
}

NGramIndex NGramIndex::load(const std::string& path) {
  const std::string data = read_file(path);
  if (data.size() < sizeof kMagic + 4) throw CorruptModelError(path + ": too short to be a model file");
  if (data.compare(0, sizeof kMagic, kMagic, sizeof kMagic) != 0)
    throw VersionError(path + ": not a model file (bad magic)");
  ByteReader header{data, sizeof kMagic};
  const std::uint32_t version = header.u32();
  if (version != kVersion)
    throw VersionError(path + ": unsupported model version " + std::to_string(version));
  if (data.size() < sizeof kMagic + 4 + 8) throw CorruptModelError(path + ": model file truncated");
  const std::string body = data.substr(0, data.size() - 8);
  ByteReader tail{data, data.size() - 8};
  if (tail.u64() != fnv1a64(body)) throw CorruptModelError(path + ": model checksum mismatch");

  NGramIndex index;
  ByteReader r{body, sizeof kMagic + 4};
  try {
    index.params_.n_values.clear();
    const std::uint32_t n_count = r.u32();
    for (std::uint32_t i = 0; i < n_count; ++i)
      index.params_.n_values.push_back(static_cast<std::size_t>(r.u64()));
    index.params_.min_word_freq = r.i64();
    const std::uint32_t checksum_count = r.u32();
    for (std::uint32_t i = 0; i < checksum_count; ++i) {
      const std::string name = r.str();
      const std::uint64_t value = r.u64();
      index.checksums_[name] = value;
    }
    const std::uint64_t word_count = r.u64();
    for (std::uint64_t i = 0; i < word_count; ++i) {
      const std::u32string word = utf8_decode(r.str());
      const std::int64_t freq = r.i64();
      index.words_[word] = freq;
    }
    const std::uint32_t bucket_count = r.u32();
    for (std::uint32_t i = 0; i < bucket_count; ++i) {
      const std::size_t n = static_cast<std::size_t>(r.u64());
      const std::uint8_t pos_raw = r.u8();
      if (pos_raw > 2) throw CorruptModelError(path + ": bad position class");
      auto& entries = index.buckets_[{n, static_cast<PositionClass>(pos_raw)}];
      const std::uint64_t entry_count = r.u64();
      entries.reserve(entry_count);
      for (std::uint64_t j = 0; j < entry_count; ++j) {
        BucketEntry e;
        e.gram = utf8_decode(r.str());
        e.frequency = r.i64();
        entries.push_back(std::move(e));
      }
      if (!std::is_sorted(entries.begin(), entries.end(),
                          [](const BucketEntry& a, const BucketEntry& b) { return a.gram < b.gram; }))
        throw CorruptModelError(path + ": bucket entries out of order");
    }
    if (r.pos != body.size()) throw CorruptModelError(path + ": trailing bytes in model file");
  } catch (const ParseError& e) {
    throw CorruptModelError(path + ": " + e.what());
  }
  index.params_.validate();
  return index;
}

void NGramIndex::export_tsv(const std::string& path) const {
  std::string out = "# gram\tposition\tn\tfrequency\n";
  for (const auto& [key, entries] : buckets_) {
    for (const BucketEntry& e : entries) {
      out += utf8_encode(e.gram);
      out += '\t';
      out += position_name(key.second);
      out += '\t';
      out += std::to_string(key.first);
      out += '\t';
      out += std::to_string(e.frequency);
      out += '\n';
    }
  }
  write_file(path, out);
}

IndexBuilder::IndexBuilder(NGramIndex::Params params, const NormalizationTable& table)
    : params_(std::move(params)), table_(table) {
  params_.validate();
}

void IndexBuilder::add_text(const std::string& utf8_text) {
  for (const std::u32string& raw : tokenize(utf8_decode(utf8_text))) {
    const std::u32string word = table_.apply(raw);
    if (word.empty() || digits_only(word)) continue;
    ++words_[word];
  }
}

void IndexBuilder::add_file(const std::string& path) {
  const std::string bytes = read_file(path);
  record_source(std::filesystem::path(path).filename().string(), bytes);
  add_text(bytes);
}

void IndexBuilder::add_corpus(const std::string& path) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::is_directory(path, ec)) {
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(path, ec)) {
      if (entry.is_regular_file() && entry.path().extension() == ".txt")
        files.push_back(entry.path().string());
    }
    if (ec) throw IoError(path + ": " + ec.message());
    std::sort(files.begin(), files.end());
    for (const std::string& file : files) add_file(file);
    return;
  }
  if (fs::is_regular_file(path, ec)) {
    const std::string bytes = read_file(path);
    record_source(fs::path(path).filename().string(), bytes);
    for (const std::string& line : split_lines(bytes)) add_text(line);
    return;
  }
  throw IoError(path + ": not a file or directory");
}

void IndexBuilder::record_source(const std::string& name, const std::string& bytes) {
  checksums_[name] = fnv1a64(bytes);
}

NGramIndex IndexBuilder::build() const {
  NGramIndex index;
  index.params_ = params_;
  index.words_ = words_;
  index.checksums_ = checksums_;
  std::map<std::pair<std::size_t, PositionClass>, std::map<std::u32string, std::int64_t>> counts;
  for (const auto& [word, freq] : words_) {
    if (freq < params_.min_word_freq) continue;
    for (std::size_t n : params_.n_values)
      for (const GramExtraction& g : extract_grams(word, n))
        counts[{n, g.position}][g.gram] += freq;
  }
  for (auto& [key, grams] : counts) {
    auto& entries = index.buckets_[key];
    entries.reserve(grams.size());
    for (auto& [gram, freq] : grams) entries.push_back({gram, freq});
  }
  return index;
}

} // namespace peyv
