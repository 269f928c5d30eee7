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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "peyv/orthography.hpp"

namespace peyv {

// Where a gram sits inside its word. A gram that is both first and last
// (word length equals the gram size) counts as beginning.
enum class PositionClass { beginning, middle, end };

const char* position_name(PositionClass position);

struct GramExtraction {
  std::u32string gram;
  PositionClass position = PositionClass::beginning;
  std::size_t offset = 0;

  friend bool operator==(const GramExtraction&, const GramExtraction&) = default;
};

// All length-n substrings in offset order. Words shorter than n yield the
// whole word as one beginning gram so short words stay detectable.
std::vector<GramExtraction> extract_grams(const std::u32string& word, std::size_t n);

// Splits on whitespace and punctuation (Latin and Arabic-script), then drops
// digit-only tokens. No normalization happens here.
std::vector<std::u32string> tokenize(const std::u32string& text);

// Frequency index over positional grams plus the word counts they came
// from. Grams are only derived from words whose corpus frequency reaches
// min_word_freq; each occurrence of a word contributes once to each of its
// grams, so a word seen k times adds k to every gram it contains.
class NGramIndex {
public:
  struct Params {
    std::vector<std::size_t> n_values{3, 4, 5};
    std::int64_t min_word_freq = 3;

    void validate() const;
    friend bool operator==(const Params&, const Params&) = default;
  };

  struct BucketEntry {
    std::u32string gram;
    std::int64_t frequency = 0;

    friend bool operator==(const BucketEntry&, const BucketEntry&) = default;
  };

  struct Stats {
    std::int64_t total_tokens = 0;
    std::int64_t distinct_words = 0;
    std::int64_t dropped_words = 0; // below min_word_freq
    std::vector<std::pair<std::size_t, std::int64_t>> grams_per_n;
  };

  NGramIndex() { params_.validate(); }

  const Params& params() const { return params_; }

  std::int64_t gram_frequency(const std::u32string& gram, PositionClass position,
                              std::size_t n) const;
  std::int64_t word_frequency(const std::u32string& word) const;

  // Stored grams of one (n, position) bucket, sorted by gram. Empty vector
  // for sizes or positions with no entries.
  const std::vector<BucketEntry>& bucket(std::size_t n, PositionClass position) const;

  const std::map<std::u32string, std::int64_t>& word_freq() const { return words_; }
  const std::map<std::string, std::uint64_t>& source_checksums() const { return checksums_; }

  Stats stats() const;

  void save(const std::string& path) const;
  static NGramIndex load(const std::string& path);
  void export_tsv(const std::string& path) const;

  friend bool operator==(const NGramIndex&, const NGramIndex&);

private:
  friend class IndexBuilder;

  Params params_;
  std::map<std::u32string, std::int64_t> words_;
  // Buckets laid out n-major (params order), position-minor.
  std::map<std::pair<std::size_t, PositionClass>, std::vector<BucketEntry>> buckets_;
  std::map<std::string, std::uint64_t> checksums_;
};

// Accumulates documents, then derives the index. Building twice from the
// same inputs gives identical indexes whatever the document order.
class IndexBuilder {
public:
  IndexBuilder(NGramIndex::Params params, const NormalizationTable& table);

  void add_text(const std::string& utf8_text);
  void add_file(const std::string& path);
  // Directory: every *.txt file, one document each. File: one document per
  // line. Anything else is an I/O error.
  void add_corpus(const std::string& path);

  // Checksum recorded in the model so consumers can tell which data files
  // the model was built against.
  void record_source(const std::string& name, const std::string& bytes);

  NGramIndex build() const;

private:
  NGramIndex::Params params_;
  const NormalizationTable& table_;
  std::map<std::u32string, std::int64_t> words_;
  std::map<std::string, std::uint64_t> checksums_;
};

std::uint64_t fnv1a64(const std::string& bytes);

} // namespace peyv
