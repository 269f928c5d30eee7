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

// Shared fixtures and independent reference implementations used to
// cross-check the library. The reference code here deliberately mirrors the
// documented behavior with separate, simpler implementations so that a bug
// in the library cannot hide in its own test.

#pragma once

#include <unistd.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "peyv/affixes.hpp"
#include "peyv/lexicon.hpp"
#include "peyv/ngram_model.hpp"
#include "peyv/orthography.hpp"
#include "peyv/rational.hpp"
#include "peyv/unicode.hpp"
#include "peyv/verb_lemmatizer.hpp"

#ifndef PEYV_DATA_DIR
#error "PEYV_DATA_DIR must be defined by the build"
#endif

namespace testutil {

inline std::string data_path(const std::string& name) {
  return std::string(PEYV_DATA_DIR) + "/" + name;
}

// Starter data loaded once per binary.
struct Fixtures {
  peyv::NormalizationTable table;
  peyv::ConfusionGroups groups;
  peyv::Lexicon lexicon;
  peyv::AffixInventory affixes;
  std::vector<peyv::VerbTemplate> templates;

  Fixtures()
      : table(peyv::NormalizationTable::load(data_path("orthography.tsv"))),
        groups(peyv::ConfusionGroups::load(data_path("confusion_groups.tsv"), table)),
        lexicon(peyv::Lexicon::load(data_path("lexicon.tsv"), table)),
        affixes(peyv::AffixInventory::load(data_path("affixes.tsv"), table)),
        templates(peyv::load_verb_templates(data_path("verb_templates.tsv"), table)) {
    lexicon.load_exceptions(data_path("exceptions.txt"), table);
  }
};

inline const Fixtures& fixtures() {
  static const Fixtures f;
  return f;
}

// A scratch directory removed when the object goes out of scope.
class TempDir {
public:
  TempDir() {
    static int counter = 0;
    base_ = std::filesystem::temp_directory_path() /
            ("peyv_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(base_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(base_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string file(const std::string& name, const std::string& content) const {
    const std::filesystem::path p = base_ / name;
    std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("cannot write " + p.string());
    return p.string();
  }

  std::string path() const { return base_.string(); }
  std::string path(const std::string& name) const { return (base_ / name).string(); }

private:
  std::filesystem::path base_;
};

// ---------------------------------------------------------------------------
// Reference edit distance: top-down minimization over the three edit scripts
// at every position, in integer multiples of 1/den (den = discount
// denominator). Independent of the library's iterative rolling-array DP.
class ReferenceDistance {
public:
  ReferenceDistance(const peyv::ConfusionGroups& groups)
      : groups_(groups),
        unit_(groups.discount().den()),
        near_(groups.discount().num()) {}

  // scaled cost: multiples of 1/unit_
  std::int64_t scaled(const std::u32string& a, const std::u32string& b) {
    a_ = &a;
    b_ = &b;
    memo_.assign((a.size() + 1) * (b.size() + 1), -1);
    return go(0, 0);
  }

  peyv::EditCost cost(const std::u32string& a, const std::u32string& b) {
    return peyv::EditCost(scaled(a, b), unit_);
  }

private:
  std::int64_t go(std::size_t i, std::size_t j) {
    const std::size_t cols = b_->size() + 1;
    std::int64_t& slot = memo_[i * cols + j];
    if (slot >= 0) return slot;
    std::int64_t best;
    if (i == a_->size()) {
      best = static_cast<std::int64_t>(b_->size() - j) * unit_;
    } else if (j == b_->size()) {
      best = static_cast<std::int64_t>(a_->size() - i) * unit_;
    } else {
      const char32_t ca = (*a_)[i], cb = (*b_)[j];
      std::int64_t sub;
      if (ca == cb) sub = 0;
      else if (groups_.confusable(ca, cb)) sub = near_;
      else sub = unit_;
      best = sub + go(i + 1, j + 1);
      best = std::min(best, unit_ + go(i + 1, j));
      best = std::min(best, unit_ + go(i, j + 1));
    }
    return slot = best;
  }

  const peyv::ConfusionGroups& groups_;
  std::int64_t unit_;
  std::int64_t near_;
  const std::u32string* a_ = nullptr;
  const std::u32string* b_ = nullptr;
  std::vector<std::int64_t> memo_;
};

// ---------------------------------------------------------------------------
// Reference positional gram extraction, reimplemented from the documented
// rule: offset 0 is "beginning", offset len-n is "end", anything between is
// "middle"; a word no longer than n yields itself as one beginning gram.
struct RefGram {
  std::u32string gram;
  peyv::PositionClass position;
  std::size_t offset;
};

inline std::vector<RefGram> ref_extract(const std::u32string& word, std::size_t n) {
  std::vector<RefGram> out;
  if (word.empty()) return out;
  if (word.size() <= n) {
    out.push_back({word, peyv::PositionClass::beginning, 0});
    return out;
  }
  for (std::size_t off = 0; off + n <= word.size(); ++off) {
    peyv::PositionClass pos = peyv::PositionClass::middle;
    if (off == 0) pos = peyv::PositionClass::beginning;
    else if (off == word.size() - n) pos = peyv::PositionClass::end;
    out.push_back({word.substr(off, n), pos, off});
  }
  return out;
}

// Recount every bucket of an index from its stored word-frequency table.
using RefBuckets =
    std::map<std::pair<std::size_t, peyv::PositionClass>, std::map<std::u32string, std::int64_t>>;

inline RefBuckets ref_recount(const std::map<std::u32string, std::int64_t>& word_freq,
                              const std::vector<std::size_t>& n_values,
                              std::int64_t min_word_freq) {
  RefBuckets out;
  for (const auto& [word, freq] : word_freq) {
    if (freq < min_word_freq) continue;
    for (std::size_t n : n_values)
      for (const RefGram& g : ref_extract(word, n)) out[{n, g.position}][g.gram] += freq;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact fraction helpers for rank cross-checks, independent of Rational.
struct Frac {
  __int128 num = 0;
  __int128 den = 1; // kept positive
};

inline bool frac_less(const Frac& x, const Frac& y) { return x.num * y.den < y.num * x.den; }
inline bool frac_equal(const Frac& x, const Frac& y) { return x.num * y.den == y.num * x.den; }

inline bool frac_equals_rational(const Frac& x, const peyv::Rational& r) {
  return x.num * r.den() == static_cast<__int128>(r.num()) * x.den;
}

// The published scoring curve, computed in raw fractions. distance is given
// scaled: dist_num/dist_den.
inline Frac ref_rank(std::int64_t freq, std::int64_t dist_num, std::int64_t dist_den,
                     std::int64_t alpha_num, std::int64_t alpha_den) {
  Frac out;
  if (dist_num == 0) {
    out.num = static_cast<__int128>(2) * freq;
    out.den = 1;
  } else if (dist_num <= dist_den) { // distance <= 1
    out.num = static_cast<__int128>(freq) * dist_den;
    out.den = dist_num;
  } else { // freq / ((distance - 1) * alpha)
    out.num = static_cast<__int128>(freq) * dist_den * alpha_den;
    out.den = static_cast<__int128>(dist_num - dist_den) * alpha_num;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Deterministic randomness: std::mt19937 with explicit modulo draws, so the
// sequence does not depend on the standard library's distribution objects.
class Rng {
public:
  explicit Rng(std::uint32_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_()) % n; }
  bool coin() { return (engine_() & 1u) != 0; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

private:
  std::mt19937 engine_;
};

inline std::string u8(const std::u32string& s) { return peyv::utf8_encode(s); }
inline std::u32string u32(const std::string& s) { return peyv::utf8_decode(s); }

} // namespace testutil
