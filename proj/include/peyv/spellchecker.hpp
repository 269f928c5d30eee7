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
#include <optional>
#include <string>
#include <vector>

#include "peyv/lemmatizer.hpp"
#include "peyv/ngram_model.hpp"
#include "peyv/orthography.hpp"
#include "peyv/rational.hpp"

namespace peyv {

enum class CheckMode { ngram_only, with_lexicon };

struct GramObservation {
  std::u32string gram;
  PositionClass position = PositionClass::beginning;
  std::size_t offset = 0;
  std::size_t n = 0; // bucket size (gram may be shorter for short words)
  std::int64_t frequency = 0;

  friend bool operator==(const GramObservation&, const GramObservation&) = default;
};

// What detection saw: every gram of the word over every configured size,
// whether the word is considered misspelled, and the culprit gram — the one
// with the lowest frequency, ties going to the leftmost offset, then the
// longest size.
struct DetectionReport {
  std::u32string word;
  std::vector<GramObservation> grams;
  bool flagged = false;
  std::optional<GramObservation> culprit;
};

struct RankParams {
  Rational alpha{70, 1};
  EditCost max_distance{3, 1}; // exclusive bound on candidate distance
  int top_k = 10;

  void validate() const;
};

struct CorrectionCandidate {
  std::u32string replacement_gram;
  std::u32string corrected_word;
  EditCost distance;       // between replacement and culprit gram
  std::int64_t freq_value = 0; // stored frequency of the replacement gram
  Rational rank;
  std::size_t n = 0; // bucket the replacement came from
};

// Error detection and ranked correction over the positional gram index.
// A word is suspect when one of its grams never occurs in the corpus; in
// lexicon mode the lemmatizer's verdict overrides the gram test entirely.
// Candidates come from the culprit's own (size, position) bucket, within a
// weighted edit distance bound, scored by frequency against distance.
class SpellChecker {
public:
  // lemmatizer may be null when only ngram_only mode is used.
  SpellChecker(const NGramIndex& index, const ConfusionGroups& groups,
               const Lemmatizer* lemmatizer = nullptr);

  DetectionReport detect(const std::u32string& word, CheckMode mode) const;

  // Ranked candidates, best first; rank descending, then smaller distance,
  // higher frequency, lexicographic corrected word. all_candidates returns
  // the full pool, candidates truncates to params.top_k.
  std::vector<CorrectionCandidate> all_candidates(const DetectionReport& report,
                                                  const RankParams& params) const;
  std::vector<CorrectionCandidate> candidates(const DetectionReport& report,
                                              const RankParams& params) const;

  // Corrected words in rank order, deduplicated, truncated to top_k. An
  // unflagged word answers with itself. In lexicon mode, suggestions that
  // still fail detection are dropped before truncation. passes > 1 re-runs
  // detection on the leading suggestion, fixing one gram per pass.
  std::vector<std::u32string> correct(const std::u32string& word, const RankParams& params,
                                      CheckMode mode, int passes = 1) const;

  // The scoring curve: frequency / distance when distance ≤ 1 (doubled
  // frequency at distance 0), frequency / ((distance − 1) · alpha) beyond.
  static Rational rank_candidate(std::int64_t freq_value, const EditCost& distance,
                                 const Rational& alpha);

  const NGramIndex& index() const { return index_; }

private:
  const NGramIndex& index_;
  const ConfusionGroups& groups_;
  const Lemmatizer* lemmatizer_;
};

} // namespace peyv
