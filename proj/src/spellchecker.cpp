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

#include "peyv/spellchecker.hpp"

#include <algorithm>

#include "peyv/errors.hpp"

namespace peyv {

namespace {

// Lower frequency is more suspicious; leftmost, then longest, breaks ties.
bool more_suspicious(const GramObservation& a, const GramObservation& b) {
  if (a.frequency != b.frequency) return a.frequency < b.frequency;
  if (a.offset != b.offset) return a.offset < b.offset;
  return a.n > b.n;
}

std::u32string splice(const std::u32string& word, std::size_t offset, std::size_t span,
                      const std::u32string& replacement) {
  return word.substr(0, offset) + replacement + word.substr(offset + span);
}

bool candidate_order(const CorrectionCandidate& a, const CorrectionCandidate& b) {
  if (a.rank != b.rank) return a.rank > b.rank;
  if (a.distance != b.distance) return a.distance < b.distance;
  if (a.freq_value != b.freq_value) return a.freq_value > b.freq_value;
  if (a.corrected_word != b.corrected_word) return a.corrected_word < b.corrected_word;
  return a.n < b.n;
}

} // namespace

void RankParams::validate() const {
  if (!(Rational(0, 1) < alpha)) throw ValidationError("alpha must be positive");
  if (!(EditCost(0, 1) < max_distance)) throw ValidationError("max_distance must be positive");
  if (top_k < 1) throw ValidationError("top_k must be at least 1");
}

SpellChecker::SpellChecker(const NGramIndex& index, const ConfusionGroups& groups,
                           const Lemmatizer* lemmatizer)
    : index_(index), groups_(groups), lemmatizer_(lemmatizer) {}

DetectionReport SpellChecker::detect(const std::u32string& word, CheckMode mode) const {
  DetectionReport report;
  report.word = word;
  for (std::size_t n : index_.params().n_values) {
    for (const GramExtraction& g : extract_grams(word, n)) {
      GramObservation obs;
      obs.gram = g.gram;
      obs.position = g.position;
      obs.offset = g.offset;
      obs.n = n;
      obs.frequency = index_.gram_frequency(g.gram, g.position, n);
      report.grams.push_back(std::move(obs));
    }
  }
  bool any_zero = false;
  for (const GramObservation& obs : report.grams) {
    if (obs.frequency == 0) any_zero = true;
    if (!report.culprit || more_suspicious(obs, *report.culprit)) report.culprit = obs;
  }
  if (mode == CheckMode::with_lexicon) {
    if (!lemmatizer_)
      throw ValidationError("lexicon mode requires lexicon and affix data");
    report.flagged = !lemmatizer_->recognizes(word);
  } else {
    report.flagged = any_zero;
  }
  return report;
}

Rational SpellChecker::rank_candidate(std::int64_t freq_value, const EditCost& distance,
                                      const Rational& alpha) {
  const Rational freq(freq_value, 1);
  if (distance.is_zero()) return Rational(2, 1) * freq;
  if (distance <= Rational(1, 1)) return freq / distance;
  return freq / ((distance - Rational(1, 1)) * alpha);
}

std::vector<CorrectionCandidate> SpellChecker::all_candidates(const DetectionReport& report,
                                                              const RankParams& params) const {
  params.validate();
  std::vector<CorrectionCandidate> out;
  if (!report.culprit) return out;

  // One culprit per gram size takes part: the sizes containing a zero gram,
  // or just the overall culprit's size when the word was flagged by the
  // lexicon with every gram attested.
  std::vector<GramObservation> culprits;
  bool any_zero = false;
  for (const GramObservation& obs : report.grams)
    if (obs.frequency == 0) any_zero = true;
  if (any_zero) {
    for (std::size_t n : index_.params().n_values) {
      const GramObservation* best = nullptr;
      for (const GramObservation& obs : report.grams)
        if (obs.n == n && obs.frequency == 0 && (!best || more_suspicious(obs, *best)))
          best = &obs;
      if (best) culprits.push_back(*best);
    }
  } else {
    culprits.push_back(*report.culprit);
  }

  for (const GramObservation& culprit : culprits) {
    for (const NGramIndex::BucketEntry& entry : index_.bucket(culprit.n, culprit.position)) {
      const std::size_t len_a = entry.gram.size();
      const std::size_t len_b = culprit.gram.size();
      const std::size_t len_gap = len_a > len_b ? len_a - len_b : len_b - len_a;
      if (!(EditCost(static_cast<std::int64_t>(len_gap), 1) < params.max_distance)) continue;
      const EditCost distance = weighted_edit_distance(entry.gram, culprit.gram, groups_);
      if (!(distance < params.max_distance)) continue;
      CorrectionCandidate cand;
      cand.replacement_gram = entry.gram;
      cand.corrected_word = splice(report.word, culprit.offset, culprit.gram.size(), entry.gram);
      cand.distance = distance;
      cand.freq_value = entry.frequency;
      cand.rank = rank_candidate(entry.frequency, distance, params.alpha);
      cand.n = culprit.n;
      out.push_back(std::move(cand));
    }
  }
  std::sort(out.begin(), out.end(), candidate_order);
  return out;
}

std::vector<CorrectionCandidate> SpellChecker::candidates(const DetectionReport& report,
                                                          const RankParams& params) const {
  std::vector<CorrectionCandidate> out = all_candidates(report, params);
  if (out.size() > static_cast<std::size_t>(params.top_k))
    out.resize(static_cast<std::size_t>(params.top_k));
  return out;
}

std::vector<std::u32string> SpellChecker::correct(const std::u32string& word,
                                                  const RankParams& params, CheckMode mode,
                                                  int passes) const {
  params.validate();
  const DetectionReport report = detect(word, mode);
  if (!report.flagged) return {word};

  std::vector<std::u32string> suggestions;
  for (const CorrectionCandidate& cand : all_candidates(report, params)) {
    if (mode == CheckMode::with_lexicon && detect(cand.corrected_word, mode).flagged) continue;
    if (std::find(suggestions.begin(), suggestions.end(), cand.corrected_word) !=
        suggestions.end())
      continue;
    suggestions.push_back(cand.corrected_word);
  }

  if (passes > 1 && !suggestions.empty()) {
    const std::u32string& leading = suggestions.front();
    if (detect(leading, mode).flagged) {
      std::vector<std::u32string> refined = correct(leading, params, mode, passes - 1);
      std::vector<std::u32string> merged;
      for (const std::u32string& s : refined)
        if (std::find(merged.begin(), merged.end(), s) == merged.end()) merged.push_back(s);
      for (const std::u32string& s : suggestions)
        if (std::find(merged.begin(), merged.end(), s) == merged.end()) merged.push_back(s);
      suggestions = std::move(merged);
    }
  }

  if (suggestions.size() > static_cast<std::size_t>(params.top_k))
    suggestions.resize(static_cast<std::size_t>(params.top_k));
  return suggestions;
}

} // namespace peyv
