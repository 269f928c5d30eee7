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
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "peyv/orthography.hpp"
#include "peyv/rational.hpp"

namespace peyv {

// One evaluation item: the word given to the system and the answer it
// should produce (a corrected spelling or a lemma). The optional group
// label buckets items for per-group reporting.
struct GoldPair {
  std::u32string input;
  std::u32string gold;
  std::string group;
};

// TSV: input, gold, optional group label. Input and gold are normalized.
std::vector<GoldPair> load_gold(const std::string& path, const NormalizationTable& table);

struct EvalItem {
  std::u32string input;
  std::u32string gold;
  std::u32string predicted; // first prediction
  bool hit = false;
};

struct GroupStats {
  std::int64_t matches = 0;
  std::int64_t total = 0;
  double accuracy = 0.0;
};

// Positionwise scoring: item i is a match when the prediction for input i
// equals gold i exactly, so duplicated words are counted per occurrence.
struct EvalReport {
  std::size_t n = 0;
  std::int64_t matches = 0;
  double accuracy = 0.0;
  std::vector<EvalItem> per_item;
  std::map<std::string, GroupStats> breakdown; // present only for labeled items
};

using PredictFn = std::function<std::u32string(const std::u32string&)>;
using PredictListFn = std::function<std::vector<std::u32string>(const std::u32string&)>;

// Exact-match accuracy of first predictions. Throws on an empty gold set.
EvalReport accuracy_report(const std::vector<GoldPair>& gold, const PredictFn& predict);

// An item is a hit when its gold answer appears in the first k predictions.
EvalReport hit_at_k(const std::vector<GoldPair>& gold, const PredictListFn& predict, int k);

struct SweepResult {
  std::vector<Rational> alphas;
  std::vector<int> ks;
  std::vector<std::vector<double>> accuracy; // [alpha index][k index]
};

using SuggestFn =
    std::function<std::vector<std::u32string>(const std::u32string&, const Rational& alpha)>;

// hit@k over the same gold set for every (alpha, k) combination.
SweepResult alpha_sweep(const std::vector<GoldPair>& gold, const SuggestFn& suggest,
                        const std::vector<Rational>& alphas, const std::vector<int>& ks);

// Fixed four-decimal accuracy so repeated runs emit identical bytes.
std::string format_accuracy(double accuracy);
std::string format_report(const EvalReport& report);
std::string report_tsv(const EvalReport& report);
std::string format_sweep(const SweepResult& sweep);
std::string sweep_tsv(const SweepResult& sweep);

} // namespace peyv
