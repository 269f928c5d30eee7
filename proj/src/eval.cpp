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

#include "peyv/eval.hpp"

#include <algorithm>
#include <cstdio>

#include "peyv/errors.hpp"
#include "peyv/textfile.hpp"
#include "peyv/unicode.hpp"

namespace peyv {

namespace {

EvalReport finish_report(std::vector<EvalItem> items, const std::vector<GoldPair>& gold) {
  EvalReport report;
  report.n = items.size();
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].hit) ++report.matches;
    if (!gold[i].group.empty()) {
      GroupStats& g = report.breakdown[gold[i].group];
      ++g.total;
      if (items[i].hit) ++g.matches;
    }
  }
  report.accuracy = report.n == 0 ? 0.0
                                  : static_cast<double>(report.matches) /
                                        static_cast<double>(report.n);
  for (auto& [label, g] : report.breakdown)
    g.accuracy = static_cast<double>(g.matches) / static_cast<double>(g.total);
  report.per_item = std::move(items);
  return report;
}

} // namespace

std::vector<GoldPair> load_gold(const std::string& path, const NormalizationTable& table) {
  std::vector<GoldPair> gold;
  const auto lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 2 && fields.size() != 3)
      throw ParseError(path + ":" + std::to_string(i + 1) + ": expected 2 or 3 fields, got " +
                       std::to_string(fields.size()));
    GoldPair pair;
    try {
      pair.input = table.apply(utf8_decode(fields[0]));
      pair.gold = table.apply(utf8_decode(fields[1]));
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(i + 1) + ": " + e.what());
    }
    if (pair.input.empty() || pair.gold.empty())
      throw ParseError(path + ":" + std::to_string(i + 1) + ": empty input or gold field");
    if (fields.size() == 3) pair.group = fields[2];
    gold.push_back(std::move(pair));
  }
  return gold;
}

EvalReport accuracy_report(const std::vector<GoldPair>& gold, const PredictFn& predict) {
  if (gold.empty()) throw ValidationError("empty gold set");
  std::vector<EvalItem> items;
  items.reserve(gold.size());
  for (const GoldPair& pair : gold) {
    EvalItem item;
    item.input = pair.input;
    item.gold = pair.gold;
    item.predicted = predict(pair.input);
    item.hit = item.predicted == pair.gold;
    items.push_back(std::move(item));
  }
  return finish_report(std::move(items), gold);
}

EvalReport hit_at_k(const std::vector<GoldPair>& gold, const PredictListFn& predict, int k) {
  if (gold.empty()) throw ValidationError("empty gold set");
  if (k < 1) throw ValidationError("k must be at least 1");
  std::vector<EvalItem> items;
  items.reserve(gold.size());
  for (const GoldPair& pair : gold) {
    std::vector<std::u32string> predictions = predict(pair.input);
    if (predictions.size() > static_cast<std::size_t>(k))
      predictions.resize(static_cast<std::size_t>(k));
    EvalItem item;
    item.input = pair.input;
    item.gold = pair.gold;
    if (!predictions.empty()) item.predicted = predictions.front();
    item.hit = std::find(predictions.begin(), predictions.end(), pair.gold) != predictions.end();
    items.push_back(std::move(item));
  }
  return finish_report(std::move(items), gold);
}

SweepResult alpha_sweep(const std::vector<GoldPair>& gold, const SuggestFn& suggest,
                        const std::vector<Rational>& alphas, const std::vector<int>& ks) {
  if (gold.empty()) throw ValidationError("empty gold set");
  if (alphas.empty()) throw ValidationError("sweep needs at least one alpha");
  if (ks.empty()) throw ValidationError("sweep needs at least one k");
  for (const Rational& alpha : alphas)
    if (!(Rational(0, 1) < alpha)) throw ValidationError("alpha must be positive");
  SweepResult sweep;
  sweep.alphas = alphas;
  sweep.ks = ks;
  for (const Rational& alpha : alphas) {
    std::vector<double> row;
    for (int k : ks) {
      const EvalReport report = hit_at_k(
          gold,
          [&](const std::u32string& input) { return suggest(input, alpha); }, k);
      row.push_back(report.accuracy);
    }
    sweep.accuracy.push_back(std::move(row));
  }
  return sweep;
}

std::string format_accuracy(double accuracy) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", accuracy);
  return buf;
}

std::string format_report(const EvalReport& report) {
  std::string out;
  out += "items:    " + std::to_string(report.n) + "\n";
  out += "matches:  " + std::to_string(report.matches) + "\n";
  out += "accuracy: " + format_accuracy(report.accuracy) + "\n";
  if (!report.breakdown.empty()) {
    out += "\ngroup\tmatches\ttotal\taccuracy\n";
    for (const auto& [label, g] : report.breakdown) {
      out += label + "\t" + std::to_string(g.matches) + "\t" + std::to_string(g.total) + "\t" +
             format_accuracy(g.accuracy) + "\n";
    }
  }
  return out;
}

std::string report_tsv(const EvalReport& report) {
  std::string out = "# input\tgold\tpredicted\thit\n";
  for (const EvalItem& item : report.per_item) {
    out += utf8_encode(item.input) + "\t" + utf8_encode(item.gold) + "\t" +
           utf8_encode(item.predicted) + "\t" + (item.hit ? "1" : "0") + "\n";
  }
  out += "# matches\t" + std::to_string(report.matches) + "\n";
  out += "# items\t" + std::to_string(report.n) + "\n";
  out += "# accuracy\t" + format_accuracy(report.accuracy) + "\n";
  return out;
}

std::string format_sweep(const SweepResult& sweep) { return sweep_tsv(sweep); }

std::string sweep_tsv(const SweepResult& sweep) {
  std::string out = "alpha";
  for (int k : sweep.ks) out += "\tk=" + std::to_string(k);
  out += "\n";
  for (std::size_t a = 0; a < sweep.alphas.size(); ++a) {
    out += sweep.alphas[a].to_string();
    for (double value : sweep.accuracy[a]) out += "\t" + format_accuracy(value);
    out += "\n";
  }
  return out;
}

} // namespace peyv
