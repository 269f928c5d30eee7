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
#include <set>
#include <string>
#include <vector>

#include "peyv/rational.hpp"

namespace peyv {

using EditCost = Rational;

// Character rewriting applied to every word before any lookup or counting.
// Kurdish text mixes Arabic-keyboard codepoints with their Kurdish
// counterparts (ي vs ی, ك vs ک, ...); a table of rewrite rules plus a set of
// stripped codepoints (ZWNJ, tatweel, diacritics) folds these together.
class NormalizationTable {
public:
  struct Rule {
    std::u32string source;
    std::u32string target;
  };

  NormalizationTable() = default;
  NormalizationTable(std::vector<Rule> rules, std::set<char32_t> strip);

  // File format, one rule per line: "source<TAB>target". Lines starting with
  // '#' and blank lines are skipped. A line "strip:<TAB>U+200C U+0640 ..."
  // lists codepoints removed outright.
  static NormalizationTable load(const std::string& path);

  // Rewrites until no rule applies. Validation at construction guarantees
  // this terminates and that the result contains no rule source.
  std::u32string apply(const std::u32string& text) const;

  const std::vector<Rule>& rules() const { return rules_; }
  const std::set<char32_t>& strip_set() const { return strip_; }

  bool is_normal(const std::u32string& text) const { return apply(text) == text; }

private:
  void validate() const;
  bool apply_once(const std::u32string& in, std::u32string* out) const;

  std::vector<Rule> rules_;
  std::set<char32_t> strip_;
};

std::u32string normalize(const NormalizationTable& table, const std::u32string& text);
std::string normalize_utf8(const NormalizationTable& table, const std::string& text);

// Letter pairs that editors routinely swap because the glyphs look alike or
// the keyboard puts them together (ر/ڕ, ل/ڵ, و/ۆ, ...). Substitution inside a
// group is cheaper than an arbitrary substitution.
class ConfusionGroups {
public:
  ConfusionGroups();
  ConfusionGroups(std::vector<std::vector<char32_t>> groups, Rational discount);

  // File format, one group per line: codepoints separated by tabs or spaces.
  // An optional "discount=0.5" line overrides the default discount. The
  // table argument is used to check members are normalization fixed points.
  static ConfusionGroups load(const std::string& path, const NormalizationTable& table);

  bool confusable(char32_t a, char32_t b) const;
  const Rational& discount() const { return discount_; }
  const std::vector<std::vector<char32_t>>& groups() const { return groups_; }

private:
  void rebuild_index();

  std::vector<std::vector<char32_t>> groups_;
  std::vector<std::pair<char32_t, int>> member_to_group_; // sorted by codepoint
  Rational discount_{1, 2};
};

// Levenshtein distance where substitutions inside a confusion group cost the
// group discount instead of 1. Insertions and deletions always cost 1.
EditCost weighted_edit_distance(const std::u32string& a, const std::u32string& b,
                                const ConfusionGroups& groups);

} // namespace peyv
