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

#include "peyv/affixes.hpp"

#include <algorithm>

#include "peyv/errors.hpp"
#include "peyv/textfile.hpp"
#include "peyv/unicode.hpp"

namespace peyv {

namespace {

std::string where(const std::string& path, std::size_t lineno) {
  return path + ":" + std::to_string(lineno);
}

bool rule_order(const AffixRule& a, const AffixRule& b) {
  if (a.form != b.form) return a.form < b.form;
  if (a.side != b.side) return static_cast<int>(a.side) < static_cast<int>(b.side);
  return static_cast<int>(a.kind) < static_cast<int>(b.kind);
}

} // namespace

AffixInventory AffixInventory::load(const std::string& path, const NormalizationTable& table) {
  AffixInventory inv;
  const auto lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 5)
      throw ParseError(where(path, i + 1) + ": expected 5 tab-separated fields, got " +
                       std::to_string(fields.size()));
    AffixRule rule;
    try {
      rule.form = table.apply(utf8_decode(fields[0]));
    } catch (const ParseError& e) {
      throw ParseError(where(path, i + 1) + ": " + e.what());
    }
    if (rule.form.empty()) throw ParseError(where(path, i + 1) + ": empty affix form");
    if (fields[1] == "prefix") rule.side = AffixSide::prefix;
    else if (fields[1] == "suffix") rule.side = AffixSide::suffix;
    else throw ParseError(where(path, i + 1) + ": unknown side '" + fields[1] + "'");
    if (fields[2] == "inflectional") rule.kind = AffixKind::inflectional;
    else if (fields[2] == "derivational") rule.kind = AffixKind::derivational;
    else throw ParseError(where(path, i + 1) + ": unknown kind '" + fields[2] + "'");
    for (const auto& scope : split(fields[3], ',')) {
      if (scope == "noun") rule.applies_to_noun = true;
      else if (scope == "verb") rule.applies_to_verb = true;
      else throw ParseError(where(path, i + 1) + ": unknown pos scope '" + scope + "'");
    }
    if (!rule.applies_to_noun && !rule.applies_to_verb)
      throw ParseError(where(path, i + 1) + ": empty pos scope");
    rule.gloss = fields[4];
    inv.rules_.push_back(std::move(rule));
  }

  std::sort(inv.rules_.begin(), inv.rules_.end(), rule_order);
  inv.rules_.erase(std::unique(inv.rules_.begin(), inv.rules_.end()), inv.rules_.end());
  for (std::size_t i = 1; i < inv.rules_.size(); ++i) {
    const AffixRule& a = inv.rules_[i - 1];
    const AffixRule& b = inv.rules_[i];
    if (a.form == b.form && a.side == b.side && a.kind == b.kind)
      throw ValidationError(path + ": conflicting rows for affix '" + utf8_encode(a.form) + "'");
  }
  return inv;
}

AffixInventory::Counts AffixInventory::counts() const {
  Counts c;
  for (const AffixRule& r : rules_) {
    if (r.kind == AffixKind::inflectional) ++c.inflectional;
    else ++c.derivational;
    if (r.side == AffixSide::prefix) ++c.prefixes;
    else ++c.suffixes;
  }
  return c;
}

std::vector<const AffixRule*> AffixInventory::noun_strippable() const {
  std::vector<const AffixRule*> out;
  for (const AffixRule& r : rules_)
    if (r.kind == AffixKind::inflectional && r.applies_to_noun) out.push_back(&r);
  std::stable_sort(out.begin(), out.end(), [](const AffixRule* a, const AffixRule* b) {
    if (a->side != b->side) return a->side == AffixSide::suffix;
    if (a->form.size() != b->form.size()) return a->form.size() > b->form.size();
    return a->form < b->form;
  });
  return out;
}

} // namespace peyv
