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

#include "peyv/orthography.hpp"

#include <algorithm>
#include <vector>

#include "peyv/errors.hpp"
#include "peyv/textfile.hpp"
#include "peyv/unicode.hpp"

namespace peyv {

namespace {

std::string where(const std::string& path, std::size_t lineno) {
  return path + ":" + std::to_string(lineno);
}

char32_t parse_codepoint(const std::string& token, const std::string& context) {
  if (token.size() < 3 || (token.rfind("U+", 0) != 0 && token.rfind("u+", 0) != 0))
    throw ParseError(context + ": expected U+XXXX, got '" + token + "'");
  char32_t value = 0;
  for (std::size_t i = 2; i < token.size(); ++i) {
    const char c = token[i];
    int digit;
    if (c >= '0' && c <= '9') digit = c - '0';
    else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
    else throw ParseError(context + ": bad hex digit in '" + token + "'");
    value = value * 16 + static_cast<char32_t>(digit);
    if (value > 0x10FFFF) throw ParseError(context + ": codepoint out of range in '" + token + "'");
  }
  return value;
}

std::vector<std::string> split_whitespace(const std::string& s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

} // namespace

NormalizationTable::NormalizationTable(std::vector<Rule> rules, std::set<char32_t> strip)
    : rules_(std::move(rules)), strip_(std::move(strip)) {
  validate();
}

NormalizationTable NormalizationTable::load(const std::string& path) {
  std::vector<Rule> rules;
  std::set<char32_t> strip;
  const auto lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("strip:", 0) == 0) {
      for (const auto& token : split_whitespace(line.substr(6)))
        strip.insert(parse_codepoint(token, where(path, i + 1)));
      continue;
    }
    const auto fields = split(line, '\t');
    if (fields.size() != 2)
      throw ParseError(where(path, i + 1) + ": expected 'source<TAB>target'");
    Rule rule;
    try {
      rule.source = utf8_decode(fields[0]);
      rule.target = utf8_decode(fields[1]);
    } catch (const ParseError& e) {
      throw ParseError(where(path, i + 1) + ": " + e.what());
    }
    rules.push_back(std::move(rule));
  }
  return NormalizationTable(std::move(rules), std::move(strip));
}

void NormalizationTable::validate() const {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Rule& rule = rules_[i];
    if (rule.source.empty()) throw ValidationError("normalization rule with empty source");
    for (std::size_t j = 0; j < rules_.size(); ++j)
      if (i != j && rules_[i].source == rules_[j].source)
        throw ValidationError("duplicate normalization rule source");
    // A target that still contains some rule source (or a stripped
    // codepoint) would make rewriting loop or leave unnormalized output.
    for (const Rule& other : rules_)
      if (rule.target.find(other.source) != std::u32string::npos)
        throw ValidationError("normalization rule target contains another rule source");
    for (char32_t c : rule.target)
      if (strip_.count(c)) throw ValidationError("normalization rule target contains stripped codepoint");
  }
}

bool NormalizationTable::apply_once(const std::u32string& in, std::u32string* out) const {
  bool changed = false;
  out->clear();
  std::size_t i = 0;
  while (i < in.size()) {
    if (strip_.count(in[i])) {
      ++i;
      changed = true;
      continue;
    }
    const Rule* hit = nullptr;
    for (const Rule& rule : rules_) {
      if (in.compare(i, rule.source.size(), rule.source) == 0) {
        hit = &rule;
        break;
      }
    }
    if (hit) {
      out->append(hit->target);
      i += hit->source.size();
      changed = true;
    } else {
      out->push_back(in[i]);
      ++i;
    }
  }
  return changed;
}

std::u32string NormalizationTable::apply(const std::u32string& text) const {
  std::u32string current = text;
  std::u32string next;
  const std::size_t cap = 16 + text.size();
  for (std::size_t round = 0; round < cap; ++round) {
    if (!apply_once(current, &next)) return current;
    current.swap(next);
  }
  throw ValidationError("normalization did not reach a fixed point");
}

std::u32string normalize(const NormalizationTable& table, const std::u32string& text) {
  return table.apply(text);
}

std::string normalize_utf8(const NormalizationTable& table, const std::string& text) {
  return utf8_encode(table.apply(utf8_decode(text)));
}

ConfusionGroups::ConfusionGroups() = default;

ConfusionGroups::ConfusionGroups(std::vector<std::vector<char32_t>> groups, Rational discount)
    : groups_(std::move(groups)), discount_(discount) {
  if (!(Rational(0, 1) < discount_) || !(discount_ < Rational(1, 1)))
    throw ValidationError("confusion discount must lie strictly between 0 and 1");
  for (const auto& group : groups_)
    if (group.size() < 2) throw ValidationError("confusion group needs at least two members");
  rebuild_index();
}

ConfusionGroups ConfusionGroups::load(const std::string& path, const NormalizationTable& table) {
  std::vector<std::vector<char32_t>> groups;
  Rational discount(1, 2);
  const auto lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("discount=", 0) == 0) {
      try {
        discount = Rational::parse_decimal(line.substr(9));
      } catch (const ParseError& e) {
        throw ParseError(where(path, i + 1) + ": " + e.what());
      }
      continue;
    }
    std::vector<char32_t> group;
    for (const auto& token : split_whitespace(line)) {
      std::u32string decoded;
      try {
        decoded = utf8_decode(token);
      } catch (const ParseError& e) {
        throw ParseError(where(path, i + 1) + ": " + e.what());
      }
      if (decoded.size() != 1)
        throw ParseError(where(path, i + 1) + ": group member must be a single codepoint");
      if (table.apply(decoded) != decoded)
        throw ValidationError(where(path, i + 1) + ": group member is altered by normalization");
      group.push_back(decoded[0]);
    }
    if (!group.empty()) groups.push_back(std::move(group));
  }
  return ConfusionGroups(std::move(groups), discount);
}

void ConfusionGroups::rebuild_index() {
  member_to_group_.clear();
  for (std::size_t g = 0; g < groups_.size(); ++g)
    for (char32_t c : groups_[g]) member_to_group_.emplace_back(c, static_cast<int>(g));
  std::sort(member_to_group_.begin(), member_to_group_.end());
  for (std::size_t i = 1; i < member_to_group_.size(); ++i)
    if (member_to_group_[i].first == member_to_group_[i - 1].first)
      throw ValidationError("codepoint appears in more than one confusion group");
}

bool ConfusionGroups::confusable(char32_t a, char32_t b) const {
  if (a == b) return false;
  const auto find = [this](char32_t c) -> int {
    auto it = std::lower_bound(member_to_group_.begin(), member_to_group_.end(),
                               std::make_pair(c, -1));
    if (it == member_to_group_.end() || it->first != c) return -1;
    return it->second;
  };
  const int ga = find(a);
  return ga >= 0 && ga == find(b);
}

EditCost weighted_edit_distance(const std::u32string& a, const std::u32string& b,
                                const ConfusionGroups& groups) {
  // Classic DP over integers scaled by the discount denominator, so the
  // result is exact. unit = cost of insert/delete/plain substitution.
  const std::int64_t unit = groups.discount().den();
  const std::int64_t near = groups.discount().num();
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<std::int64_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<std::int64_t>(j) * unit;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = static_cast<std::int64_t>(i) * unit;
    for (std::size_t j = 1; j <= m; ++j) {
      std::int64_t sub = prev[j - 1];
      if (a[i - 1] != b[j - 1]) sub += groups.confusable(a[i - 1], b[j - 1]) ? near : unit;
      const std::int64_t del = prev[j] + unit;
      const std::int64_t ins = cur[j - 1] + unit;
      cur[j] = std::min(sub, std::min(del, ins));
    }
    prev.swap(cur);
  }
  return EditCost(prev[m], unit);
}

} // namespace peyv
