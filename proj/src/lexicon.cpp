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

#include "peyv/lexicon.hpp"

#include <algorithm>

#include "peyv/errors.hpp"
#include "peyv/textfile.hpp"
#include "peyv/unicode.hpp"

namespace peyv {

namespace {

constexpr char32_t kNoonFinal = U'ن'; // ن, final letter of regular infinitives

std::string where(const std::string& path, std::size_t lineno) {
  return path + ":" + std::to_string(lineno);
}

Pos parse_pos(const std::string& text, const std::string& context) {
  if (text == "noun") return Pos::noun;
  if (text == "verb") return Pos::verb;
  if (text == "other") return Pos::other;
  throw ParseError(context + ": unknown pos '" + text + "'");
}

bool entry_order(const LexiconEntry& a, const LexiconEntry& b) {
  if (a.surface != b.surface) return a.surface < b.surface;
  return static_cast<int>(a.pos) < static_cast<int>(b.pos);
}

} // namespace

const char* pos_name(Pos pos) {
  switch (pos) {
    case Pos::noun: return "noun";
    case Pos::verb: return "verb";
    case Pos::other: return "other";
  }
  return "other";
}

Lexicon Lexicon::load(const std::string& path, const NormalizationTable& table) {
  Lexicon lex;
  const auto lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 5)
      throw ParseError(where(path, i + 1) + ": expected 5 tab-separated fields, got " +
                       std::to_string(fields.size()));
    LexiconEntry entry;
    try {
      entry.surface = table.apply(utf8_decode(fields[0]));
      entry.pos = parse_pos(fields[1], where(path, i + 1));
      entry.past_stem = table.apply(utf8_decode(fields[2]));
      entry.present_stem = table.apply(utf8_decode(fields[3]));
    } catch (const ParseError& e) {
      throw ParseError(where(path, i + 1) + ": " + e.what());
    }
    if (entry.surface.empty()) throw ParseError(where(path, i + 1) + ": empty surface");
    for (const auto& flag : split(fields[4], ',')) {
      if (flag.empty()) continue;
      if (flag == "irregular") entry.irregular = true;
      else if (flag == "transitive") entry.transitive = true;
      else if (flag == "intransitive") entry.transitive = false;
      else throw ParseError(where(path, i + 1) + ": unknown flag '" + flag + "'");
    }
    lex.entries_.push_back(std::move(entry));
  }
  lex.finish(path);
  return lex;
}

void Lexicon::finish(const std::string& path) {
  std::sort(entries_.begin(), entries_.end(), entry_order);
  entries_.erase(std::unique(entries_.begin(), entries_.end()), entries_.end());

  std::vector<std::string> problems;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const LexiconEntry& e = entries_[i];
    if (i > 0 && e.surface == entries_[i - 1].surface && e.pos == entries_[i - 1].pos)
      problems.push_back("conflicting duplicate entries for '" + utf8_encode(e.surface) + "'");
    if (e.pos == Pos::verb) {
      if (e.past_stem.empty())
        problems.push_back("verb '" + utf8_encode(e.surface) + "' has no past stem");
      if (e.present_stem.empty())
        problems.push_back("verb '" + utf8_encode(e.surface) + "' has no present stem");
      if (!e.irregular) {
        if (e.surface.size() < 2 || e.surface.back() != kNoonFinal)
          problems.push_back("verb '" + utf8_encode(e.surface) +
                             "' does not end in the infinitive final letter; flag it irregular");
        else if (e.past_stem != e.surface.substr(0, e.surface.size() - 1))
          problems.push_back("verb '" + utf8_encode(e.surface) +
                             "' past stem is not the infinitive minus its final letter");
      }
    } else {
      if (!e.past_stem.empty() || !e.present_stem.empty())
        problems.push_back("non-verb '" + utf8_encode(e.surface) + "' carries verb stems");
      if (e.transitive.has_value())
        problems.push_back("non-verb '" + utf8_encode(e.surface) + "' carries a transitivity flag");
    }
  }
  if (!problems.empty()) {
    std::string msg = path + ": " + std::to_string(problems.size()) + " problem(s)";
    for (const auto& p : problems) msg += "\n  " + p;
    throw ValidationError(msg);
  }

  stem_trie_ = Trie();
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const LexiconEntry& e = entries_[i];
    if (e.pos != Pos::verb) continue;
    stem_trie_.insert(e.past_stem, static_cast<int>(i) * 2);
    stem_trie_.insert(e.present_stem, static_cast<int>(i) * 2 + 1);
  }
}

void Lexicon::load_exceptions(const std::string& path, const NormalizationTable& table) {
  const auto lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty() || line[0] == '#') continue;
    std::u32string word;
    try {
      word = table.apply(utf8_decode(line));
    } catch (const ParseError& e) {
      throw ParseError(where(path, i + 1) + ": " + e.what());
    }
    if (word.empty()) throw ParseError(where(path, i + 1) + ": empty word");
    if (word.find(U'\t') != std::u32string::npos || word.find(U' ') != std::u32string::npos)
      throw ParseError(where(path, i + 1) + ": expected a single word");
    exceptions_.insert(std::move(word));
  }
}

void Lexicon::save(const std::string& path) const {
  std::string out = "# surface\tpos\tpast stem\tpresent stem\tflags\n";
  for (const LexiconEntry& e : entries_) {
    out += utf8_encode(e.surface);
    out += '\t';
    out += pos_name(e.pos);
    out += '\t';
    out += utf8_encode(e.past_stem);
    out += '\t';
    out += utf8_encode(e.present_stem);
    out += '\t';
    std::string flags;
    if (e.irregular) flags = "irregular";
    if (e.transitive.has_value()) {
      if (!flags.empty()) flags += ',';
      flags += *e.transitive ? "transitive" : "intransitive";
    }
    out += flags;
    out += '\n';
  }
  write_file(path, out);
}

std::vector<const LexiconEntry*> Lexicon::find(const std::u32string& surface) const {
  std::vector<const LexiconEntry*> out;
  LexiconEntry probe;
  probe.surface = surface;
  probe.pos = Pos::noun;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), probe, entry_order);
  for (; it != entries_.end() && it->surface == surface; ++it) out.push_back(&*it);
  return out;
}

const LexiconEntry* Lexicon::find_verb(const std::u32string& surface) const {
  for (const LexiconEntry* e : find(surface))
    if (e->pos == Pos::verb) return e;
  return nullptr;
}

bool Lexicon::contains(const std::u32string& surface) const { return !find(surface).empty(); }

bool Lexicon::contains_noun(const std::u32string& surface) const {
  for (const LexiconEntry* e : find(surface))
    if (e->pos == Pos::noun) return true;
  return false;
}

std::vector<StemMatch> Lexicon::candidate_stems(const std::u32string& word) const {
  std::vector<StemMatch> out;
  for (std::size_t offset = 0; offset < word.size(); ++offset) {
    const std::u32string tail = word.substr(offset);
    for (const auto& [length, ids] : stem_trie_.prefix_matches(tail)) {
      for (int id : *ids) {
        StemMatch m;
        m.entry = id / 2;
        m.tense = id % 2 == 0 ? StemTense::past : StemTense::present;
        m.offset = offset;
        m.length = length;
        out.push_back(m);
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [this](const StemMatch& a, const StemMatch& b) {
    if (a.length != b.length) return a.length > b.length;
    if (a.offset != b.offset) return a.offset < b.offset;
    const std::u32string& sa = entries_[a.entry].surface;
    const std::u32string& sb = entries_[b.entry].surface;
    if (sa != sb) return sa < sb;
    return static_cast<int>(a.tense) < static_cast<int>(b.tense);
  });
  // Keep one occurrence per (entry, stem): later ones generate the same forms.
  std::vector<StemMatch> unique;
  for (const StemMatch& m : out) {
    bool seen = false;
    for (const StemMatch& u : unique)
      if (u.entry == m.entry && u.tense == m.tense) { seen = true; break; }
    if (!seen) unique.push_back(m);
  }
  return unique;
}

Lexicon::Counts Lexicon::counts() const {
  Counts c;
  for (const LexiconEntry& e : entries_) {
    if (e.pos == Pos::noun) ++c.nouns;
    else if (e.pos == Pos::verb) ++c.verbs;
    else ++c.other;
  }
  c.exceptions = exceptions_.size();
  return c;
}

} // namespace peyv
