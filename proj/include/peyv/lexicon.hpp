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

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "peyv/orthography.hpp"
#include "peyv/trie.hpp"

namespace peyv {

enum class Pos { noun, verb, other };

const char* pos_name(Pos pos);

// One headword. Verbs carry a past stem (for regular verbs the infinitive
// minus its final ن) and a present stem, which is not predictable from the
// infinitive and must be listed. Compound verbs keep their internal space.
struct LexiconEntry {
  std::u32string surface;
  Pos pos = Pos::other;
  std::u32string past_stem;
  std::u32string present_stem;
  bool irregular = false;
  std::optional<bool> transitive; // unset: usable with any template

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

enum class StemTense { past, present };

// A verb stem found inside a word, by codepoint offset.
struct StemMatch {
  int entry = -1;
  StemTense tense = StemTense::past;
  std::size_t offset = 0;
  std::size_t length = 0;
};

class Lexicon {
public:
  Lexicon() = default;

  // TSV columns: surface, pos, past stem, present stem, flags. pos is one of
  // noun/verb/other; flags is a comma list of irregular, transitive,
  // intransitive. All text is normalized on the way in. Entries are kept
  // sorted by (surface, pos); exact duplicates collapse, conflicting
  // duplicates are an error.
  static Lexicon load(const std::string& path, const NormalizationTable& table);

  // One word per line; '#' comments and blank lines are skipped. These words
  // are never pruned by the noun lemmatizer even when they look affixed.
  void load_exceptions(const std::string& path, const NormalizationTable& table);

  void save(const std::string& path) const;

  const std::vector<LexiconEntry>& entries() const { return entries_; }
  const std::set<std::u32string>& exceptions() const { return exceptions_; }

  std::vector<const LexiconEntry*> find(const std::u32string& surface) const;
  const LexiconEntry* find_verb(const std::u32string& surface) const;
  bool contains(const std::u32string& surface) const;
  bool contains_noun(const std::u32string& surface) const;
  bool is_exception(const std::u32string& word) const { return exceptions_.count(word) != 0; }

  // Verb stems occurring as substrings of word, longest first, then by
  // offset, then by infinitive. Each (entry, stem) pair is reported once.
  std::vector<StemMatch> candidate_stems(const std::u32string& word) const;

  struct Counts {
    std::size_t nouns = 0;
    std::size_t verbs = 0;
    std::size_t other = 0;
    std::size_t exceptions = 0;
  };
  Counts counts() const;

private:
  void finish(const std::string& path);

  std::vector<LexiconEntry> entries_; // sorted by (surface, pos)
  std::set<std::u32string> exceptions_;
  Trie stem_trie_; // ids encode entry index * 2 + (1 for present stems)
};

} // namespace peyv
