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

#include <string>
#include <vector>

#include "peyv/affixes.hpp"
#include "peyv/lemma.hpp"
#include "peyv/lexicon.hpp"
#include "peyv/noun_lemmatizer.hpp"
#include "peyv/verb_lemmatizer.hpp"

namespace peyv {

// Combined entry point. Exact generative verb matching runs first; words no
// template can produce fall through to noun affix pruning.
class Lemmatizer {
public:
  Lemmatizer(const Lexicon& lexicon, const AffixInventory& affixes,
             std::vector<VerbTemplate> templates)
      : nouns_(lexicon, affixes), verbs_(lexicon, std::move(templates)), lexicon_(lexicon) {}

  Lemma lemmatize(const std::u32string& word) const {
    if (auto verb = verbs_.lemmatize(word)) return *verb;
    return nouns_.lemmatize(word);
  }

  // True when the word is vouched for: a generated verb form, a lexicon
  // entry or exception, or a noun analysis landing on one.
  bool recognizes(const std::u32string& word) const {
    if (lexicon_.contains(word) || lexicon_.is_exception(word)) return true;
    if (!verbs_.matches(word).empty()) return true;
    return nouns_.lemmatize(word).confidence == Confidence::lexicon_match;
  }

  const NounLemmatizer& nouns() const { return nouns_; }
  const VerbLemmatizer& verbs() const { return verbs_; }
  const Lexicon& lexicon() const { return lexicon_; }

private:
  NounLemmatizer nouns_;
  VerbLemmatizer verbs_;
  const Lexicon& lexicon_;
};

} // namespace peyv
