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

#include <optional>
#include <string>
#include <vector>

#include "peyv/lemma.hpp"
#include "peyv/lexicon.hpp"
#include "peyv/orthography.hpp"

namespace peyv {

// One choice in a prefix slot. The empty form means the slot is skipped;
// a negation form flips the generated polarity.
struct SlotAlternative {
  std::u32string form;
  bool negation = false;

  friend bool operator==(const SlotAlternative&, const SlotAlternative&) = default;
};

struct TemplateSlot {
  std::vector<SlotAlternative> alternatives;

  friend bool operator==(const TemplateSlot&, const TemplateSlot&) = default;
};

struct PersonEnding {
  Person person = Person::first;
  Number number = Number::singular;
  std::u32string form;

  friend bool operator==(const PersonEnding&, const PersonEnding&) = default;
};

// A conjugation pattern: ordered prefix slots, then the stem of stem_tense,
// then one person ending. Passives and imperatives are ordinary templates
// whose feature overrides replace the defaults derived from stem_tense.
struct VerbTemplate {
  StemTense stem_tense = StemTense::past;
  std::vector<TemplateSlot> slots;
  std::vector<PersonEnding> endings;
  std::optional<bool> transitive_scope; // unset: applies to any verb
  StemTense tense = StemTense::past;    // feature reported on generated forms
  Voice voice = Voice::active;
  Mood mood = Mood::indicative;

  friend bool operator==(const VerbTemplate&, const VerbTemplate&) = default;
};

// TSV columns: stem tense (past/present), prefix slots, person endings,
// transitivity (both/transitive/intransitive), and an optional features
// column. Slots are '|'-separated; alternatives inside a slot are
// ','-separated, '-' is the empty alternative and a '!' prefix marks a
// negation form. Endings are label=form pairs ';'-separated with labels
// 1s,2s,3s,1p,2p,3p ('-' is an empty ending). The features column accepts
// tense=/voice=/mood= overrides, e.g. "voice=passive;tense=past".
std::vector<VerbTemplate> load_verb_templates(const std::string& path,
                                              const NormalizationTable& table);

struct GeneratedForm {
  std::u32string surface;
  const LexiconEntry* stem_entry = nullptr;
  const VerbTemplate* pattern = nullptr;
  std::u32string stem_used;
  VerbFeatures features;
};

// Bottom-up verb lemmatization: stems found inside the input word are
// conjugated through every applicable template and the input is compared
// against the generated surfaces. A hit maps back to the infinitive.
class VerbLemmatizer {
public:
  VerbLemmatizer(const Lexicon& lexicon, std::vector<VerbTemplate> templates);

  const std::vector<VerbTemplate>& templates() const { return templates_; }

  // Every surface the entry can produce under the applicable templates.
  std::vector<GeneratedForm> generate_forms(const LexiconEntry& entry) const;

  // Generated forms whose surface equals word, best match first: longer
  // stems win, then past-stem analyses, then the smaller infinitive.
  std::vector<GeneratedForm> matches(const std::u32string& word) const;

  std::optional<Lemma> lemmatize(const std::u32string& word) const;

private:
  const Lexicon& lexicon_;
  std::vector<VerbTemplate> templates_;
};

} // namespace peyv
