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

#include "peyv/verb_lemmatizer.hpp"

#include <algorithm>
#include <set>

#include "peyv/errors.hpp"
#include "peyv/textfile.hpp"
#include "peyv/unicode.hpp"

namespace peyv {

namespace {

std::string where(const std::string& path, std::size_t lineno) {
  return path + ":" + std::to_string(lineno);
}

std::u32string decode_field(const std::string& text, const NormalizationTable& table,
                            const std::string& context) {
  try {
    return table.apply(utf8_decode(text));
  } catch (const ParseError& e) {
    throw ParseError(context + ": " + e.what());
  }
}

std::pair<Person, Number> parse_person_label(const std::string& label, const std::string& context) {
  if (label.size() == 2 && (label[1] == 's' || label[1] == 'p')) {
    const Number number = label[1] == 's' ? Number::singular : Number::plural;
    if (label[0] == '1') return {Person::first, number};
    if (label[0] == '2') return {Person::second, number};
    if (label[0] == '3') return {Person::third, number};
  }
  throw ParseError(context + ": unknown person label '" + label + "'");
}

StemTense parse_tense(const std::string& text, const std::string& context) {
  if (text == "past") return StemTense::past;
  if (text == "present") return StemTense::present;
  throw ParseError(context + ": unknown tense '" + text + "'");
}

} // namespace

std::string to_string(const VerbFeatures& f) {
  std::string out = "tense=";
  out += f.tense == StemTense::past ? "past" : "present";
  out += " person=";
  out += f.person == Person::first ? "1" : f.person == Person::second ? "2" : "3";
  out += " number=";
  out += f.number == Number::singular ? "sg" : "pl";
  out += " polarity=";
  out += f.polarity == Polarity::affirmative ? "aff" : "neg";
  out += " voice=";
  out += f.voice == Voice::active ? "active" : "passive";
  out += " mood=";
  out += f.mood == Mood::indicative ? "indicative" : "imperative";
  return out;
}

std::vector<VerbTemplate> load_verb_templates(const std::string& path,
                                              const NormalizationTable& table) {
  std::vector<VerbTemplate> templates;
  const auto lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty() || line[0] == '#') continue;
    const std::string context = where(path, i + 1);
    const auto fields = split(line, '\t');
    if (fields.size() != 4 && fields.size() != 5)
      throw ParseError(context + ": expected 4 or 5 tab-separated fields, got " +
                       std::to_string(fields.size()));

    VerbTemplate t;
    t.stem_tense = parse_tense(fields[0], context);
    t.tense = t.stem_tense;

    for (const auto& slot_text : split(fields[1], '|')) {
      TemplateSlot slot;
      for (auto alt_text : split(slot_text, ',')) {
        SlotAlternative alt;
        if (!alt_text.empty() && alt_text[0] == '!') {
          alt.negation = true;
          alt_text.erase(0, 1);
        }
        if (alt_text != "-") alt.form = decode_field(alt_text, table, context);
        if (alt.form.empty() && alt.negation)
          throw ParseError(context + ": negation alternative with empty form");
        slot.alternatives.push_back(std::move(alt));
      }
      if (slot.alternatives.empty()) throw ParseError(context + ": slot with no alternatives");
      t.slots.push_back(std::move(slot));
    }

    std::set<std::string> labels_seen;
    for (const auto& pair : split(fields[2], ';')) {
      const std::size_t eq = pair.find('=');
      if (eq == std::string::npos) throw ParseError(context + ": ending without '=': " + pair);
      const std::string label = pair.substr(0, eq);
      const std::string form_text = pair.substr(eq + 1);
      PersonEnding ending;
      std::tie(ending.person, ending.number) = parse_person_label(label, context);
      if (form_text != "-") ending.form = decode_field(form_text, table, context);
      labels_seen.insert(label);
      t.endings.push_back(std::move(ending));
    }
    if (labels_seen.size() != 6)
      throw ParseError(context + ": endings must cover all six persons, got " +
                       std::to_string(labels_seen.size()));

    if (fields[3] == "both") t.transitive_scope.reset();
    else if (fields[3] == "transitive") t.transitive_scope = true;
    else if (fields[3] == "intransitive") t.transitive_scope = false;
    else throw ParseError(context + ": unknown transitivity '" + fields[3] + "'");

    if (fields.size() == 5 && !fields[4].empty()) {
      for (const auto& pair : split(fields[4], ';')) {
        const std::size_t eq = pair.find('=');
        if (eq == std::string::npos) throw ParseError(context + ": feature without '=': " + pair);
        const std::string key = pair.substr(0, eq);
        const std::string value = pair.substr(eq + 1);
        if (key == "tense") t.tense = parse_tense(value, context);
        else if (key == "voice") {
          if (value == "active") t.voice = Voice::active;
          else if (value == "passive") t.voice = Voice::passive;
          else throw ParseError(context + ": unknown voice '" + value + "'");
        } else if (key == "mood") {
          if (value == "indicative") t.mood = Mood::indicative;
          else if (value == "imperative") t.mood = Mood::imperative;
          else throw ParseError(context + ": unknown mood '" + value + "'");
        } else {
          throw ParseError(context + ": unknown feature '" + key + "'");
        }
      }
    }
    templates.push_back(std::move(t));
  }
  return templates;
}

VerbLemmatizer::VerbLemmatizer(const Lexicon& lexicon, std::vector<VerbTemplate> templates)
    : lexicon_(lexicon), templates_(std::move(templates)) {}

std::vector<GeneratedForm> VerbLemmatizer::generate_forms(const LexiconEntry& entry) const {
  std::vector<GeneratedForm> out;
  if (entry.pos != Pos::verb) return out;
  for (const VerbTemplate& t : templates_) {
    if (t.transitive_scope && entry.transitive && *t.transitive_scope != *entry.transitive)
      continue;
    const std::u32string& stem = t.stem_tense == StemTense::past ? entry.past_stem
                                                                 : entry.present_stem;
    // Odometer over the slot alternatives gives the Cartesian product in a
    // stable order: leftmost slot varies slowest, endings fastest.
    std::vector<std::size_t> pick(t.slots.size(), 0);
    while (true) {
      std::u32string prefix;
      bool negated = false;
      for (std::size_t s = 0; s < t.slots.size(); ++s) {
        const SlotAlternative& alt = t.slots[s].alternatives[pick[s]];
        prefix += alt.form;
        negated = negated || alt.negation;
      }
      for (const PersonEnding& ending : t.endings) {
        GeneratedForm form;
        form.surface = prefix + stem + ending.form;
        form.stem_entry = &entry;
        form.pattern = &t;
        form.stem_used = stem;
        form.features.tense = t.tense;
        form.features.person = ending.person;
        form.features.number = ending.number;
        form.features.polarity = negated ? Polarity::negative : Polarity::affirmative;
        form.features.voice = t.voice;
        form.features.mood = t.mood;
        out.push_back(std::move(form));
      }
      bool done = t.slots.empty();
      std::size_t s = t.slots.size();
      while (s > 0) {
        --s;
        if (++pick[s] < t.slots[s].alternatives.size()) break;
        pick[s] = 0;
        if (s == 0) done = true;
      }
      if (done) break;
    }
  }
  return out;
}

std::vector<GeneratedForm> VerbLemmatizer::matches(const std::u32string& word) const {
  std::vector<GeneratedForm> hits;
  std::set<const LexiconEntry*> tried;
  for (const StemMatch& match : lexicon_.candidate_stems(word)) {
    const LexiconEntry& entry = lexicon_.entries()[static_cast<std::size_t>(match.entry)];
    if (!tried.insert(&entry).second) continue;
    for (GeneratedForm& form : generate_forms(entry))
      if (form.surface == word) hits.push_back(std::move(form));
  }
  std::stable_sort(hits.begin(), hits.end(), [](const GeneratedForm& a, const GeneratedForm& b) {
    if (a.stem_used.size() != b.stem_used.size()) return a.stem_used.size() > b.stem_used.size();
    const bool a_past = a.pattern->stem_tense == StemTense::past;
    const bool b_past = b.pattern->stem_tense == StemTense::past;
    if (a_past != b_past) return a_past;
    return a.stem_entry->surface < b.stem_entry->surface;
  });
  return hits;
}

std::optional<Lemma> VerbLemmatizer::lemmatize(const std::u32string& word) const {
  const auto hits = matches(word);
  if (hits.empty()) return std::nullopt;
  Lemma lemma;
  lemma.root = hits.front().stem_entry->surface;
  lemma.pos = Pos::verb;
  lemma.confidence = Confidence::lexicon_match;
  lemma.verb = hits.front().features;
  return lemma;
}

} // namespace peyv
