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

#include <memory>
#include <optional>
#include <string>

#include "peyv/lexicon.hpp"

namespace peyv {

enum class Person { first, second, third };
enum class Number { singular, plural };
enum class Polarity { affirmative, negative };
enum class Voice { active, passive };
enum class Mood { indicative, imperative };

struct VerbFeatures {
  StemTense tense = StemTense::past;
  Person person = Person::first;
  Number number = Number::singular;
  Polarity polarity = Polarity::affirmative;
  Voice voice = Voice::active;
  Mood mood = Mood::indicative;

  friend bool operator==(const VerbFeatures&, const VerbFeatures&) = default;
};

// "tense=past person=3 number=sg polarity=neg voice=active mood=indicative"
std::string to_string(const VerbFeatures& f);

enum class Confidence { lexicon_match, heuristic };

class AnalysisTree; // noun_lemmatizer.hpp

// A lemmatization result. Noun analyses carry the pruning tree; verb matches
// carry the feature record of the generated form that matched.
struct Lemma {
  std::u32string root;
  Pos pos = Pos::noun;
  Confidence confidence = Confidence::heuristic;
  std::shared_ptr<const AnalysisTree> analysis;
  std::optional<VerbFeatures> verb;
};

} // namespace peyv
