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
#include <string>
#include <vector>

#include "peyv/orthography.hpp"

namespace peyv {

enum class AffixSide { prefix, suffix };
enum class AffixKind { inflectional, derivational };

struct AffixRule {
  std::u32string form;
  AffixSide side = AffixSide::suffix;
  AffixKind kind = AffixKind::inflectional;
  bool applies_to_noun = false;
  bool applies_to_verb = false;
  std::string gloss;

  friend bool operator==(const AffixRule&, const AffixRule&) = default;
};

// The affix inventory the noun lemmatizer strips. Only inflectional rules
// are ever removed; derivational ones are listed so tooling can report them
// but they stay part of the lemma (خانە in قوتابخانە is not peeled off).
class AffixInventory {
public:
  AffixInventory() = default;

  // TSV columns: form, side (prefix/suffix), kind (inflectional/
  // derivational), pos scope (comma list of noun/verb), gloss.
  static AffixInventory load(const std::string& path, const NormalizationTable& table);

  const std::vector<AffixRule>& rules() const { return rules_; }

  struct Counts {
    std::size_t inflectional = 0;
    std::size_t derivational = 0;
    std::size_t prefixes = 0;
    std::size_t suffixes = 0;
  };
  Counts counts() const;

  // Inflectional rules applying to nouns, suffixes first, longer forms
  // first. This is the order the lemmatizer tries them in.
  std::vector<const AffixRule*> noun_strippable() const;

private:
  std::vector<AffixRule> rules_;
};

} // namespace peyv
