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

#include <deque>
#include <memory>
#include <string>
#include <vector>

#include "peyv/affixes.hpp"
#include "peyv/lemma.hpp"
#include "peyv/lexicon.hpp"

namespace peyv {

struct AnalysisNode;

// One branch taken while pruning: either a removed inflectional affix, or
// the empty morpheme (affix == nullptr) meaning "stop here and treat the
// remainder as a root candidate".
struct AnalysisEdge {
  const AffixRule* affix = nullptr;
  const AnalysisNode* child = nullptr;
};

struct AnalysisNode {
  std::u32string text;
  bool accepted = false; // meaningful on leaves only
  std::vector<AnalysisEdge> children;

  bool is_leaf() const { return children.empty(); }
};

// The full branching structure explored for one word. Shared remainders are
// expanded once, so the structure is a DAG rendered as a tree.
class AnalysisTree {
public:
  const AnalysisNode& root() const { return *root_; }
  const std::u32string& word() const { return root_->text; }

  // Leaves reachable from the root that satisfy the root criteria, each with
  // the largest number of removed affixes over all paths reaching it.
  struct AcceptedLeaf {
    const AnalysisNode* node = nullptr;
    int depth = 0;
  };
  std::vector<AcceptedLeaf> accepted_leaves() const;

private:
  friend class NounLemmatizer;
  std::deque<AnalysisNode> arena_;
  const AnalysisNode* root_ = nullptr;
};

// Indented one-line-per-edge rendering for terminal output.
std::string render_tree(const AnalysisTree& tree);
// Nested-record rendering (one JSON document) for machine consumption.
std::string tree_to_json_string(const AnalysisTree& tree);

// Recursive affix pruning for nouns. At every node each matching removable
// suffix and prefix opens a branch, and an empty-morpheme branch records the
// option of stopping. Exception words are never pruned, and no branch may
// shrink the remainder below 3 codepoints unless it lands on a lexicon entry.
class NounLemmatizer {
public:
  NounLemmatizer(const Lexicon& lexicon, const AffixInventory& affixes);

  std::shared_ptr<const AnalysisTree> analyze(const std::u32string& word) const;
  Lemma lemmatize(const std::u32string& word) const;

private:
  const Lexicon& lexicon_;
  std::vector<const AffixRule*> strippable_;
};

} // namespace peyv
