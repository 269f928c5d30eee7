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

#include "peyv/noun_lemmatizer.hpp"

#include <algorithm>
#include <map>

#include "peyv/unicode.hpp"

#include <json.hpp>

namespace peyv {

namespace {

struct Builder {
  const Lexicon& lexicon;
  const std::vector<const AffixRule*>& strippable;
  std::deque<AnalysisNode>& arena;
  std::map<std::u32string, AnalysisNode*> inner;
  std::map<std::u32string, AnalysisNode*> leaves;

  // A remainder may stand as a root (and pruning may continue through it)
  // when it is long enough or the lexicon/exception list vouches for it.
  bool viable(const std::u32string& text) const {
    return text.size() >= 3 || lexicon.contains(text) || lexicon.is_exception(text);
  }

  AnalysisNode* leaf(const std::u32string& text) {
    auto it = leaves.find(text);
    if (it != leaves.end()) return it->second;
    AnalysisNode& node = arena.emplace_back();
    node.text = text;
    node.accepted = viable(text);
    leaves.emplace(text, &node);
    return &node;
  }

  AnalysisNode* expand(const std::u32string& text) {
    auto it = inner.find(text);
    if (it != inner.end()) return it->second;
    AnalysisNode& node = arena.emplace_back();
    node.text = text;
    inner.emplace(text, &node);

    if (!lexicon.is_exception(text)) {
      for (const AffixRule* rule : strippable) {
        const std::size_t flen = rule->form.size();
        if (text.size() <= flen) continue;
        std::u32string rest;
        if (rule->side == AffixSide::suffix) {
          if (text.compare(text.size() - flen, flen, rule->form) != 0) continue;
          rest = text.substr(0, text.size() - flen);
        } else {
          if (text.compare(0, flen, rule->form) != 0) continue;
          rest = text.substr(flen);
        }
        if (!viable(rest)) continue;
        node.children.push_back({rule, expand(rest)});
      }
    }
    node.children.push_back({nullptr, leaf(text)});
    return &node;
  }
};

} // namespace

NounLemmatizer::NounLemmatizer(const Lexicon& lexicon, const AffixInventory& affixes)
    : lexicon_(lexicon), strippable_(affixes.noun_strippable()) {}

std::shared_ptr<const AnalysisTree> NounLemmatizer::analyze(const std::u32string& word) const {
  auto tree = std::make_shared<AnalysisTree>();
  Builder builder{lexicon_, strippable_, tree->arena_, {}, {}};
  tree->root_ = builder.expand(word);
  return tree;
}

std::vector<AnalysisTree::AcceptedLeaf> AnalysisTree::accepted_leaves() const {
  // Affix edges strictly shorten the text and empty-morpheme edges lead to
  // terminal leaves, so processing inner nodes by decreasing text length is
  // a topological order; one pass computes the deepest path to every node.
  std::map<const AnalysisNode*, int> depth;
  depth[root_] = 0;
  std::vector<const AnalysisNode*> order;
  for (const AnalysisNode& node : arena_)
    if (!node.is_leaf()) order.push_back(&node);
  std::stable_sort(order.begin(), order.end(),
                   [](const AnalysisNode* a, const AnalysisNode* b) {
                     return a->text.size() > b->text.size();
                   });
  for (const AnalysisNode* node : order) {
    auto here = depth.find(node);
    if (here == depth.end()) continue; // unreachable
    for (const AnalysisEdge& edge : node->children) {
      const int next = here->second + (edge.affix ? 1 : 0);
      auto [it, fresh] = depth.emplace(edge.child, next);
      if (!fresh && it->second < next) it->second = next;
    }
  }
  std::vector<AcceptedLeaf> out;
  for (const AnalysisNode& node : arena_) {
    if (!node.is_leaf() || !node.accepted) continue;
    auto it = depth.find(&node);
    if (it != depth.end()) out.push_back({&node, it->second});
  }
  return out;
}

Lemma NounLemmatizer::lemmatize(const std::u32string& word) const {
  Lemma lemma;
  lemma.pos = Pos::noun;
  lemma.root = word;

  if (lexicon_.is_exception(word)) {
    lemma.confidence = Confidence::lexicon_match;
    lemma.analysis = analyze(word);
    return lemma;
  }
  if (word.size() < 3) {
    lemma.confidence = Confidence::heuristic;
    return lemma;
  }

  auto tree = analyze(word);
  lemma.analysis = tree;
  auto candidates = tree->accepted_leaves();
  const AnalysisTree::AcceptedLeaf* best = nullptr;
  bool best_noun = false;
  for (const auto& cand : candidates) {
    const bool cand_noun = lexicon_.contains_noun(cand.node->text);
    if (best) {
      if (cand_noun != best_noun) {
        if (!cand_noun) continue;
      } else if (cand.depth != best->depth) {
        if (cand.depth < best->depth) continue;
      } else if (cand.node->text.size() != best->node->text.size()) {
        if (cand.node->text.size() < best->node->text.size()) continue;
      } else if (cand.node->text >= best->node->text) {
        continue;
      }
    }
    best = &cand;
    best_noun = cand_noun;
  }
  if (best) lemma.root = best->node->text;
  lemma.confidence = lexicon_.contains(lemma.root) || lexicon_.is_exception(lemma.root)
                         ? Confidence::lexicon_match
                         : Confidence::heuristic;
  return lemma;
}

namespace {

std::string edge_label(const AnalysisEdge& edge) {
  if (!edge.affix) return "E";
  const std::string form = utf8_encode(edge.affix->form);
  return edge.affix->side == AffixSide::suffix ? "-" + form : form + "-";
}

void render_node(const AnalysisNode& node, int indent, std::string& out) {
  for (const AnalysisEdge& edge : node.children) {
    out.append(static_cast<std::size_t>(indent) * 2, ' ');
    out += edge_label(edge);
    out += " -> ";
    out += utf8_encode(edge.child->text);
    if (edge.child->is_leaf() && edge.child->accepted) out += " *";
    out += '\n';
    render_node(*edge.child, indent + 1, out);
  }
}

nlohmann::ordered_json node_json(const AnalysisNode& node) {
  nlohmann::ordered_json j;
  j["text"] = utf8_encode(node.text);
  if (node.is_leaf()) {
    j["accepted"] = node.accepted;
    return j;
  }
  auto& children = j["children"] = nlohmann::ordered_json::array();
  for (const AnalysisEdge& edge : node.children) {
    nlohmann::ordered_json e;
    e["affix"] = edge_label(edge);
    e["node"] = node_json(*edge.child);
    children.push_back(std::move(e));
  }
  return j;
}

} // namespace

std::string render_tree(const AnalysisTree& tree) {
  std::string out = utf8_encode(tree.root().text) + "\n";
  render_node(tree.root(), 1, out);
  return out;
}

std::string tree_to_json_string(const AnalysisTree& tree) {
  return node_json(tree.root()).dump(2);
}

} // namespace peyv
