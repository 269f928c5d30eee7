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

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace peyv {

// Codepoint trie mapping keys to lists of integer ids. Nodes live in one
// vector; children are kept sorted for binary search.
class Trie {
public:
  Trie() { nodes_.emplace_back(); }

  void insert(const std::u32string& key, int id) {
    std::size_t node = 0;
    for (char32_t c : key) node = child(node, c, /*create=*/true);
    nodes_[node].ids.push_back(id);
  }

  const std::vector<int>* find(const std::u32string& key) const {
    std::size_t node = 0;
    for (char32_t c : key) {
      const std::size_t next = child_of(node, c);
      if (next == npos) return nullptr;
      node = next;
    }
    return nodes_[node].ids.empty() ? nullptr : &nodes_[node].ids;
  }

  bool contains(const std::u32string& key) const { return find(key) != nullptr; }

  // All inserted keys that are prefixes of word, as (key length, ids).
  std::vector<std::pair<std::size_t, const std::vector<int>*>>
  prefix_matches(const std::u32string& word) const {
    std::vector<std::pair<std::size_t, const std::vector<int>*>> out;
    std::size_t node = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
      const std::size_t next = child_of(node, word[i]);
      if (next == npos) return out;
      node = next;
      if (!nodes_[node].ids.empty()) out.emplace_back(i + 1, &nodes_[node].ids);
    }
    return out;
  }

  bool empty() const { return nodes_.size() == 1 && nodes_[0].ids.empty(); }

private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  struct Node {
    std::vector<std::pair<char32_t, std::size_t>> children; // sorted by codepoint
    std::vector<int> ids;
  };

  std::size_t child_of(std::size_t node, char32_t c) const {
    const auto& kids = nodes_[node].children;
    auto it = std::lower_bound(kids.begin(), kids.end(), c,
                               [](const auto& kid, char32_t key) { return kid.first < key; });
    if (it == kids.end() || it->first != c) return npos;
    return it->second;
  }

  std::size_t child(std::size_t node, char32_t c, bool create) {
    const std::size_t found = child_of(node, c);
    if (found != npos || !create) return found;
    nodes_.emplace_back();
    const std::size_t fresh = nodes_.size() - 1;
    auto& kids = nodes_[node].children;
    auto it = std::lower_bound(kids.begin(), kids.end(), c,
                               [](const auto& kid, char32_t key) { return kid.first < key; });
    kids.insert(it, {c, fresh});
    return fresh;
  }

  std::vector<Node> nodes_;
};

} // namespace peyv
