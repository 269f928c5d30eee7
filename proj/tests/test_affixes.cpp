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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "peyv/affixes.hpp"
#include "peyv/errors.hpp"

using peyv::AffixInventory;
using peyv::AffixKind;
using peyv::AffixSide;
using testutil::u32;

namespace {
const AffixInventory& inventory() { return testutil::fixtures().affixes; }
} // namespace

TEST_CASE("starter inventory counts") {
  const auto counts = inventory().counts();
  CHECK(counts.inflectional == 45);
  CHECK(counts.derivational == 6);
  CHECK(counts.inflectional + counts.derivational == inventory().rules().size());
}

TEST_CASE("noun stripping set is inflectional, noun-scoped, and longest-first") {
  const auto rules = inventory().noun_strippable();
  CHECK(rules.size() == 36);
  std::set<std::u32string> forms;
  for (const auto* r : rules) {
    CHECK(r->kind == AffixKind::inflectional);
    CHECK(r->applies_to_noun);
    forms.insert(r->form);
  }
  CHECK(forms.size() == rules.size()); // distinct forms within a side
  // suffixes precede prefixes; within a side longer forms come first
  bool seen_prefix = false;
  std::size_t last_len = SIZE_MAX;
  for (const auto* r : rules) {
    if (r->side == AffixSide::prefix) {
      seen_prefix = true;
      last_len = SIZE_MAX;
    } else {
      CHECK_FALSE(seen_prefix);
    }
    CHECK(r->form.size() <= last_len);
    last_len = r->form.size();
  }
  // derivational material must never appear
  for (const auto* r : rules) CHECK(r->form != u32("ستان"));
}

TEST_CASE("duplicate rows with different scopes are rejected") {
  testutil::TempDir tmp;
  const std::string body =
      "ان\tsuffix\tinflectional\tnoun\tplural\n"
      "ان\tsuffix\tinflectional\tverb\tsomething else\n";
  CHECK_THROWS_AS(
      AffixInventory::load(tmp.file("dup.tsv", body), testutil::fixtures().table),
      peyv::ValidationError);
}

TEST_CASE("identical duplicate rows collapse") {
  testutil::TempDir tmp;
  const std::string body =
      "ان\tsuffix\tinflectional\tnoun\tplural\n"
      "ان\tsuffix\tinflectional\tnoun\tplural\n";
  const AffixInventory inv =
      AffixInventory::load(tmp.file("dup2.tsv", body), testutil::fixtures().table);
  CHECK(inv.rules().size() == 1);
}

TEST_CASE("parse errors name the offending line") {
  testutil::TempDir tmp;
  const auto& table = testutil::fixtures().table;
  CHECK_THROWS_AS(AffixInventory::load(tmp.file("a.tsv", "ان\tsuffix\n"), table),
                  peyv::ParseError);
  CHECK_THROWS_AS(
      AffixInventory::load(tmp.file("b.tsv", "ان\tinfix\tinflectional\tnoun\tx\n"), table),
      peyv::ParseError);
  CHECK_THROWS_AS(
      AffixInventory::load(tmp.file("c.tsv", "ان\tsuffix\tclitic\tnoun\tx\n"), table),
      peyv::ParseError);
  CHECK_THROWS_AS(
      AffixInventory::load(tmp.file("d.tsv", "ان\tsuffix\tinflectional\tadverb\tx\n"), table),
      peyv::ParseError);
  try {
    AffixInventory::load(tmp.file("e.tsv", "# fine\nان\tsuffix\n"), table);
    FAIL("expected a parse error");
  } catch (const peyv::ParseError& e) {
    CHECK(std::string(e.what()).find(":2") != std::string::npos);
  }
}
