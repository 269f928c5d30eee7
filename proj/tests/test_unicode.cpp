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

#include "oracles.hpp"
#include "peyv/errors.hpp"
#include "peyv/textfile.hpp"
#include "peyv/unicode.hpp"

using peyv::utf8_decode;
using peyv::utf8_encode;

TEST_CASE("codec round-trips across plane boundaries") {
  const std::u32string samples[] = {
      U"",
      U"abc",
      U"گوڵەکانمان",
      U"سەیر کردن",
      std::u32string{0x7F, 0x80, 0x7FF, 0x800, 0xFFFF, 0x10000, 0x10FFFF},
  };
  for (const auto& s : samples) CHECK(utf8_decode(utf8_encode(s)) == s);
}

TEST_CASE("decoder rejects malformed input with a byte offset") {
  // stray continuation byte
  CHECK_THROWS_AS(utf8_decode(std::string("\x80")), peyv::ParseError);
  // truncated two-byte sequence
  CHECK_THROWS_AS(utf8_decode(std::string("\xD9")), peyv::ParseError);
  // overlong encoding of '/'
  CHECK_THROWS_AS(utf8_decode(std::string("\xC0\xAF")), peyv::ParseError);
  // surrogate half
  CHECK_THROWS_AS(utf8_decode(std::string("\xED\xA0\x80")), peyv::ParseError);
  // beyond U+10FFFF
  CHECK_THROWS_AS(utf8_decode(std::string("\xF4\x90\x80\x80")), peyv::ParseError);
  try {
    utf8_decode(std::string("ab\x80"));
    FAIL("expected a parse error");
  } catch (const peyv::ParseError& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("line splitting handles CRLF and a leading byte-order mark") {
  const auto lines = peyv::split_lines("\xEF\xBB\xBF" "first\r\nsecond\nthird");
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "first");
  CHECK(lines[1] == "second");
  CHECK(lines[2] == "third");
  CHECK(peyv::split_lines("").empty());
  const auto trailing = peyv::split_lines("one\n");
  REQUIRE(trailing.size() == 1);
  CHECK(trailing[0] == "one");
}

TEST_CASE("file reading reports missing paths as I/O errors") {
  CHECK_THROWS_AS(peyv::read_file("/nonexistent/peyv/file.txt"), peyv::IoError);
  testutil::TempDir tmp;
  const std::string p = tmp.file("roundtrip.txt", "data\n");
  CHECK(peyv::read_file(p) == "data\n");
}

TEST_CASE("field splitting keeps empty fields") {
  const auto f = peyv::split("a\t\tb\t", '\t');
  REQUIRE(f.size() == 4);
  CHECK(f[0] == "a");
  CHECK(f[1] == "");
  CHECK(f[2] == "b");
  CHECK(f[3] == "");
}
