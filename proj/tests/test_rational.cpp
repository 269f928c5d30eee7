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

#include <cmath>

#include "peyv/errors.hpp"
#include "peyv/rational.hpp"

using peyv::Rational;

TEST_CASE("construction normalizes sign and reduces") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0, 1));
  CHECK(Rational(-3, 1).num() == -3);
  CHECK(Rational(-3, 1).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), peyv::ValidationError);
}

TEST_CASE("decimal parsing") {
  CHECK(Rational::parse_decimal("70") == Rational(70, 1));
  CHECK(Rational::parse_decimal("0.5") == Rational(1, 2));
  CHECK(Rational::parse_decimal("-3") == Rational(-3, 1));
  CHECK(Rational::parse_decimal("2.25") == Rational(9, 4));
  CHECK(Rational::parse_decimal("0.125") == Rational(1, 8));
  CHECK_THROWS_AS(Rational::parse_decimal(""), peyv::ParseError);
  CHECK_THROWS_AS(Rational::parse_decimal("x"), peyv::ParseError);
  CHECK_THROWS_AS(Rational::parse_decimal("1.2.3"), peyv::ParseError);
  CHECK_THROWS_AS(Rational::parse_decimal("."), peyv::ParseError);
  CHECK(Rational::parse_decimal("1.") == Rational(1, 1));
}

TEST_CASE("arithmetic stays exact") {
  const Rational half(1, 2);
  CHECK(half + half == Rational(1, 1));
  CHECK(Rational(1, 3) + Rational(1, 6) == half);
  CHECK(Rational(3, 2) - Rational(1, 2) == Rational(1, 1));
  CHECK(half * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(7, 2) / Rational(7, 1) == half);
  CHECK_THROWS_AS(half / Rational(0, 1), peyv::ValidationError);
  // a tenth summed ten times is exactly one — the double counterpart drifts
  Rational acc(0, 1);
  for (int i = 0; i < 10; ++i) acc = acc + Rational(1, 10);
  CHECK(acc == Rational(1, 1));
}

TEST_CASE("comparison is cross-multiplied, not floating point") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(2, 3) > Rational(1, 2));
  CHECK(Rational(10, 20) <= Rational(1, 2));
  // large values whose doubles collide still order correctly
  const Rational a(4000000000000001, 4000000000000000);
  const Rational b(4000000000000002, 4000000000000001);
  CHECK(b < a);
  CHECK(a != b);
}

TEST_CASE("to_string prints terminating decimals and fractions") {
  CHECK(Rational(70, 1).to_string() == "70");
  CHECK(Rational(1, 2).to_string() == "0.5");
  CHECK(Rational(9, 4).to_string() == "2.25");
  CHECK(Rational(1, 3).to_string() == "1/3");
  CHECK(Rational(-1, 2).to_string() == "-0.5");
  CHECK(Rational(0, 5).to_string() == "0");
}

TEST_CASE("to_double approximates the exact value") {
  CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
  CHECK(Rational(173, 203).to_double() == doctest::Approx(0.852216748768).epsilon(1e-9));
}
