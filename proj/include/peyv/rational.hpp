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

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "peyv/errors.hpp"

namespace peyv {

// Exact rational arithmetic for edit costs and ranking scores. Ties in
// candidate ranking must be reproducible, so scores are never compared
// through floating point.
class Rational {
public:
  constexpr Rational() = default;

  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw ValidationError("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    reduce();
  }

  // Parses "70", "-3", "0.5", "2.25". Exact: "0.1" becomes 1/10.
  static Rational parse_decimal(std::string_view s) {
    if (s.empty()) throw ParseError("empty number");
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
      neg = s[i] == '-';
      ++i;
    }
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool any_digit = false;
    bool seen_dot = false;
    for (; i < s.size(); ++i) {
      const char c = s[i];
      if (c == '.') {
        if (seen_dot) throw ParseError("malformed number: " + std::string(s));
        seen_dot = true;
        continue;
      }
      if (c < '0' || c > '9') throw ParseError("malformed number: " + std::string(s));
      any_digit = true;
      if (num > (INT64_MAX - 9) / 10) throw ParseError("number out of range: " + std::string(s));
      num = num * 10 + (c - '0');
      if (seen_dot) {
        if (den > INT64_MAX / 10) throw ParseError("number out of range: " + std::string(s));
        den *= 10;
      }
    }
    if (!any_digit) throw ParseError("malformed number: " + std::string(s));
    return Rational(neg ? -num : num, den);
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr bool is_zero() const { return num_ == 0; }
  constexpr bool is_negative() const { return num_ < 0; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Decimal text where the value terminates ("0.5"), else "num/den".
  std::string to_string() const {
    std::int64_t den = den_;
    int twos = 0, fives = 0;
    while (den % 2 == 0) { den /= 2; ++twos; }
    while (den % 5 == 0) { den /= 5; ++fives; }
    if (den != 1) return std::to_string(num_) + "/" + std::to_string(den_);
    const int digits = twos > fives ? twos : fives;
    __int128 scaled = static_cast<__int128>(num_ < 0 ? -num_ : num_);
    for (int k = 0; k < digits; ++k) scaled *= 10;
    scaled /= den_;
    std::string body;
    if (scaled == 0) body = "0";
    while (scaled > 0) {
      body.insert(body.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
      scaled /= 10;
    }
    while (static_cast<int>(body.size()) < digits + 1) body.insert(body.begin(), '0');
    if (digits > 0) body.insert(body.size() - digits, ".");
    return (num_ < 0 ? "-" : "") + body;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make_checked(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make_checked(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make_checked(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw ValidationError("rational division by zero");
    return make_checked(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) = default;

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const i128 l = i128(a.num_) * b.den_;
    const i128 r = i128(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

private:
  using i128 = __int128;

  void reduce() {
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static Rational make_checked(i128 num, i128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 an = num < 0 ? -num : num;
    i128 g = gcd128(an, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num > INT64_MAX || num < -static_cast<i128>(INT64_MAX) || den > INT64_MAX)
      throw Error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      const i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

} // namespace peyv
