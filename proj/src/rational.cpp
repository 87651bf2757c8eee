// Copyright 2026 The lexmetric Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lexmetric/rational.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace lexmetric {
namespace {

using boost::multiprecision::cpp_int;

cpp_int pow10(int e) {
  cpp_int r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::optional<cpp_int> parse_integer(std::string_view s) {
  s = trim(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return std::nullopt;
  cpp_int v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    v = v * 10 + (c - '0');
  }
  return negative ? cpp_int(-v) : v;
}

// [sign] digits [. digits] [(e|E) [sign] digits]
std::optional<Rational> parse_decimal(std::string_view s) {
  s = trim(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  int exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    auto exp_part = parse_integer(s.substr(e + 1));
    if (!exp_part || abs(*exp_part) > 400) return std::nullopt;
    exponent = exp_part->convert_to<int>();
    s = s.substr(0, e);
  }
  cpp_int digits = 0;
  int fraction_digits = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (char c : s) {
    if (c == '.') {
      if (seen_point) return std::nullopt;
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = digits * 10 + (c - '0');
      seen_digit = true;
      if (seen_point) ++fraction_digits;
    } else {
      return std::nullopt;
    }
  }
  if (!seen_digit) return std::nullopt;
  exponent -= fraction_digits;
  Rational r = exponent >= 0 ? Rational(digits * pow10(exponent))
                             : Rational(digits, pow10(-exponent));
  return negative ? Rational(-r) : r;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  text = trim(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_integer(text.substr(0, slash));
    auto den = parse_integer(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Rational(*num, *den);
  }
  return parse_decimal(text);
}

Rational rational_from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite value");
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::invalid_argument("to_chars failed");
  return *parse_decimal(std::string_view(buf, end - buf));
}

std::string to_string(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

namespace {

template <typename Op>
std::optional<Rational> combine(const Quantity& a, const Quantity& b, Op op) {
  if (a.exact && b.exact) return op(*a.exact, *b.exact);
  return std::nullopt;
}

}  // namespace

Quantity operator+(const Quantity& a, const Quantity& b) {
  return {a.value + b.value,
          combine(a, b, [](const Rational& x, const Rational& y) {
            return Rational(x + y);
          })};
}

Quantity operator-(const Quantity& a, const Quantity& b) {
  return {a.value - b.value,
          combine(a, b, [](const Rational& x, const Rational& y) {
            return Rational(x - y);
          })};
}

Quantity operator*(const Quantity& a, const Quantity& b) {
  return {a.value * b.value,
          combine(a, b, [](const Rational& x, const Rational& y) {
            return Rational(x * y);
          })};
}

Quantity operator/(const Quantity& a, const Quantity& b) {
  std::optional<Rational> exact;
  if (a.exact && b.exact && *b.exact != 0) exact = *a.exact / *b.exact;
  return {a.value / b.value, exact};
}

Quantity abs(const Quantity& q) {
  std::optional<Rational> exact;
  if (q.exact) exact = *q.exact < 0 ? Rational(-*q.exact) : *q.exact;
  return {std::fabs(q.value), exact};
}

Quantity max(const Quantity& a, const Quantity& b) {
  if (a.exact && b.exact) return *a.exact >= *b.exact ? a : b;
  return Quantity::approx(std::max(a.value, b.value));
}

std::string format_decimal(double v, int places) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  return buf;
}

}  // namespace lexmetric
