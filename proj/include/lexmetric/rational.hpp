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

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace lexmetric {

using Rational = boost::multiprecision::cpp_rational;

// Accepts "3", "-2", "8/30", "0.125", "1e-3", "2.5E+2". Returns nullopt on
// anything else (including a zero denominator).
std::optional<Rational> parse_rational(std::string_view text);

// Exact value of the shortest decimal representation of `v`, so that 0.1
// maps to 1/10 rather than the nearest binary fraction. Requires finite v.
Rational rational_from_double(double v);

// "83/15", or "7" when the denominator is 1.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

// A real number computed in double precision, carried together with its
// exact rational value when every input that produced it was exact.
struct Quantity {
  double value = 0.0;
  std::optional<Rational> exact;

  static Quantity exactly(const Rational& r) {
    return Quantity{to_double(r), r};
  }
  static Quantity approx(double v) { return Quantity{v, std::nullopt}; }
  static Quantity zero() { return exactly(Rational(0)); }

  bool is_exact() const { return exact.has_value(); }

  friend bool operator==(const Quantity&, const Quantity&) = default;
};

Quantity operator+(const Quantity& a, const Quantity& b);
Quantity operator-(const Quantity& a, const Quantity& b);
Quantity operator*(const Quantity& a, const Quantity& b);
Quantity operator/(const Quantity& a, const Quantity& b);
Quantity abs(const Quantity& q);
Quantity max(const Quantity& a, const Quantity& b);

// Fixed six-decimal rendering used across reports.
std::string format_decimal(double v, int places = 6);

}  // namespace lexmetric
