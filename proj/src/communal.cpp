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

#include "lexmetric/communal.hpp"

namespace lexmetric {
namespace {

Rational frac(long n, long d) { return Rational(n, d); }

}  // namespace

AnalysisConfig communal_config() { return parse_config(communal_config_text()); }

const std::vector<FigureLabel>& figure_labels() {
  static const std::vector<FigureLabel> labels = {
      {"A", "B", frac(166, 30)},  {"A", "C", frac(166, 30)},  {"A", "D", frac(332, 30)},
      {"A", "E", frac(80, 9)},    {"A", "F", frac(166, 30)},  {"A", "G", frac(10, 1)},
      {"A", "H", frac(88, 10)},   {"B", "C", frac(166, 30)},  {"B", "D", frac(166, 30)},
      {"B", "E", frac(166, 30)},  {"B", "F", frac(166, 30)},  {"B", "G", frac(166, 30)},
      {"B", "H", frac(166, 30)},  {"C", "D", frac(1162, 30)}, {"C", "E", frac(1298, 90)},
      {"C", "F", frac(166, 90)},  {"C", "G", frac(166, 30)},  {"C", "H", frac(966, 30)},
      {"D", "E", frac(1796, 90)}, {"D", "F", frac(332, 30)},  {"D", "G", frac(632, 30)},
      {"D", "H", frac(332, 30)},  {"E", "F", frac(1298, 90)}, {"E", "G", frac(170, 9)},
      {"E", "H", frac(10, 3)},    {"F", "G", frac(466, 30)},  {"F", "H", frac(966, 30)},
      {"G", "H", frac(110, 3)},
  };
  return labels;
}

const std::vector<PathClaim>& path_claims() {
  static const std::vector<PathClaim> claims = {
      {{"A", "D", "G", "H"}, frac(1291, 100), "12'91"},
      {{"A", "C", "E", "H"}, frac(34422, 1000), "34'422"},
      {{"A", "B", "G", "H"}, frac(465, 10), "46'5"},
  };
  return claims;
}

Rational signer_claim() { return frac(166, 30); }

}  // namespace lexmetric
