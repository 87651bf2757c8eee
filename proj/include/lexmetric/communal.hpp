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

#include <string>
#include <string_view>
#include <vector>

#include "lexmetric/config.hpp"
#include "lexmetric/rational.hpp"

namespace lexmetric {

// The three-herdsman communal instance shipped as configs/communal.json.
std::string_view communal_config_text();
AnalysisConfig communal_config();

// Edge labels of the published communal graph, by regulation label.
struct FigureLabel {
  std::string a;
  std::string b;
  Rational weight;
};
const std::vector<FigureLabel>& figure_labels();

// Published lengths of incremental A -> H paths.
struct PathClaim {
  std::vector<std::string> path;
  Rational length;
  std::string text;
};
const std::vector<PathClaim>& path_claims();

// Published bound on every step of the least-resistance path.
Rational signer_claim();

}  // namespace lexmetric
