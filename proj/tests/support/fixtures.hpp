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

#include <memory>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "lexmetric/communal.hpp"
#include "lexmetric/config.hpp"
#include "lexmetric/error.hpp"
#include "lexmetric/gamegraph.hpp"

namespace fixtures {

inline lexmetric::Quantity q(long n, long d = 1) {
  return lexmetric::Quantity::exactly(lexmetric::Rational(n, d));
}

inline double frac(double n, double d) { return n / d; }

// Communal labels to masks: tax = 1, raffle = 2, comp = 4.
enum : lexmetric::RuleMask { A = 0, B = 1, C = 2, D = 4, E = 3, F = 5, G = 6, H = 7 };

inline lexmetric::GameOfGames communal_graph(
    lexmetric::Extension ext = lexmetric::Extension::kZero,
    lexmetric::Variant variant = lexmetric::Variant::kDirected) {
  auto cfg = lexmetric::communal_config();
  cfg.extension = ext;
  cfg.variant = variant;
  return lexmetric::build_graph(cfg);
}

template <typename Fn>
lexmetric::Errc error_code(Fn&& fn) {
  try {
    fn();
  } catch (const lexmetric::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a lexmetric::Error";
  return lexmetric::Errc::kInvalidArgument;
}

}  // namespace fixtures
