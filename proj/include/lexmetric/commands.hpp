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

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lexmetric/config.hpp"
#include "lexmetric/report.hpp"

namespace lexmetric {

// Bad command-line input; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& command_names();

struct CommandRequest {
  std::string command;
  std::optional<std::string> from;
  std::optional<std::string> to;
  std::optional<std::string> other_config;  // divergence
  std::size_t k = 1;
  bool incremental = false;
  std::optional<double> r;
};

// Throws UsageError for missing or malformed flags and Error for domain
// failures. The `graph` command in dot form goes through to_dot instead.
Report run_command(const AnalysisConfig& config, const CommandRequest& request);

// Entry point of the lexmetric executable. Exit codes: 0 success,
// 1 domain error, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lexmetric
