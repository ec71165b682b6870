// Copyright 2026 The nlq Authors
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

#include <span>
#include <string>
#include <variant>

#include "nlq/nlq.h"

namespace nlq::cli {

enum class Command { Run, VerifyLinear, List };

struct RunConfig {
  Command command = Command::List;
  nlq_scenario scenario = NLQ_SCENARIO_LINEAR_BASELINE;
  nlq_config config{};
  /// Empty means stdout.
  std::string output_path;
  nlq_format format = NLQ_FORMAT_CSV;
  int precision = 12;
};

struct UsageError {
  std::string message;
};

struct HelpRequest {
  std::string text;
};

using ParseResult = std::variant<RunConfig, UsageError, HelpRequest>;

/// argv[0] is the program name.
ParseResult parse_args(std::span<const std::string> argv);

/// One line per scenario: name and a short description.
std::string scenario_listing();

}  // namespace nlq::cli
