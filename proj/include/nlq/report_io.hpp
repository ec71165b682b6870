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

#include <iosfwd>
#include <string>

#include "nlq/scenarios.hpp"

namespace nlq {

enum class OutputFormat { Csv, Json };

inline constexpr int kMinPrecision = 6;
inline constexpr int kMaxPrecision = 17;
inline constexpr int kDefaultPrecision = 12;

/// Shortest round-trip decimal form of v, or its `precision`-significant-digit
/// form when the shortest form needs more digits than that.
std::string format_real(double v, int precision);

/// Header `t,arm,sigma1,sigma2,sigma3`, then one row per (time, arm), time-major.
void write_csv(const ScenarioReport& report, std::ostream& os, int precision = kDefaultPrecision);

/// Object with scenario, config, divergence, contracts, narrative and arms;
/// each arm holds parallel `times` and `points` arrays.
void write_json(const ScenarioReport& report, std::ostream& os, int precision = kDefaultPrecision);

/// Writes to `path` (stdout when empty). Throws IoError when the file cannot
/// be written and ArgumentError when precision is outside [6, 17].
void emit_report(const ScenarioReport& report, const std::string& path, OutputFormat format,
                 int precision = kDefaultPrecision);

}  // namespace nlq
