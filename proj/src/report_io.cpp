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

#include "nlq/report_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "json.hpp"

#include "nlq/errors.hpp"

namespace nlq {
namespace {

using Json = nlohmann::ordered_json;

void require_precision(int precision) {
  if (precision < kMinPrecision || precision > kMaxPrecision) {
    throw ArgumentError("precision must lie in [6, 17], got " + std::to_string(precision));
  }
}

int significant_digits(std::string_view text) {
  // Mantissa digits without leading zeros, e.g. "0.00125" -> 3, "1.5e-07" -> 2.
  const auto exp = text.find_first_of("eE");
  const std::string_view mantissa = text.substr(0, exp);
  int count = 0;
  bool leading = true;
  for (char c : mantissa) {
    if (c < '0' || c > '9') continue;
    if (leading && c == '0') continue;
    leading = false;
    ++count;
  }
  return count;
}

/// Rounds v to what format_real prints, so that the JSON serializer (which
/// emits shortest round-trip forms) prints the same digits.
double rounded(double v, int precision) {
  const std::string text = format_real(v, precision);
  return std::strtod(text.c_str(), nullptr);
}

const char* scenario_title(ScenarioId id) {
  switch (id) {
    case ScenarioId::LinearBaseline:
      return "LINEAR_BASELINE";
    case ScenarioId::NoCorrelations:
      return "NO_CORRELATIONS";
    case ScenarioId::ClassicalCorrelations:
      return "CLASSICAL_CORRELATIONS";
    case ScenarioId::ChangedCorrelations:
      return "CHANGED_CORRELATIONS";
    case ScenarioId::Entanglement:
      return "ENTANGLEMENT";
  }
  return "UNKNOWN";
}

}  // namespace

std::string format_real(double v, int precision) {
  require_precision(precision);
  if (v == 0.0) return "0";  // also folds -0
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  std::string shortest(buf.data(), res.ptr);
  if (significant_digits(shortest) <= precision) return shortest;
  res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, precision);
  return std::string(buf.data(), res.ptr);
}

void write_csv(const ScenarioReport& report, std::ostream& os, int precision) {
  require_precision(precision);
  os << "t,arm,sigma1,sigma2,sigma3\n";
  if (report.arms.empty()) return;
  const auto& times = report.arms.front().second.times();
  for (std::size_t i = 0; i < times.size(); ++i) {
    for (const auto& [name, trajectory] : report.arms) {
      const BlochVector& b = trajectory.points()[i];
      os << format_real(times[i], precision) << ',' << name << ',' << format_real(b.s1, precision) << ','
         << format_real(b.s2, precision) << ',' << format_real(b.s3, precision) << '\n';
    }
  }
}

void write_json(const ScenarioReport& report, std::ostream& os, int precision) {
  require_precision(precision);
  const auto num = [precision](double v) { return rounded(v, precision); };
  const ScenarioConfig& cfg = report.config;

  Json doc;
  doc["scenario"] = std::string(scenario_name(report.id));
  doc["scenario_id"] = scenario_title(report.id);

  Json config;
  config["p"] = num(cfg.p);
  config["epsilon"] = num(cfg.epsilon);
  config["t_max"] = num(cfg.t_max);
  config["dt"] = num(cfg.dt);
  config["basis"] = cfg.basis == BasisChoice::UpDown ? "updown" : "diag";
  config["seed"] = cfg.seed;
  config["trials"] = cfg.trials;
  config["dynamics"] = cfg.fixed_omega ? "fixed_precession" : "nonlinear";
  if (cfg.fixed_omega) config["omega"] = num(*cfg.fixed_omega);
  doc["config"] = std::move(config);

  doc["divergence"] = num(report.divergence);
  doc["contracts_hold"] = report.contracts_hold();

  Json contracts = Json::array();
  for (const auto& c : report.contracts) {
    contracts.push_back({{"name", c.name},
                         {"value", num(c.value)},
                         {"threshold", num(c.threshold)},
                         {"kind", c.kind == ContractCheck::Kind::Below ? "below" : "above"},
                         {"passed", c.passed()}});
  }
  doc["contracts"] = std::move(contracts);

  Json narrative = Json::object();
  for (const auto& [key, value] : report.narrative) {
    if (const auto* d = std::get_if<double>(&value)) {
      narrative[key] = num(*d);
    } else {
      narrative[key] = std::get<std::string>(value);
    }
  }
  doc["narrative"] = std::move(narrative);

  Json arms = Json::object();
  for (const auto& [name, trajectory] : report.arms) {
    Json times = Json::array();
    Json points = Json::array();
    for (std::size_t i = 0; i < trajectory.size(); ++i) {
      const BlochVector& b = trajectory.points()[i];
      times.push_back(num(trajectory.times()[i]));
      points.push_back(Json::array({num(b.s1), num(b.s2), num(b.s3)}));
    }
    arms[name] = {{"times", std::move(times)}, {"points", std::move(points)}};
  }
  doc["arms"] = std::move(arms);

  os << doc.dump() << '\n';
}

void emit_report(const ScenarioReport& report, const std::string& path, OutputFormat format, int precision) {
  require_precision(precision);
  const auto write = [&](std::ostream& os) {
    if (format == OutputFormat::Csv) {
      write_csv(report, os, precision);
    } else {
      write_json(report, os, precision);
    }
  };
  if (path.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open output file '" + path + "'");
  write(file);
  file.close();
  if (!file) throw IoError("failed writing output file '" + path + "'");
}

}  // namespace nlq
