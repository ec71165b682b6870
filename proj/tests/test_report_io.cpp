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

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "nlq/errors.hpp"
#include "nlq/report_io.hpp"

using namespace nlq;

namespace {

ScenarioReport small_report(ScenarioId id = ScenarioId::ChangedCorrelations) {
  ScenarioConfig c;
  c.t_max = 1.0;
  c.dt = 0.1;
  c.trials = 5;
  return run_scenario(id, c);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, sep)) out.push_back(field);
  return out;
}

}  // namespace

TEST_CASE("format_real") {
  CHECK(format_real(0.1, 12) == "0.1");
  CHECK(format_real(-0.0, 12) == "0");
  CHECK(format_real(1e-20, 12) == "1e-20");
  CHECK(format_real(1.0 / 3.0, 6) == "0.333333");
  CHECK(format_real(1.0 / 3.0, 12) == "0.333333333333");
  CHECK(format_real(1.0 / 3.0, 17) == "0.3333333333333333");
  CHECK(format_real(10.0, 12) == "10");
  CHECK_THROWS_AS(format_real(1.0, 5), ArgumentError);
  CHECK_THROWS_AS(format_real(1.0, 18), ArgumentError);
}

TEST_CASE("csv layout and round trip") {
  const ScenarioReport r = small_report();
  for (int precision : {6, 12, 17}) {
    std::ostringstream os;
    write_csv(r, os, precision);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "t,arm,sigma1,sigma2,sigma3");

    std::size_t rows = 0;
    const double tol = 10.0 * std::pow(10.0, -precision);
    while (std::getline(is, line)) {
      const auto fields = split(line, ',');
      REQUIRE(fields.size() == 5);
      const std::size_t i = rows / r.arms.size();
      const auto& [name, t] = r.arms[rows % r.arms.size()];
      CHECK(fields[1] == name);
      CHECK(std::abs(std::strtod(fields[0].c_str(), nullptr) - t.times()[i]) <= tol);
      CHECK(std::abs(std::strtod(fields[2].c_str(), nullptr) - t.points()[i].s1) <= tol);
      CHECK(std::abs(std::strtod(fields[3].c_str(), nullptr) - t.points()[i].s2) <= tol);
      CHECK(std::abs(std::strtod(fields[4].c_str(), nullptr) - t.points()[i].s3) <= tol);
      ++rows;
    }
    CHECK(rows == r.arms.size() * r.arms.front().second.size());
  }

  // armA of the up/down preparation stays at zero sigma2.
  std::ostringstream os;
  write_csv(run_scenario(ScenarioId::ChangedCorrelations, ScenarioConfig{}), os);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) {
    const auto fields = split(line, ',');
    if (fields[1] == "armA") CHECK(std::abs(std::strtod(fields[3].c_str(), nullptr)) < 1e-10);
  }
}

TEST_CASE("json layout") {
  const ScenarioReport r = small_report();
  std::ostringstream os;
  write_json(r, os);
  const auto doc = nlohmann::json::parse(os.str());
  CHECK(doc["scenario"] == "sec7");
  CHECK(doc["scenario_id"] == "CHANGED_CORRELATIONS");
  CHECK(doc["contracts_hold"] == true);
  CHECK(doc["divergence"].get<double>() == doctest::Approx(r.divergence).epsilon(1e-11));
  CHECK(doc["config"]["dt"].get<double>() == 0.1);
  CHECK(doc["narrative"].contains("reduced_density_difference"));
  CHECK(doc["contracts"].size() == r.contracts.size());
  for (const auto& [name, t] : r.arms) {
    const auto& arm = doc["arms"][name];
    REQUIRE(arm["times"].size() == t.size());
    REQUIRE(arm["points"].size() == t.size());
    CHECK(arm["points"][3][1].get<double>() == doctest::Approx(t.points()[3].s2).epsilon(1e-11));
  }

  std::ostringstream baseline;
  write_json(small_report(ScenarioId::LinearBaseline), baseline);
  const auto b = nlohmann::json::parse(baseline.str());
  CHECK(b["arms"].empty());
  CHECK(b["config"]["seed"] == 42);
}

TEST_CASE("emit_report") {
  const ScenarioReport r = small_report();
  CHECK_THROWS_AS(emit_report(r, "/nonexistent-dir/for/sure/out.csv", OutputFormat::Csv), IoError);
  CHECK_THROWS_AS(emit_report(r, "unused.csv", OutputFormat::Csv, 4), ArgumentError);
}
