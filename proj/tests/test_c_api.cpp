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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>

#include "doctest.h"
#include "nlq/nlq.h"

namespace {

struct Report {
  nlq_report* ptr = nullptr;
  ~Report() { nlq_report_destroy(ptr); }
};

nlq_config coarse() {
  nlq_config c;
  nlq_config_init(&c);
  c.dt = 1e-2;
  c.trials = 20;
  return c;
}

}  // namespace

TEST_CASE("config defaults and names") {
  nlq_config c;
  nlq_config_init(&c);
  CHECK(c.p == 0.75);
  CHECK(c.epsilon == 1.0);
  CHECK(c.t_max == 10.0);
  CHECK(c.dt == 1e-3);
  CHECK(c.basis == NLQ_BASIS_DIAG);
  CHECK(c.seed == 42);
  CHECK(c.trials == 1000);
  CHECK(c.dynamics == NLQ_DYNAMICS_NONLINEAR);

  CHECK(std::string(nlq_scenario_name(NLQ_SCENARIO_ENTANGLEMENT)) == "sec8");
  CHECK(nlq_scenario_name(static_cast<nlq_scenario>(9)) == nullptr);
  nlq_scenario s{};
  CHECK(nlq_scenario_parse("linear", &s) == NLQ_OK);
  CHECK(s == NLQ_SCENARIO_LINEAR_BASELINE);
  CHECK(nlq_scenario_parse("sec4", &s) == NLQ_ERROR_ARGUMENT);
  CHECK(std::string(nlq_last_error()).find("sec4") != std::string::npos);
  CHECK(nlq_scenario_parse(nullptr, &s) == NLQ_ERROR_ARGUMENT);
  CHECK(std::string(nlq_version()).size() > 0);
  CHECK(std::string(nlq_status_string(NLQ_ERROR_IO)).size() > 0);
}

TEST_CASE("running a scenario through the handle") {
  const nlq_config c = coarse();
  Report r;
  REQUIRE(nlq_run_scenario(NLQ_SCENARIO_CHANGED_CORRELATIONS, &c, &r.ptr) == NLQ_OK);
  CHECK(nlq_report_scenario(r.ptr) == NLQ_SCENARIO_CHANGED_CORRELATIONS);
  CHECK(nlq_report_contracts_hold(r.ptr) == 1);
  CHECK(std::abs(nlq_report_divergence(r.ptr) - 1.0 / std::numbers::sqrt2) < 1e-6);
  REQUIRE(nlq_report_arm_count(r.ptr) == 2);
  CHECK(std::string(nlq_report_arm_name(r.ptr, 0)) == "armA");
  CHECK(nlq_report_arm_name(r.ptr, 2) == nullptr);
  CHECK(nlq_report_time_count(r.ptr) == 1001);

  double t = 0.0;
  double b[3] = {};
  REQUIRE(nlq_report_sample(r.ptr, 1, 100, &t, b) == NLQ_OK);
  CHECK(t == doctest::Approx(1.0));
  CHECK(std::abs(b[1] - std::sin(std::numbers::sqrt2) / std::numbers::sqrt2) < 1e-8);
  CHECK(nlq_report_sample(r.ptr, 1, 1001, &t, b) == NLQ_ERROR_ARGUMENT);
  CHECK(nlq_report_sample(r.ptr, 2, 0, &t, b) == NLQ_ERROR_ARGUMENT);

  const size_t n = nlq_report_contract_count(r.ptr);
  CHECK(n > 0);
  const char* name = nullptr;
  int passed = 0;
  CHECK(nlq_report_contract(r.ptr, 0, &name, nullptr, nullptr, &passed) == NLQ_OK);
  CHECK(name != nullptr);
  CHECK(passed == 1);
  CHECK(nlq_report_contract(r.ptr, n, &name, nullptr, nullptr, &passed) == NLQ_ERROR_ARGUMENT);
}

TEST_CASE("error statuses") {
  nlq_config c = coarse();
  nlq_report* r = nullptr;
  CHECK(nlq_run_scenario(NLQ_SCENARIO_NO_CORRELATIONS, nullptr, &r) == NLQ_ERROR_ARGUMENT);
  CHECK(nlq_run_scenario(NLQ_SCENARIO_NO_CORRELATIONS, &c, nullptr) == NLQ_ERROR_ARGUMENT);
  CHECK(nlq_run_scenario(static_cast<nlq_scenario>(7), &c, &r) == NLQ_ERROR_ARGUMENT);

  c.p = 1.5;
  CHECK(nlq_run_scenario(NLQ_SCENARIO_NO_CORRELATIONS, &c, &r) == NLQ_ERROR_ARGUMENT);
  CHECK(r == nullptr);
  CHECK(std::string(nlq_last_error()).find("p must") != std::string::npos);

  c.p = 1.0;
  CHECK(nlq_run_scenario(NLQ_SCENARIO_CLASSICAL_CORRELATIONS, &c, &r) == NLQ_ERROR_DEGENERATE_CONFIG);
  CHECK(r == nullptr);

  nlq_report_destroy(nullptr);
}

TEST_CASE("fixed precession through the C interface") {
  nlq_config c = coarse();
  c.dynamics = NLQ_DYNAMICS_FIXED_PRECESSION;
  c.omega = 0.9;
  for (int s = 0; s < NLQ_SCENARIO_COUNT; ++s) {
    Report r;
    REQUIRE(nlq_run_scenario(static_cast<nlq_scenario>(s), &c, &r.ptr) == NLQ_OK);
    CHECK(nlq_report_divergence(r.ptr) < 1e-10);
    CHECK(nlq_report_contracts_hold(r.ptr) == 1);
  }
}

TEST_CASE("writing reports") {
  const nlq_config c = coarse();
  Report r;
  REQUIRE(nlq_run_scenario(NLQ_SCENARIO_NO_CORRELATIONS, &c, &r.ptr) == NLQ_OK);
  const auto path = std::filesystem::temp_directory_path() / "nlq_c_api_write.csv";
  REQUIRE(nlq_report_write(r.ptr, path.string().c_str(), NLQ_FORMAT_CSV, 12) == NLQ_OK);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,arm,sigma1,sigma2,sigma3");
  std::filesystem::remove(path);

  CHECK(nlq_report_write(r.ptr, "/nonexistent-dir/x.csv", NLQ_FORMAT_CSV, 12) == NLQ_ERROR_IO);
  CHECK(nlq_report_write(r.ptr, path.string().c_str(), NLQ_FORMAT_CSV, 3) == NLQ_ERROR_ARGUMENT);
  CHECK(nlq_report_write(nullptr, path.string().c_str(), NLQ_FORMAT_CSV, 12) == NLQ_ERROR_ARGUMENT);
}

TEST_CASE("verify_linear and closed_form") {
  double dev = 1.0;
  REQUIRE(nlq_verify_linear(200, 42, &dev) == NLQ_OK);
  CHECK(dev < 1e-10);
  CHECK(nlq_verify_linear(0, 42, &dev) == NLQ_ERROR_ARGUMENT);

  const double b0[3] = {1.0 / std::numbers::sqrt2, 0.0, 1.0 / std::numbers::sqrt2};
  double out[3] = {};
  REQUIRE(nlq_closed_form(b0, NLQ_DYNAMICS_NONLINEAR, 1.0, 0.5, out) == NLQ_OK);
  CHECK(std::abs(out[1] - std::sin(std::numbers::sqrt2 * 0.5) / std::numbers::sqrt2) < 1e-14);
  CHECK(out[2] == b0[2]);
  REQUIRE(nlq_closed_form(b0, NLQ_DYNAMICS_FIXED_PRECESSION, 2.0, 0.5, out) == NLQ_OK);
  CHECK(std::abs(out[1] - std::sin(1.0) / std::numbers::sqrt2) < 1e-14);
  CHECK(nlq_closed_form(nullptr, NLQ_DYNAMICS_NONLINEAR, 1.0, 0.5, out) == NLQ_ERROR_ARGUMENT);
}
