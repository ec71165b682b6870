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
#include <numbers>
#include <string>
#include <variant>

#include "doctest.h"
#include "nlq/errors.hpp"
#include "nlq/scenarios.hpp"
#include "oracles.hpp"

using namespace nlq;

namespace {

const double kR = 1.0 / std::numbers::sqrt2;

double narrative(const ScenarioReport& r, const std::string& key) {
  for (const auto& [k, v] : r.narrative) {
    if (k == key) return std::get<double>(v);
  }
  FAIL("missing narrative key " << key);
  return 0.0;
}

double max_dev(const Trajectory& t, double (*ref)(double)) {
  double worst = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) worst = std::max(worst, std::abs(t.points()[i].s2 - ref(t.times()[i])));
  return worst;
}

double pure_unit(double t) { return oracle::s2_pure(1.0, t); }
double zero(double) { return 0.0; }

ScenarioConfig coarse() {
  ScenarioConfig c;
  c.dt = 1e-2;
  return c;
}

}  // namespace

TEST_CASE("scenario names") {
  for (ScenarioId id : kAllScenarios) CHECK(scenario_from_name(scenario_name(id)) == id);
  CHECK(scenario_name(ScenarioId::ClassicalCorrelations) == "sec6");
  CHECK(scenario_from_name("linear") == ScenarioId::LinearBaseline);
  CHECK_FALSE(scenario_from_name("sec4").has_value());
}

TEST_CASE("config validation") {
  ScenarioConfig c;
  CHECK_NOTHROW(c.validate());
  c.p = 1.5;
  CHECK_THROWS_AS(c.validate(), ArgumentError);
  c = ScenarioConfig{};
  c.dt = 0.0;
  CHECK_THROWS_AS(c.validate(), ArgumentError);
  c = ScenarioConfig{};
  c.t_max = -1.0;
  CHECK_THROWS_AS(run_scenario(ScenarioId::NoCorrelations, c), ArgumentError);
}

TEST_CASE("linear baseline") {
  const ScenarioReport r = run_linear_baseline(ScenarioConfig{});
  CHECK(r.divergence < 1e-10);
  CHECK(r.contracts_hold());
  CHECK(r.arms.empty());

  ScenarioConfig one;
  one.trials = 1;
  CHECK(run_linear_baseline(one).divergence == 0.0);
  CHECK(run_linear_baseline(ScenarioConfig{}).divergence == r.divergence);
}

TEST_CASE("no correlations") {
  const ScenarioReport r = run_no_correlations(ScenarioConfig{});
  REQUIRE(r.arms.size() == 2);
  CHECK(r.contracts_hold());
  CHECK(r.divergence < 1e-10);
  for (const auto& [name, t] : r.arms) {
    CAPTURE(name);
    CHECK(t.size() == 10001);
    for (std::size_t i = 0; i < t.size(); i += 7) {
      const double expected = 0.5 * kR * std::sin(std::numbers::sqrt2 * 0.5 * t.times()[i]);
      CHECK(std::abs(t.points()[i].s2 - expected) < 1e-8);
    }
  }
  CHECK(narrative(r, "armB.outcome0.probability") == doctest::Approx(0.5));

  ScenarioConfig half = coarse();
  half.p = 0.5;
  for (const auto& [name, t] : run_no_correlations(half).arms) CHECK(max_dev(t, zero) < 1e-15);

  ScenarioConfig pure = coarse();
  pure.p = 1.0;
  for (const auto& [name, t] : run_no_correlations(pure).arms) CHECK(max_dev(t, pure_unit) < 1e-12);
}

TEST_CASE("classical correlations") {
  const ScenarioReport r = run_classical_correlations(ScenarioConfig{});
  CHECK(r.contracts_hold());
  CHECK(max_dev(*r.arm("armA"), pure_unit) < 1e-8);
  CHECK(r.divergence > 0.3);
  // Frozen from an independent evaluation of both closed forms on the default grid.
  CHECK(std::abs(r.divergence - 0.9672566697616496) < 1e-8);

  // Both outcomes start from the diagonal eigenstates and give the same sigma2 peak.
  CHECK(narrative(r, "armA.outcome0.sigma3_0") == doctest::Approx(kR));
  CHECK(narrative(r, "armA.outcome1.sigma3_0") == doctest::Approx(-kR));
  CHECK(narrative(r, "armA.outcome0.max_abs_sigma2") == doctest::Approx(narrative(r, "armA.outcome1.max_abs_sigma2")));

  for (double p : {0.25, 0.5, 0.75}) {
    ScenarioConfig c = coarse();
    c.p = p;
    CAPTURE(p);
    CHECK(max_dev(*run_classical_correlations(c).arm("armA"), pure_unit) < 1e-8);
  }

  ScenarioConfig degenerate;
  degenerate.p = 1.0;
  CHECK_THROWS_AS(run_classical_correlations(degenerate), DegenerateConfig);
  degenerate.p = 0.0;
  CHECK_THROWS_AS(run_classical_correlations(degenerate), DegenerateConfig);
}

TEST_CASE("classical correlations agree with the uncorrelated pure limit") {
  // Arm A does not depend on p, and at p = 1 the uncorrelated arms are the pure curve.
  ScenarioConfig c = coarse();
  const ScenarioReport correlated = run_classical_correlations(c);
  c.p = 1.0;
  const ScenarioReport limit = run_no_correlations(c);
  CHECK(max_s2_difference(*correlated.arm("armA"), *limit.arm("armA")) < 1e-8);
  CHECK(max_s2_difference(*correlated.arm("armA"), *limit.arm("armB")) < 1e-8);
}

TEST_CASE("changed correlations") {
  const ScenarioReport r = run_changed_correlations(ScenarioConfig{});
  CHECK(r.contracts_hold());
  CHECK(max_dev(*r.arm("armA"), zero) < 1e-10);
  CHECK(max_dev(*r.arm("armB"), pure_unit) < 1e-8);
  CHECK(std::abs(r.divergence - kR) < 1e-6);
  CHECK(narrative(r, "reduced_density_difference") < 1e-12);
  CHECK(narrative(r, "composite_density_difference") > 0.1);
}

TEST_CASE("entanglement") {
  const ScenarioReport diag = run_entanglement(ScenarioConfig{});
  CHECK(diag.contracts_hold());
  CHECK(max_dev(*diag.arm("armA"), pure_unit) < 1e-8);
  CHECK(max_dev(*diag.arm("armB"), zero) < 1e-10);
  CHECK(std::abs(diag.divergence - kR) < 1e-6);
  for (const char* key : {"armA.outcome0.probability", "armA.outcome1.probability", "armB.outcome0.probability",
                          "armB.outcome1.probability"}) {
    CHECK(std::abs(narrative(diag, key) - 0.5) < 1e-12);
  }
  // The up/down outcomes start at the poles.
  CHECK(std::abs(std::abs(narrative(diag, "armB.outcome0.sigma3_0")) - 1.0) < 1e-12);

  ScenarioConfig c;
  c.basis = BasisChoice::UpDown;
  const ScenarioReport updown = run_entanglement(c);
  CHECK(updown.contracts_hold());
  CHECK(max_dev(*updown.arm("armA"), zero) < 1e-10);
  CHECK(updown.divergence == diag.divergence);
}

TEST_CASE("entanglement and changed correlations give the same diagonal arm") {
  const ScenarioReport changed = run_changed_correlations(coarse());
  const ScenarioReport entangled = run_entanglement(coarse());
  CHECK(max_s2_difference(*changed.arm("armB"), *entangled.arm("armA")) < 1e-8);
  CHECK(max_bloch_distance(*changed.arm("armB"), *entangled.arm("armA")) < 1e-8);
}

TEST_CASE("fixed precession removes every contrast") {
  for (double omega : {0.0, 0.7, -2.0}) {
    for (ScenarioId id : kAllScenarios) {
      ScenarioConfig c = coarse();
      c.fixed_omega = omega;
      c.trials = 50;
      const ScenarioReport r = run_scenario(id, c);
      CAPTURE(scenario_name(id));
      CAPTURE(omega);
      CHECK(r.divergence < 1e-10);
      CHECK(r.contracts_hold());
    }
  }
}

TEST_CASE("reports are pure functions of their config") {
  for (ScenarioId id : kAllScenarios) {
    ScenarioConfig c = coarse();
    c.trials = 20;
    const ScenarioReport a = run_scenario(id, c);
    const ScenarioReport b = run_scenario(id, c);
    CHECK(a.divergence == b.divergence);
    REQUIRE(a.arms.size() == b.arms.size());
    for (std::size_t k = 0; k < a.arms.size(); ++k) CHECK(max_bloch_distance(a.arms[k].second, b.arms[k].second) == 0.0);
  }
}

TEST_CASE("the closed-form curves") {
  CHECK(s2_pure_diag(1.0, 0.4) == doctest::Approx(oracle::s2_pure(1.0, 0.4)).epsilon(1e-15));
  CHECK(s2_mixed_diag(0.75, 2.0, 0.4) == doctest::Approx(oracle::s2_mixed(0.75, 2.0, 0.4)).epsilon(1e-15));
}
