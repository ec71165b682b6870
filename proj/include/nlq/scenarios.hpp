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

// End-to-end experiments on S(x)R. Each scenario prepares a state, measures R
// where the experiment calls for it, evolves S from the moment of measurement
// (t = 0) and reports two contrasted arms plus the contract checks that the
// run is expected to satisfy.
//
//   sec3  LinearBaseline        randomized no-influence suite, linear theory
//   sec5  NoCorrelations        rho (x) mu; measuring R changes nothing
//   sec6  ClassicalCorrelations correlated mixture vs uncorrelated, same rho
//   sec7  ChangedCorrelations   up/down vs diagonal mixtures, same rho
//   sec8  Entanglement          singlet; the basis chosen on R decides S

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "nlq/dynamics_nonlinear.hpp"

namespace nlq {

enum class ScenarioId { LinearBaseline, NoCorrelations, ClassicalCorrelations, ChangedCorrelations, Entanglement };

enum class BasisChoice { UpDown, Diag };

inline constexpr ScenarioId kAllScenarios[] = {ScenarioId::LinearBaseline, ScenarioId::NoCorrelations,
                                              ScenarioId::ClassicalCorrelations, ScenarioId::ChangedCorrelations,
                                              ScenarioId::Entanglement};

/// "sec3", "sec5", ... The alias "linear" also parses as sec3.
std::string_view scenario_name(ScenarioId id);
std::optional<ScenarioId> scenario_from_name(std::string_view name);

struct ScenarioConfig {
  double p = 0.75;
  double epsilon = 1.0;
  double t_max = 10.0;
  double dt = 1e-3;
  /// Entanglement only: basis measured on R for arm A (arm B uses the other).
  BasisChoice basis = BasisChoice::Diag;
  /// LinearBaseline only.
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  /// When set, S precesses at this fixed rate instead of 2 eps <Sigma_3>.
  std::optional<double> fixed_omega;

  PrecessionLaw law() const;
  /// Throws ArgumentError on p outside [0, 1], dt <= 0, t_max <= 0,
  /// non-finite values or trials == 0.
  void validate() const;
};

struct ContractCheck {
  enum class Kind { Below, Above };

  std::string name;
  double value;
  double threshold;
  Kind kind = Kind::Below;

  bool passed() const { return kind == Kind::Below ? value < threshold : value > threshold; }
};

using NarrativeValue = std::variant<double, std::string>;

struct ScenarioReport {
  ScenarioId id;
  ScenarioConfig config;
  /// Every arm shares one time grid.
  std::vector<std::pair<std::string, Trajectory>> arms;
  /// max over the grid of |s2(armA) - s2(armB)|; max deviation for sec3.
  double divergence = 0.0;
  std::vector<std::pair<std::string, NarrativeValue>> narrative;
  std::vector<ContractCheck> contracts;

  bool contracts_hold() const;
  const Trajectory* arm(std::string_view name) const;
};

ScenarioReport run_linear_baseline(const ScenarioConfig& cfg);
ScenarioReport run_no_correlations(const ScenarioConfig& cfg);
/// Throws DegenerateConfig for p in {0, 1}.
ScenarioReport run_classical_correlations(const ScenarioConfig& cfg);
ScenarioReport run_changed_correlations(const ScenarioConfig& cfg);
ScenarioReport run_entanglement(const ScenarioConfig& cfg);

ScenarioReport run_scenario(ScenarioId id, const ScenarioConfig& cfg);

// Reference curves used by the contracts.

/// s2(t) for a pure diagonal eigenstate: sin(sqrt(2) eps t)/sqrt(2).
double s2_pure_diag(double epsilon, double t);
/// s2(t) for the p-mixture of diagonal eigenstates evolved as one state:
/// (2p-1)/sqrt(2) sin(sqrt(2) (2p-1) eps t).
double s2_mixed_diag(double p, double epsilon, double t);

}  // namespace nlq
