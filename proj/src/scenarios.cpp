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

#include "nlq/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "nlq/dynamics_linear.hpp"
#include "nlq/errors.hpp"
#include "nlq/measurement.hpp"

namespace nlq {
namespace {

constexpr double kCurveTol = 1e-8;
constexpr double kNullTol = 1e-10;

using Kind = ContractCheck::Kind;

MeasurementBasis alpha_beta_basis() { return MeasurementBasis::from_vectors({ket_alpha(), ket_beta()}); }

MeasurementBasis updown_basis() { return MeasurementBasis::from_vectors({spin_up(), spin_down()}); }

MeasurementBasis diag_basis() {
  const auto [ne, sw] = diag_eigenstates();
  return MeasurementBasis::from_vectors({ne, sw});
}

const char* basis_label(BasisChoice b) { return b == BasisChoice::UpDown ? "updown" : "diag"; }

class ReportBuilder {
 public:
  ReportBuilder(ScenarioId id, const ScenarioConfig& cfg) { report_.id = id; report_.config = cfg; }

  void note(std::string key, NarrativeValue value) { report_.narrative.emplace_back(std::move(key), std::move(value)); }

  void check(std::string name, double value, double threshold, Kind kind = Kind::Below) {
    report_.contracts.push_back({std::move(name), value, threshold, kind});
  }

  void arm(std::string name, Trajectory t) { report_.arms.emplace_back(std::move(name), std::move(t)); }

  /// Sets the divergence from the two arms and records the Bloch distance.
  void contrast_arms() {
    const Trajectory& a = report_.arms.at(0).second;
    const Trajectory& b = report_.arms.at(1).second;
    report_.divergence = max_s2_difference(a, b);
    note("divergence_s2_max", report_.divergence);
    note("bloch_distance_max", max_bloch_distance(a, b));
  }

  double divergence() const { return report_.divergence; }
  ScenarioReport take() { return std::move(report_); }

 private:
  ScenarioReport report_;
};

/// Measures R, evolves every outcome's ensemble under `policy` and returns
/// the probability-weighted average. Per-outcome data go into the narrative.
Trajectory measured_arm(const Ensemble& e, const MeasurementBasis& basis, EvolutionPolicy policy,
                        const PrecessionLaw& law, std::span<const double> times, ReportBuilder& out,
                        const std::string& prefix, std::vector<double>* probabilities = nullptr) {
  std::vector<double> weights;
  std::vector<Trajectory> trajectories;
  for (const auto& outcome : measure_all(e, basis)) {
    Trajectory t = evolve_ensemble(outcome.post_state, policy, law, times);
    const std::string key = prefix + ".outcome" + std::to_string(outcome.outcome_index);
    const BlochVector& b0 = t.points().front();
    double peak = 0.0;
    for (const auto& p : t.points()) peak = std::max(peak, std::abs(p.s2));
    out.note(key + ".probability", outcome.probability);
    out.note(key + ".sigma1_0", b0.s1);
    out.note(key + ".sigma2_0", b0.s2);
    out.note(key + ".sigma3_0", b0.s3);
    out.note(key + ".max_abs_sigma2", peak);
    weights.push_back(outcome.probability);
    trajectories.push_back(std::move(t));
    if (probabilities != nullptr) probabilities->push_back(outcome.probability);
  }
  return weighted_average(weights, trajectories);
}

double max_deviation_from(const Trajectory& t, const std::function<double(double)>& s2_reference) {
  double worst = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    worst = std::max(worst, std::abs(t.points()[i].s2 - s2_reference(t.times()[i])));
  }
  return worst;
}

double max_abs_s2(const Trajectory& t) {
  double worst = 0.0;
  for (const auto& p : t.points()) worst = std::max(worst, std::abs(p.s2));
  return worst;
}

double grid_max(std::span<const double> times, const std::function<double(double)>& f) {
  double worst = 0.0;
  for (double t : times) worst = std::max(worst, std::abs(f(t)));
  return worst;
}

/// S marginal p|ne><ne| + (1-p)|sw><sw| with R in the even mixture of
/// alpha and beta, so that measuring R has two genuine outcomes.
Ensemble uncorrelated_diag_mixture(double p) {
  const auto [ne, sw] = diag_eigenstates();
  const WeightedVector rho[] = {{p, ne}, {1.0 - p, sw}};
  const WeightedVector mu[] = {{0.5, ket_alpha()}, {0.5, ket_beta()}};
  return make_product_uncorrelated(rho, mu);
}

void note_config(ReportBuilder& out, const ScenarioConfig& cfg) {
  if (cfg.fixed_omega) {
    out.note("dynamics", std::string("fixed_precession"));
    out.note("omega", *cfg.fixed_omega);
  } else {
    out.note("dynamics", std::string("nonlinear"));
    out.note("epsilon", cfg.epsilon);
  }
}

/// Under a fixed precession rate the contrast must vanish.
void check_linear_restoration(ReportBuilder& out) {
  out.check("linear_dynamics_divergence", out.divergence(), kNullTol);
}

}  // namespace

std::string_view scenario_name(ScenarioId id) {
  switch (id) {
    case ScenarioId::LinearBaseline:
      return "sec3";
    case ScenarioId::NoCorrelations:
      return "sec5";
    case ScenarioId::ClassicalCorrelations:
      return "sec6";
    case ScenarioId::ChangedCorrelations:
      return "sec7";
    case ScenarioId::Entanglement:
      return "sec8";
  }
  return "unknown";
}

std::optional<ScenarioId> scenario_from_name(std::string_view name) {
  if (name == "linear") return ScenarioId::LinearBaseline;
  for (ScenarioId id : kAllScenarios) {
    if (scenario_name(id) == name) return id;
  }
  return std::nullopt;
}

PrecessionLaw ScenarioConfig::law() const {
  if (fixed_omega) return FixedPrecession{*fixed_omega};
  return NonlinearParams{epsilon};
}

void ScenarioConfig::validate() const {
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("p must lie in [0, 1]");
  if (!std::isfinite(epsilon)) throw ArgumentError("epsilon must be finite");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ArgumentError("dt must be positive");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw ArgumentError("t_max must be positive");
  if (dt > t_max) throw ArgumentError("dt must not exceed t_max");
  if (trials == 0) throw ArgumentError("trials must be at least 1");
  if (fixed_omega && !std::isfinite(*fixed_omega)) throw ArgumentError("omega must be finite");
}

bool ScenarioReport::contracts_hold() const {
  return std::all_of(contracts.begin(), contracts.end(), [](const ContractCheck& c) { return c.passed(); });
}

const Trajectory* ScenarioReport::arm(std::string_view name) const {
  for (const auto& [n, t] : arms) {
    if (n == name) return &t;
  }
  return nullptr;
}

double s2_pure_diag(double epsilon, double t) {
  return std::sin(std::numbers::sqrt2 * epsilon * t) / std::numbers::sqrt2;
}

double s2_mixed_diag(double p, double epsilon, double t) {
  const double m = 2.0 * p - 1.0;
  return m / std::numbers::sqrt2 * std::sin(std::numbers::sqrt2 * m * epsilon * t);
}

ScenarioReport run_linear_baseline(const ScenarioConfig& cfg) {
  cfg.validate();
  ReportBuilder out(ScenarioId::LinearBaseline, cfg);
  const NoSignallingReport suite = no_signalling_suite(cfg.trials, cfg.seed);
  ScenarioReport report = out.take();
  report.divergence = suite.max_deviation();
  report.narrative = {
      {"trials", static_cast<double>(suite.trials)},
      {"seed", static_cast<double>(suite.seed)},
      {"measurement_deviation", suite.measurement_deviation},
      {"remote_dynamics_deviation", suite.remote_dynamics_deviation},
      {"picture_deviation", suite.picture_deviation},
      {"interposed_deviation", suite.interposed_deviation},
  };
  report.contracts.push_back({"max_deviation", report.divergence, kNullTol, Kind::Below});
  return report;
}

ScenarioReport run_no_correlations(const ScenarioConfig& cfg) {
  cfg.validate();
  ReportBuilder out(ScenarioId::NoCorrelations, cfg);
  note_config(out, cfg);
  out.note("p", cfg.p);

  const PrecessionLaw law = cfg.law();
  const std::vector<double> times = time_grid(cfg.t_max, cfg.dt);
  const Ensemble prepared = uncorrelated_diag_mixture(cfg.p);

  const BlochVector b0 = reduced_bloch_S(prepared);
  out.note("sigma1_0", b0.s1);
  out.note("sigma3_0", b0.s3);

  out.arm("armA", evolve_ensemble(prepared, EvolutionPolicy::AggregateMeans, law, times));
  out.arm("armB", measured_arm(prepared, alpha_beta_basis(), EvolutionPolicy::AggregateMeans, law, times, out, "armB"));
  out.contrast_arms();

  if (cfg.fixed_omega) {
    check_linear_restoration(out);
    return out.take();
  }
  ScenarioReport report = out.take();
  const auto reference = [&](double t) { return s2_mixed_diag(cfg.p, cfg.epsilon, t); };
  report.contracts.push_back({"armA_vs_mixed_diag_curve", max_deviation_from(*report.arm("armA"), reference),
                              kCurveTol, Kind::Below});
  report.contracts.push_back({"armB_vs_mixed_diag_curve", max_deviation_from(*report.arm("armB"), reference),
                              kCurveTol, Kind::Below});
  report.contracts.push_back({"measurement_on_R_divergence", report.divergence, kNullTol, Kind::Below});
  return report;
}

ScenarioReport run_classical_correlations(const ScenarioConfig& cfg) {
  cfg.validate();
  if (cfg.p == 0.0 || cfg.p == 1.0) {
    throw DegenerateConfig("classical-correlations scenario needs 0 < p < 1; at p in {0, 1} the arms coincide");
  }
  ReportBuilder out(ScenarioId::ClassicalCorrelations, cfg);
  note_config(out, cfg);
  out.note("p", cfg.p);

  const PrecessionLaw law = cfg.law();
  const std::vector<double> times = time_grid(cfg.t_max, cfg.dt);
  const auto [ne, sw] = diag_eigenstates();
  const Ensemble correlated = make_classical_correlated(cfg.p, ne, ket_alpha(), sw, ket_beta());
  const Ensemble uncorrelated = uncorrelated_diag_mixture(cfg.p);

  const double rho_gap =
      max_abs_diff(partial_trace_R(density_of(correlated)), partial_trace_R(density_of(uncorrelated)));
  out.note("reduced_density_difference", rho_gap);

  out.arm("armA", measured_arm(correlated, alpha_beta_basis(), EvolutionPolicy::BranchMeans, law, times, out, "armA"));
  out.arm("armB", evolve_ensemble(uncorrelated, EvolutionPolicy::AggregateMeans, law, times));
  out.contrast_arms();

  out.check("reduced_density_agreement", rho_gap, kAlgebraTol);
  if (cfg.fixed_omega) {
    check_linear_restoration(out);
    return out.take();
  }
  ScenarioReport report = out.take();
  const auto pure = [&](double t) { return s2_pure_diag(cfg.epsilon, t); };
  const auto mixed = [&](double t) { return s2_mixed_diag(cfg.p, cfg.epsilon, t); };
  const double expected_divergence = grid_max(times, [&](double t) { return pure(t) - mixed(t); });
  report.narrative.emplace_back("expected_divergence", expected_divergence);
  report.contracts.push_back(
      {"armA_vs_pure_diag_curve", max_deviation_from(*report.arm("armA"), pure), kCurveTol, Kind::Below});
  report.contracts.push_back({"divergence_vs_closed_form",
                              std::abs(report.divergence - expected_divergence), kCurveTol, Kind::Below});
  report.contracts.push_back({"divergence_positive", report.divergence, 0.0, Kind::Above});
  return report;
}

ScenarioReport run_changed_correlations(const ScenarioConfig& cfg) {
  cfg.validate();
  ReportBuilder out(ScenarioId::ChangedCorrelations, cfg);
  note_config(out, cfg);

  const PrecessionLaw law = cfg.law();
  const std::vector<double> times = time_grid(cfg.t_max, cfg.dt);
  const auto [ne, sw] = diag_eigenstates();
  const Ensemble updown = make_classical_correlated(0.5, spin_up(), ket_alpha(), spin_down(), ket_beta());
  const Ensemble diagonal = make_classical_correlated(0.5, ne, ket_alpha(), sw, ket_beta());

  const ComplexMatrix pi_a = density_of(updown);
  const ComplexMatrix pi_b = density_of(diagonal);
  const double rho_gap = max_abs_diff(partial_trace_R(pi_a), partial_trace_R(pi_b));
  const double composite_gap = max_abs_diff(pi_a, pi_b);
  out.note("reduced_density_difference", rho_gap);
  out.note("composite_density_difference", composite_gap);

  out.arm("armA", measured_arm(updown, alpha_beta_basis(), EvolutionPolicy::BranchMeans, law, times, out, "armA"));
  out.arm("armB", measured_arm(diagonal, alpha_beta_basis(), EvolutionPolicy::BranchMeans, law, times, out, "armB"));
  out.contrast_arms();

  out.check("reduced_density_agreement", rho_gap, kAlgebraTol);
  out.check("composite_density_difference", composite_gap, 0.1, Kind::Above);
  if (cfg.fixed_omega) {
    check_linear_restoration(out);
    return out.take();
  }
  ScenarioReport report = out.take();
  const auto pure = [&](double t) { return s2_pure_diag(cfg.epsilon, t); };
  report.contracts.push_back({"armA_sigma2_zero", max_abs_s2(*report.arm("armA")), kNullTol, Kind::Below});
  report.contracts.push_back(
      {"armB_vs_pure_diag_curve", max_deviation_from(*report.arm("armB"), pure), kCurveTol, Kind::Below});
  return report;
}

ScenarioReport run_entanglement(const ScenarioConfig& cfg) {
  cfg.validate();
  ReportBuilder out(ScenarioId::Entanglement, cfg);
  note_config(out, cfg);
  const BasisChoice chosen = cfg.basis;
  const BasisChoice other = chosen == BasisChoice::UpDown ? BasisChoice::Diag : BasisChoice::UpDown;
  out.note("armA.basis", std::string(basis_label(chosen)));
  out.note("armB.basis", std::string(basis_label(other)));

  const PrecessionLaw law = cfg.law();
  const std::vector<double> times = time_grid(cfg.t_max, cfg.dt);
  const Ensemble prepared({Branch(1.0, singlet())});

  std::vector<double> probabilities;
  const auto run_arm = [&](BasisChoice b, const std::string& name) {
    const MeasurementBasis basis = b == BasisChoice::UpDown ? updown_basis() : diag_basis();
    return measured_arm(prepared, basis, EvolutionPolicy::BranchMeans, law, times, out, name, &probabilities);
  };
  out.arm("armA", run_arm(chosen, "armA"));
  out.arm("armB", run_arm(other, "armB"));
  out.contrast_arms();

  double probability_gap = 0.0;
  for (double p : probabilities) probability_gap = std::max(probability_gap, std::abs(p - 0.5));
  out.check("outcome_probabilities_half", probability_gap, kAlgebraTol);
  if (probabilities.size() != 4) out.check("outcome_count", static_cast<double>(probabilities.size()), 4.0);
  if (cfg.fixed_omega) {
    check_linear_restoration(out);
    return out.take();
  }
  ScenarioReport report = out.take();
  const std::string updown_arm = chosen == BasisChoice::UpDown ? "armA" : "armB";
  const std::string diag_arm = chosen == BasisChoice::Diag ? "armA" : "armB";
  const auto pure = [&](double t) { return s2_pure_diag(cfg.epsilon, t); };
  const double envelope = grid_max(times, pure);
  report.narrative.emplace_back("signal_magnitude", report.divergence);
  report.contracts.push_back({"updown_sigma2_zero", max_abs_s2(*report.arm(updown_arm)), kNullTol, Kind::Below});
  report.contracts.push_back(
      {"diag_vs_pure_diag_curve", max_deviation_from(*report.arm(diag_arm), pure), kCurveTol, Kind::Below});
  report.contracts.push_back(
      {"signal_vs_envelope", std::abs(report.divergence - envelope), kCurveTol, Kind::Below});
  return report;
}

ScenarioReport run_scenario(ScenarioId id, const ScenarioConfig& cfg) {
  switch (id) {
    case ScenarioId::LinearBaseline:
      return run_linear_baseline(cfg);
    case ScenarioId::NoCorrelations:
      return run_no_correlations(cfg);
    case ScenarioId::ClassicalCorrelations:
      return run_classical_correlations(cfg);
    case ScenarioId::ChangedCorrelations:
      return run_changed_correlations(cfg);
    case ScenarioId::Entanglement:
      return run_entanglement(cfg);
  }
  throw ArgumentError("unknown scenario");
}

}  // namespace nlq
