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

#include "nlq/nlq.h"

#include <exception>
#include <string>

#include "nlq/dynamics_linear.hpp"
#include "nlq/errors.hpp"
#include "nlq/report_io.hpp"
#include "nlq/scenarios.hpp"

struct nlq_report {
  nlq::ScenarioReport value;
};

namespace {

thread_local std::string last_error;

nlq_status fail(nlq_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

/// Runs `body`, translating nlq exceptions into status codes.
template <typename Body>
nlq_status guarded(Body&& body) {
  try {
    body();
    return NLQ_OK;
  } catch (const nlq::DegenerateConfig& e) {
    return fail(NLQ_ERROR_DEGENERATE_CONFIG, e.what());
  } catch (const nlq::ArgumentError& e) {
    return fail(NLQ_ERROR_ARGUMENT, e.what());
  } catch (const nlq::NotProduct& e) {
    return fail(NLQ_ERROR_NOT_PRODUCT, e.what());
  } catch (const nlq::ImpossibleOutcome& e) {
    return fail(NLQ_ERROR_IMPOSSIBLE_OUTCOME, e.what());
  } catch (const nlq::IoError& e) {
    return fail(NLQ_ERROR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(NLQ_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(NLQ_ERROR_INTERNAL, "unknown exception");
  }
}

nlq::ScenarioConfig to_config(const nlq_config& c) {
  nlq::ScenarioConfig cfg;
  cfg.p = c.p;
  cfg.epsilon = c.epsilon;
  cfg.t_max = c.t_max;
  cfg.dt = c.dt;
  switch (c.basis) {
    case NLQ_BASIS_UPDOWN:
      cfg.basis = nlq::BasisChoice::UpDown;
      break;
    case NLQ_BASIS_DIAG:
      cfg.basis = nlq::BasisChoice::Diag;
      break;
    default:
      throw nlq::ArgumentError("unknown basis choice");
  }
  cfg.seed = c.seed;
  cfg.trials = static_cast<std::size_t>(c.trials);
  switch (c.dynamics) {
    case NLQ_DYNAMICS_NONLINEAR:
      break;
    case NLQ_DYNAMICS_FIXED_PRECESSION:
      cfg.fixed_omega = c.omega;
      break;
    default:
      throw nlq::ArgumentError("unknown dynamics kind");
  }
  return cfg;
}

bool valid_scenario(nlq_scenario s) { return s >= NLQ_SCENARIO_LINEAR_BASELINE && s <= NLQ_SCENARIO_ENTANGLEMENT; }

nlq::ScenarioId to_id(nlq_scenario s) { return static_cast<nlq::ScenarioId>(s); }

}  // namespace

extern "C" {

const char* nlq_version(void) { return "1.0.0"; }

const char* nlq_last_error(void) { return last_error.c_str(); }

const char* nlq_status_string(nlq_status status) {
  switch (status) {
    case NLQ_OK:
      return "ok";
    case NLQ_ERROR_ARGUMENT:
      return "argument error";
    case NLQ_ERROR_NOT_PRODUCT:
      return "branch is not a product state";
    case NLQ_ERROR_IMPOSSIBLE_OUTCOME:
      return "impossible measurement outcome";
    case NLQ_ERROR_DEGENERATE_CONFIG:
      return "degenerate configuration";
    case NLQ_ERROR_INTERNAL:
      return "internal error";
    case NLQ_ERROR_IO:
      return "i/o error";
  }
  return "unknown status";
}

void nlq_config_init(nlq_config* cfg) {
  if (cfg == nullptr) return;
  const nlq::ScenarioConfig defaults;
  cfg->p = defaults.p;
  cfg->epsilon = defaults.epsilon;
  cfg->t_max = defaults.t_max;
  cfg->dt = defaults.dt;
  cfg->basis = defaults.basis == nlq::BasisChoice::UpDown ? NLQ_BASIS_UPDOWN : NLQ_BASIS_DIAG;
  cfg->seed = defaults.seed;
  cfg->trials = defaults.trials;
  cfg->dynamics = NLQ_DYNAMICS_NONLINEAR;
  cfg->omega = 1.0;
}

const char* nlq_scenario_name(nlq_scenario scenario) {
  if (!valid_scenario(scenario)) return nullptr;
  // scenario_name returns views of string literals.
  return nlq::scenario_name(to_id(scenario)).data();
}

nlq_status nlq_scenario_parse(const char* name, nlq_scenario* out) {
  if (name == nullptr || out == nullptr) return fail(NLQ_ERROR_ARGUMENT, "null argument");
  const auto id = nlq::scenario_from_name(name);
  if (!id) return fail(NLQ_ERROR_ARGUMENT, std::string("unknown scenario '") + name + "'");
  *out = static_cast<nlq_scenario>(*id);
  return NLQ_OK;
}

nlq_status nlq_run_scenario(nlq_scenario scenario, const nlq_config* cfg, nlq_report** out) {
  if (cfg == nullptr || out == nullptr) return fail(NLQ_ERROR_ARGUMENT, "null argument");
  *out = nullptr;
  if (!valid_scenario(scenario)) return fail(NLQ_ERROR_ARGUMENT, "unknown scenario");
  return guarded([&] { *out = new nlq_report{nlq::run_scenario(to_id(scenario), to_config(*cfg))}; });
}

void nlq_report_destroy(nlq_report* report) { delete report; }

nlq_scenario nlq_report_scenario(const nlq_report* report) {
  return report == nullptr ? NLQ_SCENARIO_LINEAR_BASELINE : static_cast<nlq_scenario>(report->value.id);
}

double nlq_report_divergence(const nlq_report* report) { return report == nullptr ? 0.0 : report->value.divergence; }

int nlq_report_contracts_hold(const nlq_report* report) {
  return report != nullptr && report->value.contracts_hold() ? 1 : 0;
}

size_t nlq_report_contract_count(const nlq_report* report) {
  return report == nullptr ? 0 : report->value.contracts.size();
}

nlq_status nlq_report_contract(const nlq_report* report, size_t index, const char** name, double* value,
                               double* threshold, int* passed) {
  if (report == nullptr) return fail(NLQ_ERROR_ARGUMENT, "null report");
  if (index >= report->value.contracts.size()) return fail(NLQ_ERROR_ARGUMENT, "contract index out of range");
  const auto& c = report->value.contracts[index];
  if (name != nullptr) *name = c.name.c_str();
  if (value != nullptr) *value = c.value;
  if (threshold != nullptr) *threshold = c.threshold;
  if (passed != nullptr) *passed = c.passed() ? 1 : 0;
  return NLQ_OK;
}

size_t nlq_report_arm_count(const nlq_report* report) { return report == nullptr ? 0 : report->value.arms.size(); }

const char* nlq_report_arm_name(const nlq_report* report, size_t arm) {
  if (report == nullptr || arm >= report->value.arms.size()) return nullptr;
  return report->value.arms[arm].first.c_str();
}

size_t nlq_report_time_count(const nlq_report* report) {
  if (report == nullptr || report->value.arms.empty()) return 0;
  return report->value.arms.front().second.size();
}

nlq_status nlq_report_sample(const nlq_report* report, size_t arm, size_t index, double* t, double bloch[3]) {
  if (report == nullptr) return fail(NLQ_ERROR_ARGUMENT, "null report");
  if (arm >= report->value.arms.size()) return fail(NLQ_ERROR_ARGUMENT, "arm index out of range");
  const nlq::Trajectory& traj = report->value.arms[arm].second;
  if (index >= traj.size()) return fail(NLQ_ERROR_ARGUMENT, "time index out of range");
  if (t != nullptr) *t = traj.times()[index];
  if (bloch != nullptr) {
    const nlq::BlochVector& b = traj.points()[index];
    bloch[0] = b.s1;
    bloch[1] = b.s2;
    bloch[2] = b.s3;
  }
  return NLQ_OK;
}

nlq_status nlq_report_write(const nlq_report* report, const char* path, nlq_format format, int precision) {
  if (report == nullptr) return fail(NLQ_ERROR_ARGUMENT, "null report");
  if (format != NLQ_FORMAT_CSV && format != NLQ_FORMAT_JSON) return fail(NLQ_ERROR_ARGUMENT, "unknown format");
  return guarded([&] {
    nlq::emit_report(report->value, path == nullptr ? std::string() : std::string(path),
                     format == NLQ_FORMAT_CSV ? nlq::OutputFormat::Csv : nlq::OutputFormat::Json, precision);
  });
}

nlq_status nlq_verify_linear(uint64_t trials, uint64_t seed, double* max_deviation) {
  if (max_deviation == nullptr) return fail(NLQ_ERROR_ARGUMENT, "null argument");
  return guarded([&] { *max_deviation = nlq::no_signalling_suite(trials, seed).max_deviation(); });
}

nlq_status nlq_closed_form(const double b0[3], nlq_dynamics dynamics, double rate, double t, double out[3]) {
  if (b0 == nullptr || out == nullptr) return fail(NLQ_ERROR_ARGUMENT, "null argument");
  nlq::PrecessionLaw law;
  if (dynamics == NLQ_DYNAMICS_NONLINEAR) {
    law = nlq::NonlinearParams{rate};
  } else if (dynamics == NLQ_DYNAMICS_FIXED_PRECESSION) {
    law = nlq::FixedPrecession{rate};
  } else {
    return fail(NLQ_ERROR_ARGUMENT, "unknown dynamics kind");
  }
  return guarded([&] {
    const double times[] = {t};
    const nlq::BlochVector b = nlq::closed_form_trajectory({b0[0], b0[1], b0[2]}, law, times).points().front();
    out[0] = b.s1;
    out[1] = b.s2;
    out[2] = b.s3;
  });
}

}  // extern "C"
