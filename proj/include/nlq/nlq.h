/*
 * Copyright 2026 The nlq Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libnlq.
 *
 * Every fallible call returns an nlq_status. On failure a human-readable
 * message for the calling thread is available from nlq_last_error() until
 * the next failing call on that thread. Reports are opaque handles owned by
 * the caller and released with nlq_report_destroy().
 */

#ifndef NLQ_NLQ_H
#define NLQ_NLQ_H

#include <stddef.h>
#include <stdint.h>

#if defined _WIN32 || defined __CYGWIN__
#ifdef NLQ_BUILDING_LIBRARY
#define NLQ_API __declspec(dllexport)
#else
#define NLQ_API __declspec(dllimport)
#endif
#else
#define NLQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nlq_status {
  NLQ_OK = 0,
  NLQ_ERROR_ARGUMENT = 1,
  NLQ_ERROR_NOT_PRODUCT = 2,
  NLQ_ERROR_IMPOSSIBLE_OUTCOME = 3,
  NLQ_ERROR_DEGENERATE_CONFIG = 4,
  NLQ_ERROR_INTERNAL = 5,
  NLQ_ERROR_IO = 6
} nlq_status;

typedef enum nlq_scenario {
  NLQ_SCENARIO_LINEAR_BASELINE = 0,
  NLQ_SCENARIO_NO_CORRELATIONS = 1,
  NLQ_SCENARIO_CLASSICAL_CORRELATIONS = 2,
  NLQ_SCENARIO_CHANGED_CORRELATIONS = 3,
  NLQ_SCENARIO_ENTANGLEMENT = 4
} nlq_scenario;

#define NLQ_SCENARIO_COUNT 5

typedef enum nlq_basis { NLQ_BASIS_UPDOWN = 0, NLQ_BASIS_DIAG = 1 } nlq_basis;

typedef enum nlq_dynamics {
  /* H = epsilon <Sigma_3> Sigma_3 */
  NLQ_DYNAMICS_NONLINEAR = 0,
  /* precession about the 3-axis at the fixed rate `omega` */
  NLQ_DYNAMICS_FIXED_PRECESSION = 1
} nlq_dynamics;

typedef enum nlq_format { NLQ_FORMAT_CSV = 0, NLQ_FORMAT_JSON = 1 } nlq_format;

typedef struct nlq_config {
  double p;
  double epsilon;
  double t_max;
  double dt;
  nlq_basis basis;
  uint64_t seed;
  uint64_t trials;
  nlq_dynamics dynamics;
  double omega;
} nlq_config;

typedef struct nlq_report nlq_report;

NLQ_API const char* nlq_version(void);
NLQ_API const char* nlq_last_error(void);
NLQ_API const char* nlq_status_string(nlq_status status);

/* p = 0.75, epsilon = 1, t_max = 10, dt = 1e-3, basis = diag, seed = 42,
 * trials = 1000, nonlinear dynamics. */
NLQ_API void nlq_config_init(nlq_config* cfg);

/* "sec3", "sec5", "sec6", "sec7", "sec8"; NULL for an out-of-range value. */
NLQ_API const char* nlq_scenario_name(nlq_scenario scenario);
/* Accepts the names above and the alias "linear". */
NLQ_API nlq_status nlq_scenario_parse(const char* name, nlq_scenario* out);

NLQ_API nlq_status nlq_run_scenario(nlq_scenario scenario, const nlq_config* cfg, nlq_report** out);
NLQ_API void nlq_report_destroy(nlq_report* report);

NLQ_API nlq_scenario nlq_report_scenario(const nlq_report* report);
NLQ_API double nlq_report_divergence(const nlq_report* report);
/* 1 when every contract check of the run passed, else 0. */
NLQ_API int nlq_report_contracts_hold(const nlq_report* report);
NLQ_API size_t nlq_report_contract_count(const nlq_report* report);
/* Any output pointer may be NULL. The name stays valid while the report lives. */
NLQ_API nlq_status nlq_report_contract(const nlq_report* report, size_t index, const char** name, double* value,
                                      double* threshold, int* passed);

NLQ_API size_t nlq_report_arm_count(const nlq_report* report);
/* NULL for an out-of-range index. */
NLQ_API const char* nlq_report_arm_name(const nlq_report* report, size_t arm);
NLQ_API size_t nlq_report_time_count(const nlq_report* report);
NLQ_API nlq_status nlq_report_sample(const nlq_report* report, size_t arm, size_t index, double* t,
                                     double bloch[3]);

/* Writes CSV or JSON to `path`, or to stdout when path is NULL or empty.
 * precision must lie in [6, 17]. */
NLQ_API nlq_status nlq_report_write(const nlq_report* report, const char* path, nlq_format format, int precision);

/* Runs the randomized linear no-influence suite and stores the largest
 * deviation found. */
NLQ_API nlq_status nlq_verify_linear(uint64_t trials, uint64_t seed, double* max_deviation);

/* Closed-form mean-value evolution of one Bloch vector. */
NLQ_API nlq_status nlq_closed_form(const double b0[3], nlq_dynamics dynamics, double rate, double t,
                                   double out[3]);

#ifdef __cplusplus
}
#endif

#endif /* NLQ_NLQ_H */
