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

// nlq: command-line front end over the libnlq C API.
//
// Exit codes: 0 when every contract of the run holds, 2 when any contract
// fails, 1 on usage or I/O errors.

#include <cstdio>
#include <string>
#include <vector>

#include "cli_options.hpp"
#include "nlq/nlq.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitContract = 2;

struct ReportHandle {
  nlq_report* ptr = nullptr;
  ~ReportHandle() { nlq_report_destroy(ptr); }
};

void print_contracts(const nlq_report* report) {
  const size_t n = nlq_report_contract_count(report);
  for (size_t i = 0; i < n; ++i) {
    const char* name = nullptr;
    double value = 0.0;
    double threshold = 0.0;
    int passed = 0;
    nlq_report_contract(report, i, &name, &value, &threshold, &passed);
    std::fprintf(stderr, "  [%s] %s = %.3e (threshold %.3e)\n", passed ? "ok" : "FAIL", name, value, threshold);
  }
}

int execute(const nlq::cli::RunConfig& cfg) {
  using nlq::cli::Command;
  if (cfg.command == Command::List) {
    std::fputs(nlq::cli::scenario_listing().c_str(), stdout);
    return kExitOk;
  }

  ReportHandle report;
  const nlq_status status = nlq_run_scenario(cfg.scenario, &cfg.config, &report.ptr);
  if (status != NLQ_OK) {
    std::fprintf(stderr, "nlq: %s: %s\n", nlq_status_string(status), nlq_last_error());
    return kExitUsage;
  }

  const bool to_stdout = cfg.output_path.empty();
  if (cfg.command == Command::Run || !to_stdout) {
    const char* path = to_stdout ? nullptr : cfg.output_path.c_str();
    if (nlq_report_write(report.ptr, path, cfg.format, cfg.precision) != NLQ_OK) {
      std::fprintf(stderr, "nlq: %s\n", nlq_last_error());
      return kExitUsage;
    }
  }

  const bool hold = nlq_report_contracts_hold(report.ptr) != 0;
  const char* name = nlq_scenario_name(cfg.scenario);
  if (cfg.command == Command::VerifyLinear) {
    std::printf("verify-linear trials=%llu seed=%llu max_deviation=%.6e %s\n",
                static_cast<unsigned long long>(cfg.config.trials), static_cast<unsigned long long>(cfg.config.seed),
                nlq_report_divergence(report.ptr), hold ? "PASS" : "FAIL");
  } else {
    std::fprintf(stderr, "%s: divergence=%.12g contracts %s\n", name, nlq_report_divergence(report.ptr),
                 hold ? "hold" : "FAILED");
  }
  if (!hold) print_contracts(report.ptr);
  return hold ? kExitOk : kExitContract;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  const nlq::cli::ParseResult parsed = nlq::cli::parse_args(args);
  if (const auto* help = std::get_if<nlq::cli::HelpRequest>(&parsed)) {
    std::fputs(help->text.c_str(), stdout);
    return kExitOk;
  }
  if (const auto* err = std::get_if<nlq::cli::UsageError>(&parsed)) {
    std::fprintf(stderr, "nlq: %s\nRun 'nlq --help' for usage.\n", err->message.c_str());
    return kExitUsage;
  }
  return execute(std::get<nlq::cli::RunConfig>(parsed));
}
