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

#include "cli_options.hpp"

#include <map>
#include <vector>

#include "CLI11.hpp"

namespace nlq::cli {
namespace {

constexpr const char* kDescriptions[NLQ_SCENARIO_COUNT] = {
    "linear baseline: randomized no-influence checks (alias: linear)",
    "no correlations: measuring R leaves the S dynamics unchanged",
    "classical correlations: same rho for S, different S dynamics",
    "changed correlations: up/down versus diagonal mixtures",
    "entanglement: the basis measured on R selects the S dynamics",
};

std::string valid_names() {
  std::string names;
  for (int i = 0; i < NLQ_SCENARIO_COUNT; ++i) {
    if (!names.empty()) names += ", ";
    names += nlq_scenario_name(static_cast<nlq_scenario>(i));
  }
  return names + ", linear";
}

std::string extension_of(const std::string& path) {
  const auto dot = path.find_last_of('.');
  return dot == std::string::npos ? std::string() : path.substr(dot + 1);
}

}  // namespace

std::string scenario_listing() {
  std::string out;
  for (int i = 0; i < NLQ_SCENARIO_COUNT; ++i) {
    out += nlq_scenario_name(static_cast<nlq_scenario>(i));
    out += "  ";
    out += kDescriptions[i];
    out += '\n';
  }
  return out;
}

ParseResult parse_args(std::span<const std::string> argv) {
  RunConfig cfg;
  nlq_config_init(&cfg.config);

  CLI::App app{"Two-spin simulator contrasting linear and state-dependent (nonlinear) mean-value dynamics", "nlq"};
  app.require_subcommand(1);

  std::string scenario_name;
  std::string basis = "diag";
  std::string format;
  std::string dynamics = "nonlinear";
  double omega = cfg.config.omega;

  const std::map<std::string, nlq_basis> basis_map{{"updown", NLQ_BASIS_UPDOWN}, {"diag", NLQ_BASIS_DIAG}};
  const std::map<std::string, nlq_format> format_map{{"csv", NLQ_FORMAT_CSV}, {"json", NLQ_FORMAT_JSON}};

  const auto add_output_options = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.output_path, "Output file (default: stdout)");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--precision", cfg.precision, "Significant digits in output")
        ->check(CLI::Range(6, 17))
        ->capture_default_str();
  };

  CLI::App* run = app.add_subcommand("run", "Run one scenario and export its trajectories");
  run->add_option("scenario", scenario_name, "Scenario name (see `list`)")
      ->required()
      ->check(CLI::Validator(
          [](std::string& name) {
            nlq_scenario s{};
            if (nlq_scenario_parse(name.c_str(), &s) == NLQ_OK) return std::string();
            return "unknown scenario '" + name + "'; valid names: " + valid_names();
          },
          "SCENARIO"));
  run->add_option("--p", cfg.config.p, "Mixture probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  run->add_option("--epsilon", cfg.config.epsilon, "Nonlinearity strength")->capture_default_str();
  run->add_option("--t-max", cfg.config.t_max, "End of the time grid")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  run->add_option("--dt", cfg.config.dt, "Time step")->check(CLI::PositiveNumber)->capture_default_str();
  run->add_option("--basis", basis, "Basis measured on R (sec8)")->check(CLI::IsMember({"updown", "diag"}));
  run->add_option("--dynamics", dynamics, "S dynamics: nonlinear, or linear fixed-rate precession")
      ->check(CLI::IsMember({"nonlinear", "linear"}));
  run->add_option("--omega", omega, "Precession rate for --dynamics linear");
  run->add_option("--seed", cfg.config.seed, "Random seed (sec3)")->capture_default_str();
  run->add_option("--trials", cfg.config.trials, "Random trials (sec3)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output_options(run);

  CLI::App* verify = app.add_subcommand("verify-linear", "Randomized linear no-influence suite");
  verify->add_option("--seed", cfg.config.seed, "Random seed")->capture_default_str();
  verify->add_option("--trials", cfg.config.trials, "Number of trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output_options(verify);

  CLI::App* list = app.add_subcommand("list", "List scenario names");

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    return HelpRequest{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return HelpRequest{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    return UsageError{e.what()};
  }

  if (*list) {
    cfg.command = Command::List;
    return cfg;
  }
  if (*verify) {
    cfg.command = Command::VerifyLinear;
    cfg.scenario = NLQ_SCENARIO_LINEAR_BASELINE;
  } else {
    cfg.command = Command::Run;
    nlq_scenario_parse(scenario_name.c_str(), &cfg.scenario);
    cfg.config.basis = basis_map.at(basis);
    if (dynamics == "linear") {
      cfg.config.dynamics = NLQ_DYNAMICS_FIXED_PRECESSION;
      cfg.config.omega = omega;
    } else if (run->count("--omega") > 0) {
      return UsageError{"--omega requires --dynamics linear"};
    }
    if (cfg.config.dt > cfg.config.t_max) return UsageError{"--dt must not exceed --t-max"};
  }

  if (!format.empty()) {
    cfg.format = format_map.at(format);
  } else {
    cfg.format = extension_of(cfg.output_path) == "json" ? NLQ_FORMAT_JSON : NLQ_FORMAT_CSV;
  }
  return cfg;
}

}  // namespace nlq::cli
