// Copyright 2026 The fockflow authors - All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "fockflow/analytics.hpp"
#include "fockflow/run.hpp"

namespace {

// exit codes: 0 success, 1 config error, 2 runtime error
constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kRuntimeError = 2;

int cmd_run(const std::string& config_path) {
  fockflow::RunConfig cfg;
  try {
    cfg = fockflow::parse_config_file(config_path);
    const auto violations = fockflow::validate_config(cfg);
    if (!violations.empty()) {
      for (const auto& v : violations) std::cerr << "config error: " << v << "\n";
      return kConfigError;
    }
  } catch (const fockflow::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  }
  try {
    const fockflow::RunResult res = fockflow::run(cfg);
    for (const auto& f : res.files_written) std::cout << f << "\n";
    std::printf("done in %.2f s\n", res.wall_seconds);
    return kOk;
  } catch (const fockflow::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return kRuntimeError;
  }
}

int cmd_validate(const std::string& config_path) {
  const auto violations = fockflow::validate_config_file(config_path);
  if (violations.empty()) {
    std::cout << "ok\n";
    return kOk;
  }
  for (const auto& v : violations) std::cout << v << "\n";
  return kConfigError;
}

struct AnalyticArgs {
  int L = 18;
  double J = 1.0;
  double phi1 = 0.0;
  double phi2 = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  bool lambda2_set = false;
};

int cmd_analytic(const std::string& quantity, const AnalyticArgs& a) {
  fockflow::ModelParams p;
  p.L = a.L;
  p.J = a.J;
  p.phi1 = a.phi1;
  p.phi2 = a.phi2;
  p.lambda1 = a.lambda1;
  p.lambda2 = a.lambda2_set ? a.lambda2 : 0.5 * a.lambda1;
  try {
    if (quantity == "vb") {
      std::printf("v_B = %.12g\n", fockflow::butterfly_velocity(p));
    } else if (quantity == "echo") {
      std::printf("echo_detuning = %.12g\n", fockflow::check_echo_condition(p));
    } else if (quantity == "thermal") {
      const auto th = fockflow::thermal_reference(p.L);
      std::printf("Delta_x_ft = %.12g  (Delta_x/sqrt(L) = %.12g)\n", th.x_width,
                  th.x_width / std::sqrt(p.L));
      std::printf("d,pi_ft,d_ft\n");
      for (int d = 0; d <= p.L; ++d)
        std::printf("%d,%.12e,%.12e\n", d, th.pi_ft[d], th.d_ft[d]);
    } else if (quantity == "subspace") {
      const auto sub = fockflow::subspace_thermal_reference(p.L);
      std::printf("x_mean = %.12g\nDelta_x = %.12g\n", sub.x_mean, sub.x_width);
    } else if (quantity == "dos") {
      const auto th = fockflow::thermal_reference(p.L);
      std::printf("w,dos\n");
      for (int w = 0; w <= p.L; w += 2) std::printf("%d,%.12e\n", w, th.d_ft[w]);
    } else {
      std::cerr << "unknown quantity '" << quantity
                << "' (expected vb|echo|thermal|subspace|dos)\n";
      return kConfigError;
    }
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return kRuntimeError;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fockflow: kicked-Ising ring simulator for Fock-space dynamics"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run_cmd = app.add_subcommand("run", "execute a run config (or a manifest)");
  run_cmd->add_option("config", config_path, "JSON config file")->required();

  std::string validate_path;
  auto* val_cmd = app.add_subcommand("validate", "check a config without executing");
  val_cmd->add_option("config", validate_path, "JSON config file")->required();

  std::string quantity;
  AnalyticArgs aa;
  auto* ana_cmd = app.add_subcommand("analytic", "print closed-form reference values");
  ana_cmd->add_option("quantity", quantity, "vb|echo|thermal|subspace|dos")->required();
  ana_cmd->add_option("--L", aa.L, "qubit count");
  ana_cmd->add_option("--J", aa.J, "Ising strength");
  ana_cmd->add_option("--phi1", aa.phi1, "first longitudinal angle");
  ana_cmd->add_option("--phi2", aa.phi2, "second longitudinal angle");
  ana_cmd->add_option("--lambda1", aa.lambda1, "single-qubit perturbation");
  auto* l2 = ana_cmd->add_option("--lambda2", aa.lambda2, "two-qubit perturbation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kConfigError : kOk;
  }

  aa.lambda2_set = l2->count() > 0;
  if (run_cmd->parsed()) return cmd_run(config_path);
  if (val_cmd->parsed()) return cmd_validate(validate_path);
  if (ana_cmd->parsed()) return cmd_analytic(quantity, aa);
  return kConfigError;
}
