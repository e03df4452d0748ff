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

#ifndef FOCKFLOW_RUN_HPP
#define FOCKFLOW_RUN_HPP

#include <string>
#include <vector>

#include "fockflow/model.hpp"
#include "fockflow/noise.hpp"
#include "fockflow/observables.hpp"
#include "fockflow/u1.hpp"

namespace fockflow {

inline constexpr const char* kVersion = "0.1.0";

enum class ExperimentKind { evolve, eigen, network, sweep, noise, u1, analytic };

ExperimentKind parse_experiment_kind(const std::string& name);
std::string to_string(ExperimentKind k);

enum class EngineType { dense, mps };

struct EngineConfig {
  EngineType type = EngineType::dense;
  int chi_max = 256;
  int shots = 10000;
  int sample_stride = 1;  // sample bitstrings every k-th period (mps engine)
  int dense_evolve_limit = kDefaultDenseEvolveLimit;
  int dense_eigen_limit = kDefaultDenseEigenLimit;
  int u1_dense_limit = 18;
};

struct InitialStateConfig {
  InitialStateKind kind = InitialStateKind::one_fm;
  std::vector<int> shifts = {0};
  /// Pattern seeds; only the random kind uses more than one.
  std::vector<std::uint64_t> seeds = {0};
};

struct RealizationConfig {
  /// Number of phi2 draws from (0, 2pi); 0 keeps the configured phi2 fixed
  /// (single realization). phi1 stays fixed unless sample_phi1 is set.
  int phi2_samples = 10;
  std::uint64_t base_seed = 1;
  bool sample_phi1 = false;
};

struct SweepConfig {
  std::vector<double> lambda1_values;
  int fourier_window_start = 2;
  int fourier_window_end = 20;
  int avg_window_start = 10;
  int avg_window_end = 30;
};

struct NoiseRunConfig {
  NoiseParams params;
  int trajectories = 100;
  int shots_per_trajectory = 1000;
  bool apply_readout = true;
};

struct NetworkConfig {
  bool drop_pi_pulse = true;
  double threshold = 0.04;
};

struct RunConfig {
  ExperimentKind kind = ExperimentKind::evolve;
  ModelParams model;
  U1Params u1;
  EngineConfig engine;
  int n_periods = 0;
  InitialStateConfig initial;
  RealizationConfig realizations;
  std::vector<std::string> observables = {"fock", "dw", "autocorr"};
  std::string output_dir;
  SweepConfig sweep;
  NoiseRunConfig noise;
  NetworkConfig network;
  SectorPartition participation_partition = SectorPartition::by_w;
};

/// Configuration problem, annotated with the offending key path.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& key_path, const std::string& message)
      : std::runtime_error(key_path.empty() ? message : key_path + ": " + message) {}
};

/// Parses a config file, or a manifest (re-runs embed the resolved config
/// under the "config" key). Throws ConfigError.
RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text, const std::string& origin = "<memory>");

/// Schema and limit checks without executing; empty result means ok.
std::vector<std::string> validate_config_file(const std::string& path);
std::vector<std::string> validate_config(const RunConfig& cfg);

std::string config_to_json(const RunConfig& cfg);

struct RunResult {
  std::vector<std::string> files_written;
  double wall_seconds = 0.0;
};

/// Executes all realizations (phi2 samples x initial-state shifts), writes
/// one CSV per observable group plus a JSON manifest. Deterministic under
/// fixed seeds; FOCKFLOW_THREADS overrides the worker count.
RunResult run(const RunConfig& cfg);

}  // namespace fockflow

#endif  // FOCKFLOW_RUN_HPP
