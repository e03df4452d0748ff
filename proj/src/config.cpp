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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fockflow/run.hpp"

namespace fockflow {

using nlohmann::json;

ExperimentKind parse_experiment_kind(const std::string& name) {
  if (name == "evolve") return ExperimentKind::evolve;
  if (name == "eigen") return ExperimentKind::eigen;
  if (name == "network") return ExperimentKind::network;
  if (name == "sweep") return ExperimentKind::sweep;
  if (name == "noise") return ExperimentKind::noise;
  if (name == "u1") return ExperimentKind::u1;
  if (name == "analytic") return ExperimentKind::analytic;
  throw ConfigError("experiment", "unknown kind '" + name + "'");
}

std::string to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::evolve: return "evolve";
    case ExperimentKind::eigen: return "eigen";
    case ExperimentKind::network: return "network";
    case ExperimentKind::sweep: return "sweep";
    case ExperimentKind::noise: return "noise";
    case ExperimentKind::u1: return "u1";
    case ExperimentKind::analytic: return "analytic";
  }
  return "?";
}

namespace {

// typed getters carrying the dotted key path into error messages

template <typename T>
T require(const json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key)) throw ConfigError(path + key, "missing required key");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(path + key, std::string("bad type: ") + e.what());
  }
}

template <typename T>
T get_or(const json& j, const std::string& key, T fallback, const std::string& path) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(path + key, std::string("bad type: ") + e.what());
  }
}

ModelParams parse_model(const json& j, const std::string& path) {
  ModelParams p;
  p.L = require<int>(j, "L", path);
  p.J = get_or<double>(j, "J", 1.0, path);
  p.phi1 = get_or<double>(j, "phi1", 0.0, path);
  p.phi2 = get_or<double>(j, "phi2", 0.0, path);
  if (j.contains("lambda1") && !j.contains("lambda2")) {
    p.lambda1 = require<double>(j, "lambda1", path);
    p.lambda2 = 0.5 * p.lambda1;  // default coupling convention
  } else {
    p.lambda1 = get_or<double>(j, "lambda1", 0.0, path);
    p.lambda2 = get_or<double>(j, "lambda2", 0.0, path);
  }
  const std::string b = get_or<std::string>(j, "boundary", "periodic", path);
  if (b == "periodic")
    p.boundary = Boundary::periodic;
  else if (b == "open")
    p.boundary = Boundary::open;
  else
    throw ConfigError(path + "boundary", "must be 'periodic' or 'open'");
  return p;
}

U1Params parse_u1(const json& j, const std::string& path) {
  U1Params p;
  p.L = require<int>(j, "L", path);
  p.omega = get_or<double>(j, "omega", 8.0, path);
  p.theta_h = get_or<double>(j, "theta_h", 0.9 * kPi, path);
  p.eps = get_or<double>(j, "eps", 0.1, path);
  return p;
}

bool wants_observable(const RunConfig& cfg, const std::string& name) {
  return std::find(cfg.observables.begin(), cfg.observables.end(), name) !=
         cfg.observables.end();
}

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports a byte offset; translate to line/column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ConfigError("", origin + ":" + std::to_string(line) + ":" + std::to_string(col) +
                              ": parse failure: " + e.what());
  }

  if (j.contains("config")) j = j.at("config");  // manifest re-run

  RunConfig cfg;
  cfg.kind = parse_experiment_kind(require<std::string>(j, "experiment", ""));

  if (cfg.kind == ExperimentKind::u1) {
    if (!j.contains("u1")) throw ConfigError("u1", "missing required key");
    cfg.u1 = parse_u1(j.at("u1"), "u1.");
  } else {
    if (!j.contains("model")) throw ConfigError("model", "missing required key");
    cfg.model = parse_model(j.at("model"), "model.");
  }

  if (j.contains("engine")) {
    const json& e = j.at("engine");
    const std::string t = get_or<std::string>(e, "type", "dense", "engine.");
    if (t == "dense")
      cfg.engine.type = EngineType::dense;
    else if (t == "mps")
      cfg.engine.type = EngineType::mps;
    else
      throw ConfigError("engine.type", "must be 'dense' or 'mps'");
    cfg.engine.chi_max = get_or<int>(e, "chi_max", cfg.engine.chi_max, "engine.");
    cfg.engine.shots = get_or<int>(e, "shots", cfg.engine.shots, "engine.");
    cfg.engine.sample_stride = get_or<int>(e, "sample_stride", 1, "engine.");
    cfg.engine.dense_evolve_limit =
        get_or<int>(e, "dense_evolve_limit", cfg.engine.dense_evolve_limit, "engine.");
    cfg.engine.dense_eigen_limit =
        get_or<int>(e, "dense_eigen_limit", cfg.engine.dense_eigen_limit, "engine.");
    cfg.engine.u1_dense_limit = get_or<int>(e, "u1_dense_limit", 18, "engine.");
  }

  cfg.n_periods = get_or<int>(j, "n_periods", 0, "");

  if (j.contains("initial_state")) {
    const json& s = j.at("initial_state");
    cfg.initial.kind =
        parse_initial_state_kind(get_or<std::string>(s, "kind", "1fm", "initial_state."));
    cfg.initial.shifts =
        get_or<std::vector<int>>(s, "shifts", cfg.initial.shifts, "initial_state.");
    if (s.contains("seeds"))
      cfg.initial.seeds = require<std::vector<std::uint64_t>>(s, "seeds", "initial_state.");
    else
      cfg.initial.seeds = {get_or<std::uint64_t>(s, "seed", 0, "initial_state.")};
  }

  if (j.contains("realizations")) {
    const json& r = j.at("realizations");
    cfg.realizations.phi2_samples =
        get_or<int>(r, "phi2_samples", cfg.realizations.phi2_samples, "realizations.");
    cfg.realizations.base_seed =
        get_or<std::uint64_t>(r, "base_seed", cfg.realizations.base_seed, "realizations.");
    cfg.realizations.sample_phi1 = get_or<bool>(r, "sample_phi1", false, "realizations.");
  }

  cfg.observables = get_or<std::vector<std::string>>(j, "observables", cfg.observables, "");
  cfg.output_dir = get_or<std::string>(j, "output_dir", "", "");

  if (j.contains("sweep")) {
    const json& s = j.at("sweep");
    cfg.sweep.lambda1_values =
        get_or<std::vector<double>>(s, "lambda1_values", {}, "sweep.");
    cfg.sweep.fourier_window_start = get_or<int>(s, "fourier_window_start", 2, "sweep.");
    cfg.sweep.fourier_window_end = get_or<int>(s, "fourier_window_end", 20, "sweep.");
    cfg.sweep.avg_window_start = get_or<int>(s, "avg_window_start", 10, "sweep.");
    cfg.sweep.avg_window_end = get_or<int>(s, "avg_window_end", 30, "sweep.");
  }

  if (j.contains("noise")) {
    const json& n = j.at("noise");
    cfg.noise.params.t1_us = get_or<double>(n, "t1_us", cfg.noise.params.t1_us, "noise.");
    cfg.noise.params.t2_us = get_or<double>(n, "t2_us", cfg.noise.params.t2_us, "noise.");
    cfg.noise.params.e_sq = get_or<double>(n, "e_sq", cfg.noise.params.e_sq, "noise.");
    cfg.noise.params.e_tq = get_or<double>(n, "e_tq", cfg.noise.params.e_tq, "noise.");
    cfg.noise.params.readout_eps =
        get_or<double>(n, "readout_eps", cfg.noise.params.readout_eps, "noise.");
    cfg.noise.trajectories = get_or<int>(n, "trajectories", cfg.noise.trajectories, "noise.");
    cfg.noise.shots_per_trajectory =
        get_or<int>(n, "shots_per_trajectory", cfg.noise.shots_per_trajectory, "noise.");
    cfg.noise.apply_readout = get_or<bool>(n, "apply_readout", true, "noise.");
  }

  if (j.contains("network")) {
    const json& n = j.at("network");
    cfg.network.drop_pi_pulse = get_or<bool>(n, "drop_pi_pulse", true, "network.");
    cfg.network.threshold = get_or<double>(n, "threshold", 0.04, "network.");
  }

  const std::string part = get_or<std::string>(j, "participation_partition", "w", "");
  if (part == "w")
    cfg.participation_partition = SectorPartition::by_w;
  else if (part == "nup")
    cfg.participation_partition = SectorPartition::by_nup;
  else
    throw ConfigError("participation_partition", "must be 'w' or 'nup'");

  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("", "cannot open config file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str(), path);
}

std::vector<std::string> validate_config(const RunConfig& cfg) {
  std::vector<std::string> v;
  const bool is_u1 = cfg.kind == ExperimentKind::u1;
  if (!is_u1) {
    if (cfg.model.L < 2) v.push_back("model.L: must be >= 2");
    for (auto [name, val] : std::initializer_list<std::pair<const char*, double>>{
             {"model.J", cfg.model.J},
             {"model.phi1", cfg.model.phi1},
             {"model.phi2", cfg.model.phi2},
             {"model.lambda1", cfg.model.lambda1},
             {"model.lambda2", cfg.model.lambda2}})
      if (!std::isfinite(val)) v.push_back(std::string(name) + ": must be finite");
  }

  switch (cfg.kind) {
    case ExperimentKind::evolve:
    case ExperimentKind::sweep:
    case ExperimentKind::noise:
      if (cfg.engine.type == EngineType::dense && cfg.model.L > cfg.engine.dense_evolve_limit)
        v.push_back("model.L: dense limit exceeded (evolve limit " +
                    std::to_string(cfg.engine.dense_evolve_limit) + ")");
      if (cfg.n_periods < 0) v.push_back("n_periods: must be >= 0");
      break;
    case ExperimentKind::eigen:
      if (cfg.model.L > cfg.engine.dense_eigen_limit)
        v.push_back("model.L: dense limit exceeded (eigen limit " +
                    std::to_string(cfg.engine.dense_eigen_limit) + ")");
      break;
    case ExperimentKind::network:
      if (cfg.model.L > 10) v.push_back("model.L: network limit 10 exceeded");
      if (cfg.network.threshold < 0 || cfg.network.threshold > 1)
        v.push_back("network.threshold: must be in [0, 1]");
      break;
    case ExperimentKind::u1:
      if (cfg.u1.L < 4) v.push_back("u1.L: must be >= 4");
      if (cfg.u1.L > cfg.engine.u1_dense_limit)
        v.push_back("u1.L: dense limit exceeded (u1 limit " +
                    std::to_string(cfg.engine.u1_dense_limit) + ")");
      if (cfg.u1.omega <= 0) v.push_back("u1.omega: must be positive");
      break;
    case ExperimentKind::analytic:
      break;
  }

  if (cfg.engine.type == EngineType::mps) {
    if (cfg.engine.chi_max < 1) v.push_back("engine.chi_max: must be >= 1");
    const bool wants_sampling =
        std::find(cfg.observables.begin(), cfg.observables.end(), "fock") !=
            cfg.observables.end() ||
        std::find(cfg.observables.begin(), cfg.observables.end(), "dw") !=
            cfg.observables.end() ||
        std::find(cfg.observables.begin(), cfg.observables.end(), "correlators") !=
            cfg.observables.end();
    if (wants_sampling && cfg.engine.shots <= 0)
      v.push_back("engine.shots: must be > 0 for mps sampling observables");
  }

  if (cfg.engine.type == EngineType::mps && wants_observable(cfg, "participation"))
    v.push_back("observables: participation requires the dense engine");

  if (cfg.kind == ExperimentKind::sweep) {
    if (cfg.sweep.lambda1_values.empty()) v.push_back("sweep.lambda1_values: must be non-empty");
    if (cfg.n_periods < std::max(cfg.sweep.fourier_window_end, cfg.sweep.avg_window_end))
      v.push_back("n_periods: must cover the sweep windows");
  }

  if (cfg.kind != ExperimentKind::analytic && cfg.output_dir.empty())
    v.push_back("output_dir: must be set");

  for (const auto& s : cfg.initial.shifts) {
    const int L = is_u1 ? cfg.u1.L : cfg.model.L;
    if (s < 0 || s >= L) v.push_back("initial_state.shifts: shift out of [0, L)");
  }
  if (cfg.realizations.phi2_samples < 0) v.push_back("realizations.phi2_samples: must be >= 0");

  static const std::vector<std::string> known = {"fock",          "dw",           "correlators",
                                                 "autocorr",      "participation", "magnetization"};
  for (const auto& ob : cfg.observables)
    if (std::find(known.begin(), known.end(), ob) == known.end())
      v.push_back("observables: unknown channel '" + ob + "'");
  return v;
}

std::vector<std::string> validate_config_file(const std::string& path) {
  try {
    return validate_config(parse_config_file(path));
  } catch (const ConfigError& e) {
    return {e.what()};
  }
}

std::string config_to_json(const RunConfig& cfg) {
  json j;
  j["experiment"] = to_string(cfg.kind);
  if (cfg.kind == ExperimentKind::u1) {
    j["u1"] = {{"L", cfg.u1.L}, {"omega", cfg.u1.omega}, {"theta_h", cfg.u1.theta_h},
               {"eps", cfg.u1.eps}};
  } else {
    j["model"] = {{"L", cfg.model.L},
                  {"J", cfg.model.J},
                  {"phi1", cfg.model.phi1},
                  {"phi2", cfg.model.phi2},
                  {"lambda1", cfg.model.lambda1},
                  {"lambda2", cfg.model.lambda2},
                  {"boundary", cfg.model.boundary == Boundary::periodic ? "periodic" : "open"}};
  }
  j["engine"] = {{"type", cfg.engine.type == EngineType::dense ? "dense" : "mps"},
                 {"chi_max", cfg.engine.chi_max},
                 {"shots", cfg.engine.shots},
                 {"sample_stride", cfg.engine.sample_stride},
                 {"dense_evolve_limit", cfg.engine.dense_evolve_limit},
                 {"dense_eigen_limit", cfg.engine.dense_eigen_limit},
                 {"u1_dense_limit", cfg.engine.u1_dense_limit}};
  j["n_periods"] = cfg.n_periods;
  j["initial_state"] = {{"kind", to_string(cfg.initial.kind)},
                        {"shifts", cfg.initial.shifts},
                        {"seeds", cfg.initial.seeds}};
  j["realizations"] = {{"phi2_samples", cfg.realizations.phi2_samples},
                       {"base_seed", cfg.realizations.base_seed},
                       {"sample_phi1", cfg.realizations.sample_phi1}};
  j["observables"] = cfg.observables;
  j["output_dir"] = cfg.output_dir;
  if (cfg.kind == ExperimentKind::sweep)
    j["sweep"] = {{"lambda1_values", cfg.sweep.lambda1_values},
                  {"fourier_window_start", cfg.sweep.fourier_window_start},
                  {"fourier_window_end", cfg.sweep.fourier_window_end},
                  {"avg_window_start", cfg.sweep.avg_window_start},
                  {"avg_window_end", cfg.sweep.avg_window_end}};
  if (cfg.kind == ExperimentKind::noise)
    j["noise"] = {{"t1_us", cfg.noise.params.t1_us},
                  {"t2_us", cfg.noise.params.t2_us},
                  {"e_sq", cfg.noise.params.e_sq},
                  {"e_tq", cfg.noise.params.e_tq},
                  {"readout_eps", cfg.noise.params.readout_eps},
                  {"trajectories", cfg.noise.trajectories},
                  {"shots_per_trajectory", cfg.noise.shots_per_trajectory},
                  {"apply_readout", cfg.noise.apply_readout}};
  if (cfg.kind == ExperimentKind::network)
    j["network"] = {{"drop_pi_pulse", cfg.network.drop_pi_pulse},
                    {"threshold", cfg.network.threshold}};
  j["participation_partition"] =
      cfg.participation_partition == SectorPartition::by_w ? "w" : "nup";
  return j.dump(2);
}

}  // namespace fockflow
