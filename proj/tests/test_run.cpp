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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "fockflow/run.hpp"

using namespace fockflow;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// tiny CSV reader: header -> column vectors
std::map<std::string, std::vector<double>> read_csv(const fs::path& p) {
  std::ifstream f(p);
  REQUIRE(f.good());
  std::string line;
  REQUIRE(std::getline(f, line));
  std::vector<std::string> names;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) names.push_back(cell);
  }
  std::map<std::string, std::vector<double>> cols;
  while (std::getline(f, line)) {
    std::stringstream ss(line);
    std::string cell;
    for (std::size_t i = 0; i < names.size(); ++i) {
      REQUIRE(std::getline(ss, cell, ','));
      cols[names[i]].push_back(std::stod(cell));
    }
  }
  return cols;
}

fs::path temp_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("fockflow_test_" + tag);
  fs::remove_all(dir);
  return dir;
}

std::string evolve_config(const fs::path& out, int n_realizations) {
  std::stringstream ss;
  ss << R"({
    "experiment": "evolve",
    "model": {"L": 8, "J": 1.0, "phi1": -1.5701, "phi2": 0.9708, "lambda1": 0.0, "lambda2": 0.0},
    "engine": {"type": "dense"},
    "n_periods": 4,
    "initial_state": {"kind": "afm", "shifts": [0]},
    "realizations": {"phi2_samples": )"
     << n_realizations << R"(, "base_seed": 11},
    "observables": ["fock", "dw", "autocorr"],
    "output_dir": ")"
     << out.string() << R"("
  })";
  return ss.str();
}

}  // namespace

TEST_CASE("unperturbed evolve run writes the alternating wave packet") {
  const fs::path dir = temp_dir("evolve");
  const RunConfig cfg = parse_config_text(evolve_config(dir, 0));
  CHECK(validate_config(cfg).empty());
  const RunResult res = run(cfg);
  CHECK(res.files_written.size() >= 3);

  const auto fockcsv = read_csv(dir / "fock_stats.csv");
  const auto& pi0 = fockcsv.at("pi000_mean");
  const auto& piL = fockcsv.at("pi008_mean");
  const auto autocsv = read_csv(dir / "autocorr.csv");
  const auto& k = autocsv.at("k_mean");
  for (int n = 0; n <= 4; ++n) {
    CHECK(pi0[n] == doctest::Approx(n % 2 == 0 ? 1.0 : 0.0).epsilon(1e-10));
    CHECK(piL[n] == doctest::Approx(n % 2 == 0 ? 0.0 : 1.0).scale(1.0).epsilon(1e-10));
    CHECK(k[n] == doctest::Approx(n % 2 == 0 ? 1.0 : -1.0).epsilon(1e-10));
  }
  fs::remove_all(dir);
}

TEST_CASE("reruns and manifest replays are byte-identical") {
  const fs::path dir1 = temp_dir("det1");
  const fs::path dir2 = temp_dir("det2");
  RunConfig cfg = parse_config_text(evolve_config(dir1, 3));
  cfg.model.lambda1 = 0.2;
  cfg.model.lambda2 = 0.1;
  run(cfg);
  cfg.output_dir = dir2.string();
  run(cfg);
  for (const char* name : {"fock_stats.csv", "dw_stats.csv", "autocorr.csv"})
    CHECK(slurp(dir1 / name) == slurp(dir2 / name));

  // replay from the manifest
  const fs::path dir3 = temp_dir("det3");
  RunConfig replay = parse_config_file((dir1 / "manifest.json").string());
  replay.output_dir = dir3.string();
  run(replay);
  for (const char* name : {"fock_stats.csv", "dw_stats.csv", "autocorr.csv"})
    CHECK(slurp(dir1 / name) == slurp(dir3 / name));
  fs::remove_all(dir1);
  fs::remove_all(dir2);
  fs::remove_all(dir3);
}

TEST_CASE("mps engine runs are deterministic too") {
  const fs::path dir1 = temp_dir("mpsdet1");
  const fs::path dir2 = temp_dir("mpsdet2");
  auto cfg_for = [](const fs::path& out) {
    std::stringstream ss;
    ss << R"({
      "experiment": "evolve",
      "model": {"L": 10, "phi1": -1.5701, "lambda1": 0.3},
      "engine": {"type": "mps", "chi_max": 16, "shots": 300},
      "n_periods": 4,
      "initial_state": {"kind": "1fm"},
      "realizations": {"phi2_samples": 2, "base_seed": 99},
      "observables": ["fock", "dw", "autocorr"],
      "output_dir": ")" << out.string() << R"("})";
    return parse_config_text(ss.str());
  };
  run(cfg_for(dir1));
  run(cfg_for(dir2));
  for (const char* name : {"fock_stats.csv", "dw_stats.csv", "autocorr.csv",
                           "mps_diagnostics.csv"})
    CHECK(slurp(dir1 / name) == slurp(dir2 / name));
  fs::remove_all(dir1);
  fs::remove_all(dir2);
}

TEST_CASE("mean and stderr columns recompute from the realization columns") {
  const fs::path dir = temp_dir("stats");
  RunConfig cfg = parse_config_text(evolve_config(dir, 4));
  cfg.model.lambda1 = 0.3;
  cfg.model.lambda2 = 0.15;
  run(cfg);
  const auto cols = read_csv(dir / "autocorr.csv");
  const int reals = 4;
  for (std::size_t row = 0; row < cols.at("k_mean").size(); ++row) {
    double mean = 0.0;
    for (int r = 0; r < reals; ++r) {
      char name[16];
      std::snprintf(name, sizeof name, "k_r%03d", r);
      mean += cols.at(name)[row];
    }
    mean /= reals;
    CHECK(std::abs(cols.at("k_mean")[row] - mean) <= 1e-12 * std::max(1.0, std::abs(mean)));
    double var = 0.0;
    for (int r = 0; r < reals; ++r) {
      char name[16];
      std::snprintf(name, sizeof name, "k_r%03d", r);
      var += (cols.at(name)[row] - mean) * (cols.at(name)[row] - mean);
    }
    const double stderr_ = std::sqrt(var / (reals - 1)) / std::sqrt(double(reals));
    CHECK(std::abs(cols.at("k_stderr")[row] - stderr_) <= 1e-12);
  }
  fs::remove_all(dir);
}

TEST_CASE("validate flags limit violations without executing") {
  RunConfig cfg = parse_config_text(evolve_config("unused_dir", 1));
  cfg.model.L = 30;
  auto v = validate_config(cfg);
  REQUIRE(!v.empty());
  CHECK(v.front().find("dense limit exceeded") != std::string::npos);

  cfg = parse_config_text(evolve_config("unused_dir", 1));
  cfg.engine.type = EngineType::mps;
  cfg.engine.shots = 0;
  v = validate_config(cfg);
  REQUIRE(!v.empty());
  CHECK(v.front().find("shots") != std::string::npos);

  // a well-formed sweep validates clean
  const std::string sweep = R"({
    "experiment": "sweep",
    "model": {"L": 10, "phi1": -1.5701, "phi2": 0.9708, "lambda1": 0.1},
    "n_periods": 30,
    "initial_state": {"kind": "1fm"},
    "realizations": {"phi2_samples": 10, "base_seed": 5},
    "sweep": {"lambda1_values": [0.1, 0.4, 1.2]},
    "output_dir": "out_sweep"
  })";
  CHECK(validate_config(parse_config_text(sweep)).empty());
}

TEST_CASE("parse failures carry line and column") {
  try {
    parse_config_text("{\n  \"experiment\": oops\n}", "bad.json");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("bad.json:2:") != std::string::npos);
    CHECK(msg.find("parse failure") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config_text(R"({"experiment": "warp"})"), ConfigError);
  // bad type reports the dotted key path
  try {
    parse_config_text(R"({"experiment": "evolve", "model": {"L": "ten"}})");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("model.L") != std::string::npos);
  }
}

TEST_CASE("sweep run finds the L=10 width maximum inside the critical band") {
  const fs::path dir = temp_dir("sweep");
  std::stringstream ss;
  ss << R"({
    "experiment": "sweep",
    "model": {"L": 10, "phi1": -1.5701, "phi2": 0.9708, "lambda1": 0.1},
    "n_periods": 30,
    "initial_state": {"kind": "1fm"},
    "realizations": {"phi2_samples": 10, "base_seed": 5},
    "sweep": {"lambda1_values": [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.8, 1.0, 1.2]},
    "output_dir": ")"
     << dir.string() << R"("
  })";
  const RunConfig cfg = parse_config_text(ss.str());
  run(cfg);
  const auto cols = read_csv(dir / "sweep.csv");
  const auto& lam = cols.at("lambda1");
  const auto& dx = cols.at("dxnorm_avg_mean");
  std::size_t best = 0;
  for (std::size_t i = 0; i < dx.size(); ++i)
    if (dx[i] > dx[best]) best = i;
  CHECK(lam[best] >= 0.3);
  CHECK(lam[best] <= 0.5);
  fs::remove_all(dir);
}

TEST_CASE("eigen, network, analytic and u1 runs produce their files") {
  const fs::path dir = temp_dir("misc");
  const std::string eigen_cfg = R"({
    "experiment": "eigen",
    "model": {"L": 4, "phi1": 0.3, "phi2": 0.9, "lambda1": 0.1},
    "output_dir": ")" + (dir / "eig").string() + R"("
  })";
  run(parse_config_text(eigen_cfg));
  CHECK(read_csv(dir / "eig" / "eigs.csv").at("quasienergy").size() == 16);

  const std::string net_cfg = R"({
    "experiment": "network",
    "model": {"L": 4, "phi1": 0.3, "phi2": 0.9, "lambda1": 0.0},
    "network": {"drop_pi_pulse": true, "threshold": 0.04},
    "output_dir": ")" + (dir / "net").string() + R"("
  })";
  run(parse_config_text(net_cfg));
  // diagonal unitary: 16 self-edges
  std::ifstream f(dir / "net" / "edges.csv");
  std::string line;
  int rows = 0;
  while (std::getline(f, line)) ++rows;
  CHECK(rows == 17);

  const std::string ana_cfg = R"({
    "experiment": "analytic",
    "model": {"L": 18, "phi1": -1.5701, "phi2": 0.9708, "lambda1": 0.1},
    "output_dir": ")" + (dir / "ana").string() + R"("
  })";
  run(parse_config_text(ana_cfg));
  CHECK(fs::exists(dir / "ana" / "analytic.csv"));
  CHECK(fs::exists(dir / "ana" / "thermal_reference.csv"));

  const std::string u1_cfg = R"({
    "experiment": "u1",
    "u1": {"L": 8, "omega": 8.0, "theta_h": 2.827433388230814, "eps": 0.18},
    "n_periods": 5,
    "initial_state": {"kind": "afm"},
    "realizations": {"phi2_samples": 0},
    "observables": ["autocorr", "magnetization", "participation"],
    "participation_partition": "nup",
    "output_dir": ")" + (dir / "u1").string() + R"("
  })";
  run(parse_config_text(u1_cfg));
  CHECK(fs::exists(dir / "u1" / "autocorr.csv"));
  CHECK(fs::exists(dir / "u1" / "participation.csv"));
  fs::remove_all(dir);
}
