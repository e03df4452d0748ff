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

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "fockflow/analytics.hpp"
#include "fockflow/mps.hpp"
#include "fockflow/run.hpp"

namespace fockflow {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

int worker_count() {
  if (const char* env = std::getenv("FOCKFLOW_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(i) for i in [0, n) on the worker pool; results must be written
/// to per-index slots so scheduling cannot change the output.
void parallel_for(int n, const std::function<void(int)>& fn) {
  const int workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

struct Realization {
  std::string label;
  double phi1 = 0.0;
  double phi2 = 0.0;
  int shift = 0;
  std::uint64_t pattern_seed = 0;
  std::uint64_t seed = 0;  // sampling / trajectory stream
};

std::vector<Realization> enumerate_realizations(const RunConfig& cfg) {
  const auto& rc = cfg.realizations;
  std::vector<double> phi1s, phi2s;
  const int n_phi = std::max(1, rc.phi2_samples);
  for (int r = 0; r < n_phi; ++r) {
    if (rc.phi2_samples == 0) {
      phi2s.push_back(cfg.model.phi2);
      phi1s.push_back(cfg.model.phi1);
    } else {
      RngStream s2 = RngStream::derive(rc.base_seed, 1000 + r);
      phi2s.push_back(s2.next_uniform(2.0 * kPi));
      if (rc.sample_phi1) {
        RngStream s1 = RngStream::derive(rc.base_seed, 2000 + r);
        phi1s.push_back(s1.next_uniform(2.0 * kPi));
      } else {
        phi1s.push_back(cfg.model.phi1);
      }
    }
  }

  std::vector<Realization> out;
  int idx = 0;
  for (int r = 0; r < n_phi; ++r)
    for (std::size_t si = 0; si < cfg.initial.shifts.size(); ++si)
      for (std::size_t pi = 0; pi < cfg.initial.seeds.size(); ++pi) {
        Realization rz;
        char lbl[48];
        std::snprintf(lbl, sizeof lbl, "p%02d_s%02d_k%02d", r, static_cast<int>(si),
                      static_cast<int>(pi));
        rz.label = lbl;
        rz.phi1 = phi1s[r];
        rz.phi2 = phi2s[r];
        rz.shift = cfg.initial.shifts[si];
        rz.pattern_seed = cfg.initial.seeds[pi];
        rz.seed = RngStream::derive(rc.base_seed, 7777 + idx).next_u64();
        ++idx;
        out.push_back(std::move(rz));
      }
  return out;
}

bool wants(const RunConfig& cfg, const std::string& group) {
  return std::find(cfg.observables.begin(), cfg.observables.end(), group) !=
         cfg.observables.end();
}

void record_dense_state(const RunConfig& cfg, const FockState& s0, Boundary boundary, int n,
                        const StateVector& psi, TimeSeries& ts) {
  ts.append_period(n);
  Eigen::VectorXd sz;
  const bool need_sz = wants(cfg, "autocorr") || wants(cfg, "magnetization");
  if (need_sz) sz = local_magnetization(psi);
  if (wants(cfg, "fock")) {
    const FockStatistics fsx = fock_statistics(psi, s0);
    ts.push_vector("pi", fsx.pi.p);
    ts.push_scalar("x", fsx.x_mean);
    ts.push_scalar("dx", fsx.x_width);
  }
  if (wants(cfg, "dw")) {
    const DwStatistics dws = dw_statistics(psi, boundary);
    ts.push_vector("dw", dws.d.p);
    ts.push_scalar("w", dws.w_mean);
  }
  if (wants(cfg, "correlators")) {
    const CorrelatorData cd = correlators(psi);
    ts.push_vector("a", cd.a);
    ts.push_scalar("chi_ea", cd.chi_ea);
  }
  if (wants(cfg, "autocorr")) ts.push_scalar("k", autocorrelator(sz, s0));
  if (wants(cfg, "magnetization")) ts.push_vector("sz", sz);
  if (wants(cfg, "participation"))
    ts.push_vector("pe", participation_entropy(psi, cfg.participation_partition, boundary));
}

TimeSeries run_dense_realization(const RunConfig& cfg, const Realization& rz) {
  ModelParams p = cfg.model;
  p.phi1 = rz.phi1;
  p.phi2 = rz.phi2;
  const FockState s0 = make_initial_state(cfg.initial.kind, p.L, rz.shift, rz.pattern_seed);
  const GateSequence circuit = build_floquet_circuit(p);
  TimeSeries ts;
  ts.label = rz.label;
  ts.seed = rz.seed;
  evolve_statevector(
      s0, circuit, cfg.n_periods,
      [&](int n, const StateVector& psi) { record_dense_state(cfg, s0, p.boundary, n, psi, ts); },
      cfg.engine.dense_evolve_limit);
  ts.check_consistent();
  return ts;
}

TimeSeries run_mps_realization(const RunConfig& cfg, const Realization& rz) {
  ModelParams p = cfg.model;
  p.phi1 = rz.phi1;
  p.phi2 = rz.phi2;
  const FockState s0 = make_initial_state(cfg.initial.kind, p.L, rz.shift, rz.pattern_seed);
  const GateSequence circuit = build_floquet_circuit(p);
  TimeSeries ts;
  ts.label = rz.label;
  ts.seed = rz.seed;
  MpsEvolveOptions opts;
  opts.chi_max = cfg.engine.chi_max;
  const int stride = std::max(1, cfg.engine.sample_stride);
  evolve_mps(s0, circuit, cfg.n_periods, opts, [&](int n, const MpsState& m) {
    if (n % stride != 0 && n != cfg.n_periods) return;
    ts.append_period(n);
    Eigen::VectorXd sz;
    if (wants(cfg, "autocorr") || wants(cfg, "magnetization")) sz = mps_local_magnetization(m);
    SampleSet samples;
    const bool need_samples = wants(cfg, "fock") || wants(cfg, "dw") || wants(cfg, "correlators");
    if (need_samples)
      samples = sample_bitstrings(m, cfg.engine.shots,
                                  RngStream::derive(rz.seed, 100 + n).next_u64());
    if (wants(cfg, "fock")) {
      const FockStatistics fsx = fock_statistics(samples, s0);
      ts.push_vector("pi", fsx.pi.p);
      ts.push_scalar("x", fsx.x_mean);
      ts.push_scalar("dx", fsx.x_width);
    }
    if (wants(cfg, "dw")) {
      const DwStatistics dws = dw_statistics(samples, p.boundary);
      ts.push_vector("dw", dws.d.p);
      ts.push_scalar("w", dws.w_mean);
    }
    if (wants(cfg, "correlators")) {
      const CorrelatorData cd = correlators(samples);
      ts.push_vector("a", cd.a);
      ts.push_scalar("chi_ea", cd.chi_ea);
    }
    if (wants(cfg, "autocorr")) ts.push_scalar("k", autocorrelator(sz, s0));
    if (wants(cfg, "magnetization")) ts.push_vector("sz", sz);
    ts.push_scalar("chi", m.max_bond_dim());
    ts.push_scalar("discarded", m.discarded_total);
  });
  ts.check_consistent();
  return ts;
}

TimeSeries run_noise_realization(const RunConfig& cfg, const Realization& rz) {
  ModelParams p = cfg.model;
  p.phi1 = rz.phi1;
  p.phi2 = rz.phi2;
  const FockState s0 = make_initial_state(cfg.initial.kind, p.L, rz.shift, rz.pattern_seed);
  const GateSequence circuit = build_floquet_circuit(p);
  const int n_traj = std::max(1, cfg.noise.trajectories);
  const bool measure = cfg.noise.apply_readout && cfg.noise.shots_per_trajectory > 0;

  // trajectory-averaged channels; each period slot accumulates over
  // trajectories and is divided out at the end
  std::vector<double> x(cfg.n_periods + 1, 0.0), dx(cfg.n_periods + 1, 0.0),
      w(cfg.n_periods + 1, 0.0), k(cfg.n_periods + 1, 0.0), xm(cfg.n_periods + 1, 0.0),
      dxm(cfg.n_periods + 1, 0.0);

  for (int t = 0; t < n_traj; ++t) {
    const std::uint64_t traj_seed = RngStream::derive(rz.seed, 50000 + t).next_u64();
    noisy_trajectory(
        s0, circuit, cfg.n_periods, cfg.noise.params, traj_seed,
        [&](int n, const StateVector& psi) {
          const FockStatistics fsx = fock_statistics(psi, s0);
          x[n] += fsx.x_mean;
          dx[n] += fsx.x_width;
          w[n] += dw_statistics(psi, p.boundary).w_mean;
          k[n] += autocorrelator(local_magnetization(psi), s0);
          if (measure) {
            SampleSet raw = [&] {
              SampleSet ss;
              ss.samples = sample_statevector(psi, cfg.noise.shots_per_trajectory,
                                              RngStream::derive(traj_seed, 300 + n).next_u64());
              ss.seed = traj_seed;
              return ss;
            }();
            const SampleSet meas = apply_readout_errors(
                raw, cfg.noise.params.readout_eps, RngStream::derive(traj_seed, 400 + n).next_u64());
            const FockStatistics fm = fock_statistics(meas, s0);
            xm[n] += fm.x_mean;
            dxm[n] += fm.x_width;
          }
        },
        cfg.engine.dense_evolve_limit);
  }

  TimeSeries ts;
  ts.label = rz.label;
  ts.seed = rz.seed;
  for (int n = 0; n <= cfg.n_periods; ++n) {
    ts.append_period(n);
    ts.push_scalar("x", x[n] / n_traj);
    ts.push_scalar("dx", dx[n] / n_traj);
    ts.push_scalar("w", w[n] / n_traj);
    ts.push_scalar("k", k[n] / n_traj);
    if (measure) {
      ts.push_scalar("x_meas", xm[n] / n_traj);
      ts.push_scalar("dx_meas", dxm[n] / n_traj);
    }
  }
  ts.check_consistent();
  return ts;
}

TimeSeries run_u1_realization(const RunConfig& cfg, const Realization& rz) {
  const FockState s0 =
      make_initial_state(cfg.initial.kind, cfg.u1.L, rz.shift, rz.pattern_seed);
  TimeSeries ts;
  ts.label = rz.label;
  ts.seed = rz.seed;
  evolve_u1(
      s0, cfg.u1, cfg.n_periods,
      [&](int n, const StateVector& psi) {
        record_dense_state(cfg, s0, Boundary::periodic, n, psi, ts);
      },
      cfg.engine.u1_dense_limit);
  ts.check_consistent();
  return ts;
}

// ---- CSV output -----------------------------------------------------------

class CsvFile {
 public:
  explicit CsvFile(const fs::path& path) : f_(path, std::ios::binary) {
    if (!f_) throw std::runtime_error("cannot open for writing: " + path.string());
  }
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) f_ << ',';
      f_ << cells[i];
    }
    f_ << '\n';  // LF only
  }

 private:
  std::ofstream f_;
};

struct ChannelTable {
  // column name -> per-row values; rows are shared across columns
  std::vector<std::string> columns;
  std::vector<std::vector<double>> values;  // [column][row]
};

void append_stats_columns(ChannelTable& table, const std::string& name,
                          const std::vector<std::vector<double>>& per_real, bool keep_reals) {
  const std::size_t rows = per_real.front().size();
  std::vector<double> mean(rows, 0.0), stderr_(rows, 0.0);
  for (const auto& r : per_real)
    for (std::size_t i = 0; i < rows; ++i) mean[i] += r[i];
  for (auto& m : mean) m /= per_real.size();
  if (per_real.size() > 1) {
    for (const auto& r : per_real)
      for (std::size_t i = 0; i < rows; ++i)
        stderr_[i] += (r[i] - mean[i]) * (r[i] - mean[i]);
    for (auto& s : stderr_)
      s = std::sqrt(s / (per_real.size() - 1)) / std::sqrt(static_cast<double>(per_real.size()));
  }
  table.columns.push_back(name + "_mean");
  table.values.push_back(std::move(mean));
  if (keep_reals) {
    for (std::size_t r = 0; r < per_real.size(); ++r) {
      char suffix[16];
      std::snprintf(suffix, sizeof suffix, "_r%03d", static_cast<int>(r));
      table.columns.push_back(name + suffix);
      table.values.push_back(per_real[r]);
    }
  }
  table.columns.push_back(name + "_stderr");
  table.values.push_back(std::move(stderr_));
}

void write_table(const fs::path& path, const std::string& key_name,
                 const std::vector<std::string>& key_cells, ChannelTable table) {
  // fixed order: key column, then channel columns alphabetically
  std::vector<std::size_t> order(table.columns.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return table.columns[a] < table.columns[b]; });

  CsvFile csv(path);
  std::vector<std::string> header{key_name};
  for (auto i : order) header.push_back(table.columns[i]);
  csv.row(header);
  for (std::size_t r = 0; r < key_cells.size(); ++r) {
    std::vector<std::string> cells{key_cells[r]};
    for (auto i : order) cells.push_back(fmt(table.values[i][r]));
    csv.row(cells);
  }
}

std::string vec_col(const std::string& base, int i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%s%03d", base.c_str(), i);
  return buf;
}

/// One CSV per observable group, with scalar channels carrying
/// per-realization columns and vector channels carrying mean/stderr.
std::vector<std::string> write_series_files(const fs::path& dir,
                                            const std::vector<TimeSeries>& series) {
  const TimeSeries& first = series.front();
  std::vector<std::string> key_cells;
  for (int n : first.periods) key_cells.push_back(std::to_string(n));
  for (const auto& ts : series)
    if (ts.periods != first.periods)
      throw std::runtime_error("write_series_files: realizations disagree on periods");

  // group -> channels within the group's file
  const std::vector<std::pair<std::string, std::vector<std::string>>> groups = {
      {"fock_stats", {"pi", "x", "dx"}},
      {"dw_stats", {"dw", "w"}},
      {"correlators", {"a", "chi_ea"}},
      {"autocorr", {"k"}},
      {"magnetization", {"sz"}},
      {"participation", {"pe"}},
      {"mps_diagnostics", {"chi", "discarded"}},
      {"noise_measured", {"x_meas", "dx_meas"}},
  };

  std::vector<std::string> files;
  for (const auto& [group, channels] : groups) {
    ChannelTable table;
    for (const auto& ch : channels) {
      if (first.scalars.count(ch)) {
        std::vector<std::vector<double>> per_real;
        for (const auto& ts : series) per_real.push_back(ts.scalar(ch));
        append_stats_columns(table, ch, per_real, /*keep_reals=*/true);
      } else if (first.vectors.count(ch)) {
        const int m = static_cast<int>(first.vector(ch).front().size());
        for (int i = 0; i < m; ++i) {
          std::vector<std::vector<double>> per_real;
          for (const auto& ts : series) {
            std::vector<double> col;
            for (const auto& v : ts.vector(ch)) col.push_back(v[i]);
            per_real.push_back(std::move(col));
          }
          append_stats_columns(table, vec_col(ch, i), per_real, /*keep_reals=*/false);
        }
      }
    }
    if (table.columns.empty()) continue;
    const fs::path path = dir / (group + ".csv");
    write_table(path, "n", key_cells, std::move(table));
    files.push_back(path.string());
  }
  return files;
}

std::vector<std::string> run_series_experiment(const RunConfig& cfg, const fs::path& dir,
                                               const std::vector<Realization>& reals) {
  std::vector<TimeSeries> series(reals.size());
  parallel_for(static_cast<int>(reals.size()), [&](int i) {
    switch (cfg.kind) {
      case ExperimentKind::evolve:
        series[i] = (cfg.engine.type == EngineType::mps) ? run_mps_realization(cfg, reals[i])
                                                         : run_dense_realization(cfg, reals[i]);
        break;
      case ExperimentKind::noise: series[i] = run_noise_realization(cfg, reals[i]); break;
      case ExperimentKind::u1: series[i] = run_u1_realization(cfg, reals[i]); break;
      default: throw std::logic_error("run_series_experiment: bad kind");
    }
  });
  return write_series_files(dir, series);
}

std::vector<std::string> run_sweep(const RunConfig& cfg, const fs::path& dir,
                                   const std::vector<Realization>& reals) {
  const auto& sw = cfg.sweep;
  if (cfg.n_periods < std::max(sw.fourier_window_end, sw.avg_window_end))
    throw ConfigError("n_periods", "must cover the sweep windows");

  const int n_lambda = static_cast<int>(sw.lambda1_values.size());
  std::vector<std::vector<double>> fpeak(reals.size(),
                                         std::vector<double>(n_lambda, 0.0));
  std::vector<std::vector<double>> dxavg = fpeak;

  parallel_for(static_cast<int>(reals.size()), [&](int i) {
    for (int il = 0; il < n_lambda; ++il) {
      RunConfig local = cfg;
      local.model.lambda1 = sw.lambda1_values[il];
      local.model.lambda2 = 0.5 * local.model.lambda1;
      ModelParams p = local.model;
      p.phi1 = reals[i].phi1;
      p.phi2 = reals[i].phi2;
      const FockState s0 =
          make_initial_state(cfg.initial.kind, p.L, reals[i].shift, reals[i].pattern_seed);
      const GateSequence circuit = build_floquet_circuit(p);
      std::vector<double> w_series, dxn_series;
      evolve_statevector(
          s0, circuit, cfg.n_periods,
          [&](int n, const StateVector& psi) {
            w_series.push_back(dw_statistics(psi, p.boundary).w_mean);
            if (n >= sw.avg_window_start && n <= sw.avg_window_end)
              dxn_series.push_back(fock_statistics(psi, s0).x_width / std::sqrt(p.L));
          },
          cfg.engine.dense_evolve_limit);
      fpeak[i][il] = fourier_peak(w_series, sw.fourier_window_start, sw.fourier_window_end);
      double acc = 0.0;
      for (double v : dxn_series) acc += v;
      dxavg[i][il] = acc / dxn_series.size();
    }
  });

  std::vector<std::string> key_cells;
  for (double l : sw.lambda1_values) key_cells.push_back(fmt(l));
  ChannelTable table;
  append_stats_columns(table, "fpeak_w", fpeak, /*keep_reals=*/true);
  append_stats_columns(table, "dxnorm_avg", dxavg, /*keep_reals=*/true);
  const fs::path path = dir / "sweep.csv";
  write_table(path, "lambda1", key_cells, std::move(table));
  return {path.string()};
}

std::vector<std::string> run_eigen(const RunConfig& cfg, const fs::path& dir) {
  const EigData eig = floquet_eigensystem(cfg.model, cfg.engine.dense_eigen_limit);
  std::vector<std::string> key_cells;
  ChannelTable table;
  table.columns = {"quasienergy", "w_mean"};
  table.values.resize(2);
  for (Eigen::Index n = 0; n < eig.quasienergies.size(); ++n) {
    key_cells.push_back(std::to_string(n));
    table.values[0].push_back(eig.quasienergies[n]);
    table.values[1].push_back(eig.w_mean[n]);
  }
  const fs::path path = dir / "eigs.csv";
  write_table(path, "idx", key_cells, std::move(table));
  return {path.string()};
}

std::vector<std::string> run_network(const RunConfig& cfg, const fs::path& dir) {
  const auto edges =
      fock_hopping_matrix(cfg.model, cfg.network.drop_pi_pulse, cfg.network.threshold);
  const fs::path path = dir / "edges.csv";
  CsvFile csv(path);
  csv.row({"s1", "s2", "strength"});
  for (const auto& e : edges)
    csv.row({FockState::from_index(e.s1, cfg.model.L).to_string(),
             FockState::from_index(e.s2, cfg.model.L).to_string(), fmt(e.strength)});
  return {path.string()};
}

std::vector<std::string> run_analytic(const RunConfig& cfg, const fs::path& dir) {
  const fs::path path = dir / "analytic.csv";
  CsvFile csv(path);
  csv.row({"quantity", "value"});
  csv.row({"butterfly_velocity", fmt(butterfly_velocity(cfg.model))});
  csv.row({"echo_detuning", fmt(check_echo_condition(cfg.model))});
  const ThermalReference th = thermal_reference(cfg.model.L);
  csv.row({"thermal_x_width", fmt(th.x_width)});
  if (cfg.model.L >= 4) {
    const SubspaceThermalReference sub = subspace_thermal_reference(cfg.model.L);
    csv.row({"subspace_x_mean", fmt(sub.x_mean)});
    csv.row({"subspace_x_width", fmt(sub.x_width)});
  }

  const fs::path ref_path = dir / "thermal_reference.csv";
  CsvFile ref(ref_path);
  ref.row({"d", "pi_ft", "d_ft", "pi_gauss", "d_gauss"});
  for (int d = 0; d <= cfg.model.L; ++d)
    ref.row({std::to_string(d), fmt(th.pi_ft[d]), fmt(th.d_ft[d]), fmt(th.pi_gauss[d]),
             fmt(th.d_gauss[d])});
  return {path.string(), ref_path.string()};
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  const auto violations = validate_config(cfg);
  if (!violations.empty()) throw ConfigError("", violations.front());

  const auto t0 = std::chrono::steady_clock::now();
  const fs::path dir(cfg.output_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    throw std::runtime_error("cannot create output directory: " + cfg.output_dir);

  const std::vector<Realization> reals = enumerate_realizations(cfg);

  RunResult result;
  switch (cfg.kind) {
    case ExperimentKind::evolve:
    case ExperimentKind::noise:
    case ExperimentKind::u1:
      result.files_written = run_series_experiment(cfg, dir, reals);
      break;
    case ExperimentKind::sweep: result.files_written = run_sweep(cfg, dir, reals); break;
    case ExperimentKind::eigen: result.files_written = run_eigen(cfg, dir); break;
    case ExperimentKind::network: result.files_written = run_network(cfg, dir); break;
    case ExperimentKind::analytic: result.files_written = run_analytic(cfg, dir); break;
  }

  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  json manifest;
  manifest["fockflow_version"] = kVersion;
  manifest["config"] = json::parse(config_to_json(cfg));
  json rj = json::array();
  for (const auto& r : reals)
    rj.push_back({{"label", r.label},
                  {"phi1", r.phi1},
                  {"phi2", r.phi2},
                  {"shift", r.shift},
                  {"pattern_seed", r.pattern_seed},
                  {"seed", r.seed}});
  manifest["realizations"] = rj;
  manifest["files"] = result.files_written;
  manifest["wall_time_s"] = result.wall_seconds;
  const fs::path mpath = dir / "manifest.json";
  {
    std::ofstream mf(mpath, std::ios::binary);
    mf << manifest.dump(2) << '\n';
  }
  result.files_written.push_back(mpath.string());
  return result;
}

}  // namespace fockflow
