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

#include "fockflow/observables.hpp"

#include <cmath>

namespace fockflow {

void TimeSeries::append_period(int n) {
  if (!periods.empty() && n <= periods.back())
    throw std::invalid_argument("TimeSeries: periods must be strictly increasing");
  periods.push_back(n);
}

void TimeSeries::push_scalar(const std::string& name, double v) { scalars[name].push_back(v); }

void TimeSeries::push_vector(const std::string& name, Eigen::VectorXd v) {
  vectors[name].push_back(std::move(v));
}

const std::vector<double>& TimeSeries::scalar(const std::string& name) const {
  auto it = scalars.find(name);
  if (it == scalars.end()) throw std::invalid_argument("TimeSeries: no scalar channel " + name);
  return it->second;
}

const std::vector<Eigen::VectorXd>& TimeSeries::vector(const std::string& name) const {
  auto it = vectors.find(name);
  if (it == vectors.end()) throw std::invalid_argument("TimeSeries: no vector channel " + name);
  return it->second;
}

void TimeSeries::check_consistent() const {
  for (const auto& [name, v] : scalars)
    if (v.size() != periods.size())
      throw std::runtime_error("TimeSeries: channel length mismatch in " + name);
  for (const auto& [name, v] : vectors)
    if (v.size() != periods.size())
      throw std::runtime_error("TimeSeries: channel length mismatch in " + name);
}

double Distribution::mean() const {
  double m = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) m += static_cast<double>(i) * p[i];
  return m;
}

double Distribution::stddev() const {
  const double m = mean();
  double v = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) v += (i - m) * (i - m) * p[i];
  return std::sqrt(std::max(0.0, v));
}

void Distribution::check_normalized(double tol) const {
  if (p.minCoeff() < -tol) throw std::runtime_error("Distribution: negative probability");
  if (std::abs(p.sum() - 1.0) > tol) throw std::runtime_error("Distribution: not normalized");
}

FockStatistics fock_statistics(const StateVector& state, const FockState& s0) {
  const int L = state.n_qubits;
  if (s0.size() != L) throw std::invalid_argument("fock_statistics: s0 length mismatch");
  const std::uint64_t i0 = s0.to_index();
  FockStatistics out;
  out.pi.p = Eigen::VectorXd::Zero(L + 1);
  const Eigen::Index dim = state.amps.size();
  for (Eigen::Index i = 0; i < dim; ++i)
    out.pi.p[popcount64(static_cast<std::uint64_t>(i) ^ i0)] += std::norm(state.amps[i]);
  out.x_mean = out.pi.mean();
  out.x_width = out.pi.stddev();
  return out;
}

FockStatistics fock_statistics(const SampleSet& samples, const FockState& s0) {
  samples.validate();
  const int L = samples.n_qubits();
  if (s0.size() != L) throw std::invalid_argument("fock_statistics: s0 length mismatch");
  FockStatistics out;
  out.pi.p = Eigen::VectorXd::Zero(L + 1);
  for (const auto& s : samples.samples) out.pi.p[hamming_distance(s, s0)] += 1.0;
  out.pi.p /= samples.shots();
  out.x_mean = out.pi.mean();
  out.x_width = out.pi.stddev();
  return out;
}

DwStatistics dw_statistics(const StateVector& state, Boundary boundary) {
  const int L = state.n_qubits;
  DwStatistics out;
  out.d.p = Eigen::VectorXd::Zero(L + 1);
  const std::vector<int> w = domain_wall_table(L, boundary);
  const Eigen::Index dim = state.amps.size();
  for (Eigen::Index i = 0; i < dim; ++i) out.d.p[w[i]] += std::norm(state.amps[i]);
  out.w_mean = out.d.mean();
  return out;
}

DwStatistics dw_statistics(const SampleSet& samples, Boundary boundary) {
  samples.validate();
  const int L = samples.n_qubits();
  DwStatistics out;
  out.d.p = Eigen::VectorXd::Zero(L + 1);
  for (const auto& s : samples.samples) out.d.p[domain_wall_count(s, boundary)] += 1.0;
  out.d.p /= samples.shots();
  out.w_mean = out.d.mean();
  return out;
}

namespace {

CorrelatorData finish_correlators(Eigen::MatrixXd c) {
  const int L = static_cast<int>(c.rows());
  CorrelatorData out;
  for (int j = 0; j < L; ++j) c(j, j) = 1.0;
  out.c = std::move(c);
  out.a = Eigen::VectorXd::Zero(L);
  for (int j = 0; j < L; ++j) out.a[j] = (out.c.row(j).cwiseAbs().sum() - 1.0) / (L - 1);
  double ea = 0.0;
  for (int j = 0; j < L; ++j)
    for (int k = 0; k < L; ++k)
      if (j != k) ea += out.c(j, k) * out.c(j, k);
  out.chi_ea = ea / (L - 1);
  return out;
}

}  // namespace

CorrelatorData correlators(const StateVector& state) {
  const int L = state.n_qubits;
  const Eigen::Index dim = state.amps.size();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(L, L);
  // chunked so the +-1 design matrix stays cache-sized at large L
  const Eigen::Index chunk = 4096;
  Eigen::MatrixXd z(chunk, L);
  Eigen::VectorXd p(chunk);
  for (Eigen::Index start = 0; start < dim; start += chunk) {
    const Eigen::Index len = std::min(chunk, dim - start);
    for (Eigen::Index r = 0; r < len; ++r) {
      const Eigen::Index i = start + r;
      p[r] = std::norm(state.amps[i]);
      for (int j = 0; j < L; ++j) z(r, j) = ((i >> j) & 1) ? 1.0 : -1.0;
    }
    c.noalias() += z.topRows(len).transpose() * (p.head(len).asDiagonal() * z.topRows(len));
  }
  return finish_correlators(std::move(c));
}

CorrelatorData correlators(const SampleSet& samples) {
  samples.validate();
  const int L = samples.n_qubits();
  Eigen::MatrixXd z(samples.shots(), L);
  for (int r = 0; r < samples.shots(); ++r)
    for (int j = 0; j < L; ++j) z(r, j) = samples.samples[r].bits[j] ? 1.0 : -1.0;
  Eigen::MatrixXd c = (z.transpose() * z) / samples.shots();
  return finish_correlators(std::move(c));
}

double autocorrelator(const Eigen::VectorXd& sz, const FockState& s0) {
  if (sz.size() != s0.size()) throw std::invalid_argument("autocorrelator: length mismatch");
  double k = 0.0;
  for (int j = 0; j < s0.size(); ++j) k += (s0.bits[j] ? 1.0 : -1.0) * sz[j];
  return k / s0.size();
}

Eigen::VectorXd participation_entropy(const StateVector& state, SectorPartition partition,
                                      Boundary boundary) {
  const int L = state.n_qubits;
  const Eigen::Index dim = state.amps.size();
  Eigen::VectorXd s = Eigen::VectorXd::Zero(L + 1);
  std::vector<int> sector;
  if (partition == SectorPartition::by_w) {
    sector = domain_wall_table(L, boundary);
  } else {
    sector.resize(dim);
    for (Eigen::Index i = 0; i < dim; ++i) sector[i] = popcount64(static_cast<std::uint64_t>(i));
  }
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double p = std::norm(state.amps[i]);
    if (p > 0.0) s[sector[i]] -= p * std::log(p);
  }
  return s;
}

double fourier_peak(const std::vector<double>& series, int n1, int n2) {
  if (n1 < 0 || n2 >= static_cast<int>(series.size()) || n2 < n1)
    throw std::invalid_argument("fourier_peak: window outside series");
  const int n = n2 - n1 + 1;
  if (n < 4) throw std::invalid_argument("fourier_peak: window too short");

  // Least-squares fit of c0 + a cos(nu i) + b sin(nu i) per grid frequency;
  // the peak frequency is the one explaining the series best (smallest
  // residual), and its coefficient magnitude is the amplitude. The explicit
  // constant column removes DC regardless of window parity, and a
  // grid-aligned cosine is recovered exactly even when the window holds a
  // fractional number of its periods.
  auto fit_at = [&](double nu) -> std::pair<double, double> {  // (residual, amplitude)
    double sc = 0, ss = 0, scc = 0, sss = 0, scs = 0, sy = 0, syc = 0, sys = 0;
    for (int i = 0; i < n; ++i) {
      const double c = std::cos(nu * i), s = std::sin(nu * i);
      const double y = series[n1 + i];
      sc += c;
      ss += s;
      scc += c * c;
      sss += s * s;
      scs += c * s;
      sy += y;
      syc += y * c;
      sys += y * s;
    }
    double c0, a, b;
    if (sss < 1e-9) {
      // sine column vanishes at nu = pi (and nu = 0): fit (c0, a) only
      Eigen::Matrix2d m;
      m << n, sc, sc, scc;
      const Eigen::Vector2d sol = m.fullPivLu().solve(Eigen::Vector2d(sy, syc));
      c0 = sol[0];
      a = sol[1];
      b = 0.0;
    } else {
      Eigen::Matrix3d m;
      m << n, sc, ss, sc, scc, scs, ss, scs, sss;
      const Eigen::Vector3d sol = m.fullPivLu().solve(Eigen::Vector3d(sy, syc, sys));
      c0 = sol[0];
      a = sol[1];
      b = sol[2];
    }
    double residual = 0.0;
    for (int i = 0; i < n; ++i) {
      const double r = series[n1 + i] - (c0 + a * std::cos(nu * i) + b * std::sin(nu * i));
      residual += r * r;
    }
    return {residual, std::hypot(a, b)};
  };

  bool have_best = false;
  double best_residual = 0.0;
  double best_amplitude = 0.0;
  auto consider = [&](double nu) {
    const auto [residual, amplitude] = fit_at(nu);
    if (!have_best || residual < best_residual - 1e-12 * (1.0 + best_residual)) {
      have_best = true;
      best_residual = residual;
      best_amplitude = amplitude;
    }
  };
  for (int k = 1; k <= (n - 1) / 2; ++k) consider(2.0 * kPi * k / n);
  consider(kPi);
  return best_amplitude;
}

std::optional<int> dtc_lifetime(const std::vector<double>& k_series, double threshold) {
  if (k_series.empty()) throw std::invalid_argument("dtc_lifetime: empty series");
  for (std::size_t n = 0; n < k_series.size(); ++n)
    if (std::abs(k_series[n]) < threshold) return static_cast<int>(n);
  return std::nullopt;
}

}  // namespace fockflow
