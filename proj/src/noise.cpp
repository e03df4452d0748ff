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

#include "fockflow/noise.hpp"

#include <cmath>
#include <limits>

namespace fockflow {

void NoiseParams::validate() const {
  if (t1_us <= 0 || t2_us <= 0) throw std::invalid_argument("NoiseParams: T1, T2 must be positive");
  if (t2_us > 2.0 * t1_us + 1e-12)
    throw std::invalid_argument("NoiseParams: T2 must not exceed 2*T1");
  for (double e : {e_sq, e_tq})
    if (e < 0 || e >= 1) throw std::invalid_argument("NoiseParams: Pauli errors must be in [0,1)");
  if (readout_eps < 0 || readout_eps >= 0.5)
    throw std::invalid_argument("NoiseParams: readout eps must be in [0, 0.5)");
  if (sq_gate_ns <= 0 || tq_gate_ns <= 0)
    throw std::invalid_argument("NoiseParams: gate durations must be positive");
}

double NoiseParams::t_phi_us() const {
  const double inv = 1.0 / t2_us - 0.5 / t1_us;
  if (inv <= 0) return std::numeric_limits<double>::infinity();
  return 1.0 / inv;
}

double NoiseParams::depolarizing_prob(double e, int dim) {
  const double d2 = static_cast<double>(dim) * dim;
  return e * d2 / (d2 - 1.0);
}

namespace {

void apply_pauli(Eigen::VectorXcd& amps, int which, int q) {
  switch (which) {
    case 0: apply_gate_1q(amps, pauli_x(), q); break;
    case 1: apply_gate_1q(amps, pauli_y(), q); break;
    case 2: apply_gate_1q(amps, pauli_z(), q); break;
    default: throw std::logic_error("apply_pauli: bad index");
  }
}

// Uniformly random non-identity Pauli on the gate support.
void depolarize(Eigen::VectorXcd& amps, const std::vector<int>& sites, RngStream& rng) {
  if (sites.size() == 1) {
    apply_pauli(amps, static_cast<int>(rng.next_below(3)), sites[0]);
  } else {
    const int k = static_cast<int>(rng.next_below(15)) + 1;  // 1..15, II excluded
    const int p0 = k % 4, p1 = k / 4;
    if (p0 != 0) apply_pauli(amps, p0 - 1, sites[0]);
    if (p1 != 0) apply_pauli(amps, p1 - 1, sites[1]);
  }
}

double excited_population(const Eigen::VectorXcd& amps, int q) {
  const Eigen::Index mask = Eigen::Index(1) << q;
  double p1 = 0.0;
  for (Eigen::Index i = 0; i < amps.size(); ++i)
    if (i & mask) p1 += std::norm(amps[i]);
  return p1;
}

// Amplitude damping over duration tau: two-outcome jump/no-jump unraveling.
void relax_qubit(Eigen::VectorXcd& amps, int q, double gamma, RngStream& rng) {
  if (gamma <= 0) return;
  const double p1 = excited_population(amps, q);
  const double p_jump = gamma * p1;
  const Eigen::Index mask = Eigen::Index(1) << q;
  if (p1 > 0 && rng.next_double() < p_jump) {
    // jump: |1> -> |0> on qubit q, renormalized by sqrt(p1)
    const double inv = 1.0 / std::sqrt(p1);
    for (Eigen::Index base = 0; base < amps.size(); base += 2 * mask) {
      for (Eigen::Index i = base; i < base + mask; ++i) {
        amps[i] = amps[i + mask] * inv;
        amps[i + mask] = 0.0;
      }
    }
  } else {
    const double damp = std::sqrt(1.0 - gamma);
    for (Eigen::Index base = 0; base < amps.size(); base += 2 * mask) {
      for (Eigen::Index i = base; i < base + mask; ++i) amps[i + mask] *= damp;
    }
    amps /= amps.norm();
  }
}

// Pure dephasing over duration tau: sigma_z with probability
// (1 - exp(-tau/Tphi))/2.
void dephase_qubit(Eigen::VectorXcd& amps, int q, double p_z, RngStream& rng) {
  if (p_z <= 0) return;
  if (rng.next_double() < p_z) apply_gate_1q(amps, pauli_z(), q);
}

}  // namespace

StateVector noisy_trajectory(const FockState& s0, const GateSequence& circuit, int n_periods,
                             const NoiseParams& np, std::uint64_t seed, const PeriodHook& hook,
                             int dense_limit) {
  np.validate();
  if (s0.size() != circuit.n_qubits)
    throw std::invalid_argument("noisy_trajectory: state length != circuit width");
  if (circuit.n_qubits > dense_limit)
    throw std::invalid_argument("noisy_trajectory: L exceeds dense limit");

  const int L = circuit.n_qubits;
  const double t_phi = np.t_phi_us();
  RngStream rng = RngStream::derive(seed, 0x7261);

  StateVector psi = StateVector::basis_state(s0);
  if (hook) hook(0, psi);
  for (int n = 1; n <= n_periods; ++n) {
    for (const auto& layer : circuit.layers) {
      for (const auto& g : layer.gates) {
        apply_gate(psi.amps, g);
        const double e = (g.sites.size() == 1) ? np.e_sq : np.e_tq;
        const double p_dep = NoiseParams::depolarizing_prob(e, g.sites.size() == 1 ? 2 : 4);
        if (p_dep > 0 && rng.next_double() < p_dep) depolarize(psi.amps, g.sites, rng);
      }
      const double tau_us = layer.duration_ns * 1e-3;
      const double gamma = 1.0 - std::exp(-tau_us / np.t1_us);
      const double p_z =
          std::isinf(t_phi) ? 0.0 : 0.5 * (1.0 - std::exp(-tau_us / t_phi));
      for (int q = 0; q < L; ++q) {
        relax_qubit(psi.amps, q, gamma, rng);
        dephase_qubit(psi.amps, q, p_z, rng);
      }
    }
    const double nrm = psi.amps.norm();
    if (std::abs(nrm - 1.0) > 1e-6)
      throw std::runtime_error("noisy_trajectory: norm drift after jump resolution");
    psi.amps /= nrm;
    if (hook) hook(n, psi);
  }
  return psi;
}

SampleSet apply_readout_errors(const SampleSet& samples, double eps, std::uint64_t seed) {
  if (eps < 0 || eps >= 0.5)
    throw std::invalid_argument("apply_readout_errors: eps must be in [0, 0.5)");
  samples.validate();
  SampleSet out;
  out.seed = seed;
  out.samples.reserve(samples.shots());
  for (int k = 0; k < samples.shots(); ++k) {
    RngStream rng = RngStream::derive(seed, static_cast<std::uint64_t>(k) ^ 0xF11Full);
    FockState s = samples.samples[k];
    for (auto& b : s.bits)
      if (rng.next_double() < eps) b ^= 1;
    out.samples.push_back(std::move(s));
  }
  return out;
}

ReadoutBiasBounds readout_bias_bounds(int L, double eps) {
  if (eps < 0 || eps >= 0.5)
    throw std::invalid_argument("readout_bias_bounds: eps must be in [0, 0.5)");
  return {L * eps, std::sqrt(eps * (1.0 - eps))};
}

}  // namespace fockflow
