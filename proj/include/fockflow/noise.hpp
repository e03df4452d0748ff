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

#ifndef FOCKFLOW_NOISE_HPP
#define FOCKFLOW_NOISE_HPP

#include "fockflow/observables.hpp"
#include "fockflow/sampleset.hpp"
#include "fockflow/statevector.hpp"

namespace fockflow {

/// Device noise model: relaxation/dephasing times, depolarizing gate errors
/// (reported as Pauli errors), and independent readout bit flips. Defaults
/// follow the 24-qubit calibration used for the noisy benchmarks.
struct NoiseParams {
  double t1_us = 128.1;
  double t2_us = 32.2;  // 2 * spin-echo T2
  double e_sq = 4.8e-4;  // single-qubit Pauli error
  double e_tq = 4.0e-3;  // two-qubit Pauli error
  double readout_eps = 0.01;
  double sq_gate_ns = 20.0;
  double tq_gate_ns = 44.0;

  void validate() const;

  /// Pure-dephasing time from 1/Tphi = 1/T2 - 1/(2 T1); infinity when
  /// T2 = 2 T1.
  double t_phi_us() const;

  /// Depolarizing probability reproducing Pauli error e on a D-dimensional
  /// gate support: p = e * D^2 / (D^2 - 1).
  static double depolarizing_prob(double e, int dim);
};

/// One Monte Carlo wavefunction trajectory. After every gate a depolarizing
/// Pauli may fire; after every layer each qubit passes through
/// amplitude-damping and dephasing jump/no-jump sampling for the layer
/// duration (idle qubits decohere too). The state stays normalized.
/// The hook runs after each period, like the noiseless evolver.
StateVector noisy_trajectory(const FockState& s0, const GateSequence& circuit, int n_periods,
                             const NoiseParams& np, std::uint64_t seed,
                             const PeriodHook& hook = {},
                             int dense_limit = kDefaultDenseEvolveLimit);

/// Flips each bit of each sample independently with probability eps.
SampleSet apply_readout_errors(const SampleSet& samples, double eps, std::uint64_t seed);

struct ReadoutBiasBounds {
  double mean_shift;   // L * eps
  double width_bound;  // sqrt(eps (1 - eps)), bound on |dx_err - dx|/sqrt(L)
};

ReadoutBiasBounds readout_bias_bounds(int L, double eps);

}  // namespace fockflow

#endif  // FOCKFLOW_NOISE_HPP
