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

#ifndef FOCKFLOW_STATEVECTOR_HPP
#define FOCKFLOW_STATEVECTOR_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "fockflow/model.hpp"

namespace fockflow {

/// Dense amplitudes over the 2^L basis, little-endian: bit j of the index
/// is qubit j. Normalized within 1e-10 after every period.
struct StateVector {
  int n_qubits = 0;
  Eigen::VectorXcd amps;

  static StateVector basis_state(const FockState& s);
  double norm() const { return amps.norm(); }
};

inline constexpr int kDefaultDenseEvolveLimit = 24;
inline constexpr int kDefaultDenseEigenLimit = 12;

// In-place gate kernels over bit-mask strata.
void apply_gate_1q(Eigen::VectorXcd& amps, const Eigen::Matrix2cd& u, int q);
void apply_gate_2q(Eigen::VectorXcd& amps, const Eigen::Matrix4cd& u, int q0, int q1);
void apply_gate(Eigen::VectorXcd& amps, const Gate& g);
void apply_layer(Eigen::VectorXcd& amps, const GateLayer& layer);
void apply_sequence(Eigen::VectorXcd& amps, const GateSequence& seq);

/// Exact fusion of consecutive single-qubit gates into neighboring two-qubit
/// gates; an equivalent gate list with fewer passes over the amplitudes.
std::vector<Gate> fuse_sequence(const GateSequence& seq);

/// Called after each period with (period index n, state at nT).
using PeriodHook = std::function<void(int, const StateVector&)>;

/// Applies `circuit` n_periods times, invoking the hook after each period.
/// Norm drift beyond 1e-10 per period throws (it signals a gate bug);
/// smaller drift is renormalized away.
StateVector evolve_statevector(const FockState& s0, const GateSequence& circuit, int n_periods,
                               const PeriodHook& hook = {}, int dense_limit = kDefaultDenseEvolveLimit);

/// Floquet eigensystem of the one-period unitary.
struct EigData {
  Eigen::VectorXd quasienergies;  // arg(eigenvalue) in (-pi, pi]
  Eigen::MatrixXcd eigenvectors;  // column n belongs to quasienergies[n]
  Eigen::VectorXd w_mean;         // <w>_n = sum_s W(s) |<s|eps_n>|^2
};

/// Assembles the dense one-period unitary from the gate sequence and
/// diagonalizes it as a normal matrix via a Schur decomposition, which keeps
/// eigenvectors orthonormal through the heavy degeneracies at lambda = 0.
EigData floquet_eigensystem(const ModelParams& p, int eigen_limit = kDefaultDenseEigenLimit);

/// Dense one-period unitary (column k = circuit applied to basis state k).
Eigen::MatrixXcd assemble_unitary(const GateSequence& seq);

struct FockEdge {
  std::uint64_t s1 = 0;
  std::uint64_t s2 = 0;
  double strength = 0.0;  // |<s1|U|s2>|
};

/// Fock-network edges of the one-period unitary, with the pi-pulse layer
/// omitted when `drop_pi_pulse` is set; entries below threshold * max|T|
/// are dropped. L <= 10.
std::vector<FockEdge> fock_hopping_matrix(const ModelParams& p, bool drop_pi_pulse,
                                          double threshold);

/// <sigma^z_j> for j = 0..L-1.
Eigen::VectorXd local_magnetization(const StateVector& state);

/// Per-index domain wall counts W(i) for i = 0..2^L-1.
std::vector<int> domain_wall_table(int L, Boundary boundary);

/// Draws `shots` bitstrings from |amps|^2; deterministic under seed and
/// independent of threading (sorted-uniform sweep).
std::vector<FockState> sample_statevector(const StateVector& state, int shots, std::uint64_t seed);

}  // namespace fockflow

#endif  // FOCKFLOW_STATEVECTOR_HPP
