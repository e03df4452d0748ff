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

#ifndef FOCKFLOW_MODEL_HPP
#define FOCKFLOW_MODEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fockflow/common.hpp"

namespace fockflow {

enum class Boundary { periodic, open };

/// Parameters of one drive cycle of the kicked Ising ring.
///
/// Per cycle (period T = 1) the evolution is
///   U_F = exp(-i J sum_j sz~_j sz~_{j+1}) * U_p(phi1, lambda1, phi2) * X_pi,
/// where X_pi is a global pi pulse, U_p the per-qubit Euler rotation
/// Rz(phi1) e^{+i lambda1 sy/2} Rz(phi2), and sz~ = cos(lambda2) sz +
/// sin(lambda2) sx tilts the Ising axis. lambda1 = 2 lambda2 unless
/// overridden.
struct ModelParams {
  int L = 0;
  double J = 1.0;
  double phi1 = 0.0;
  double phi2 = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  Boundary boundary = Boundary::periodic;

  /// Convenience constructor applying the lambda1 = 2*lambda2 convention.
  static ModelParams coupled(int L, double lambda1, double phi1, double phi2, double J = 1.0,
                             Boundary b = Boundary::periodic);

  void validate() const;
};

/// A computational-basis configuration; bit j is qubit j+1 in 1-based reports.
struct FockState {
  std::vector<std::uint8_t> bits;

  FockState() = default;
  explicit FockState(std::vector<std::uint8_t> b) : bits(std::move(b)) {}
  static FockState from_index(std::uint64_t index, int L);

  int size() const { return static_cast<int>(bits.size()); }

  /// Basis index with little-endian mapping (valid for L <= 63).
  std::uint64_t to_index() const;

  FockState complement() const;

  /// String in qubit order Q1..QL, e.g. "1010".
  std::string to_string() const;

  bool operator==(const FockState& other) const { return bits == other.bits; }
};

/// Number of anti-parallel neighbor bonds. Even and <= L on a periodic
/// ring, where it equals 2 sum_j s^j (1 - s^{j+1}) with wraparound.
int domain_wall_count(const FockState& s, Boundary boundary);

int hamming_distance(const FockState& a, const FockState& b);

enum class InitialStateKind { fm, afm, one_fm, two_fm, random };

InitialStateKind parse_initial_state_kind(const std::string& name);
std::string to_string(InitialStateKind k);

/// Builds the canonical initial patterns, then rotates the whole pattern
/// cyclically by `shift` sites.
///
/// fm: all ones. afm: 1010... starting with 1. one_fm: afm with the bit at
/// qubit L/2 flipped (3-site mini-FM region, L-2 domain walls). two_fm: afm
/// with flips at floor(L/4) and floor(3L/4) (0-based; maximally separated,
/// L-4 domain walls). random: seeded fair bits.
FockState make_initial_state(InitialStateKind kind, int L, int shift, std::uint64_t seed = 0);

/// One gate: a unitary on an ordered list of sites. The matrix acts on the
/// local index sum_k s_{sites[k]} << k (first listed site = least
/// significant bit).
struct Gate {
  std::vector<int> sites;
  Eigen::MatrixXcd u;
};

/// One circuit layer; gates within a layer act on disjoint sites.
/// duration_ns feeds the decoherence interleave of noisy runs.
struct GateLayer {
  std::vector<Gate> gates;
  double duration_ns = 0.0;
  std::string label;
};

struct GateSequence {
  int n_qubits = 0;
  std::vector<GateLayer> layers;

  /// Throws if any gate is non-unitary beyond 1e-12 or a layer reuses a site.
  void validate() const;
};

/// Gate-layer realization of one Floquet period, in application order:
/// (a) global pi-pulse layer, (b) U_p layer, (c) even bonds, (d) odd bonds.
/// The wrap-around bond (L-1, 0) joins the layer matching its parity. The
/// even/odd split is exact since all bond gates commute.
GateSequence build_floquet_circuit(const ModelParams& p);

/// Circular distance of phi1 - phi2 from 0 mod 2pi, in [0, pi]. Zero means
/// the single-qubit two-period propagator (J = 0, lambda2 = 0) is
/// proportional to the identity.
double check_echo_condition(const ModelParams& p);

// Single-qubit building blocks, exposed for reuse and tests.
Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_y();
Eigen::Matrix2cd pauli_z();
Eigen::Matrix2cd rot_z(double theta);        // e^{-i theta sz/2}
Eigen::Matrix2cd pi_pulse_gate();            // e^{-i pi sx/2}
Eigen::Matrix2cd euler_perturbation(double phi1, double lambda1, double phi2);
Eigen::Matrix2cd tilted_z(double lambda2);   // cos(l2) sz + sin(l2) sx
Eigen::Matrix4cd ising_bond_gate(double J, double lambda2);

}  // namespace fockflow

#endif  // FOCKFLOW_MODEL_HPP
