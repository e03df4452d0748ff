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

#include "fockflow/model.hpp"

#include <cmath>

namespace fockflow {

ModelParams ModelParams::coupled(int L, double lambda1, double phi1, double phi2, double J,
                                 Boundary b) {
  ModelParams p;
  p.L = L;
  p.J = J;
  p.phi1 = phi1;
  p.phi2 = phi2;
  p.lambda1 = lambda1;
  p.lambda2 = 0.5 * lambda1;
  p.boundary = b;
  return p;
}

void ModelParams::validate() const {
  if (L < 2) throw std::invalid_argument("ModelParams: L must be >= 2");
  for (double a : {J, phi1, phi2, lambda1, lambda2}) {
    if (!std::isfinite(a)) throw std::invalid_argument("ModelParams: angles must be finite");
  }
}

FockState FockState::from_index(std::uint64_t index, int L) {
  FockState s;
  s.bits.resize(L);
  for (int j = 0; j < L; ++j) s.bits[j] = static_cast<std::uint8_t>((index >> j) & 1ull);
  return s;
}

std::uint64_t FockState::to_index() const {
  if (size() > 63) throw std::invalid_argument("FockState: index mapping limited to L <= 63");
  std::uint64_t i = 0;
  for (int j = 0; j < size(); ++j)
    if (bits[j]) i |= (1ull << j);
  return i;
}

FockState FockState::complement() const {
  FockState s = *this;
  for (auto& b : s.bits) b = static_cast<std::uint8_t>(1 - b);
  return s;
}

std::string FockState::to_string() const {
  std::string out(bits.size(), '0');
  for (int j = 0; j < size(); ++j)
    if (bits[j]) out[j] = '1';
  return out;
}

int domain_wall_count(const FockState& s, Boundary boundary) {
  const int L = s.size();
  if (L < 2) throw std::invalid_argument("domain_wall_count: need L >= 2");
  int w = 0;
  const int bonds = (boundary == Boundary::periodic) ? L : L - 1;
  for (int j = 0; j < bonds; ++j) w += (s.bits[j] != s.bits[(j + 1) % L]) ? 1 : 0;
  return w;
}

int hamming_distance(const FockState& a, const FockState& b) {
  if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: length mismatch");
  int d = 0;
  for (int j = 0; j < a.size(); ++j) d += (a.bits[j] != b.bits[j]) ? 1 : 0;
  return d;
}

InitialStateKind parse_initial_state_kind(const std::string& name) {
  if (name == "fm" || name == "FM") return InitialStateKind::fm;
  if (name == "afm" || name == "AFM") return InitialStateKind::afm;
  if (name == "1fm" || name == "1FM") return InitialStateKind::one_fm;
  if (name == "2fm" || name == "2FM") return InitialStateKind::two_fm;
  if (name == "random") return InitialStateKind::random;
  throw std::invalid_argument("unknown initial state kind: " + name);
}

std::string to_string(InitialStateKind k) {
  switch (k) {
    case InitialStateKind::fm: return "fm";
    case InitialStateKind::afm: return "afm";
    case InitialStateKind::one_fm: return "1fm";
    case InitialStateKind::two_fm: return "2fm";
    case InitialStateKind::random: return "random";
  }
  return "?";
}

FockState make_initial_state(InitialStateKind kind, int L, int shift, std::uint64_t seed) {
  if (L < 2) throw std::invalid_argument("make_initial_state: L must be >= 2");
  if (shift < 0 || shift >= L) throw std::invalid_argument("make_initial_state: shift out of range");
  const bool afm_derived = kind == InitialStateKind::afm || kind == InitialStateKind::one_fm ||
                           kind == InitialStateKind::two_fm;
  if (afm_derived && L % 2 != 0)
    throw std::invalid_argument("make_initial_state: AFM-derived patterns need even L");

  FockState s;
  s.bits.assign(L, 0);
  switch (kind) {
    case InitialStateKind::fm:
      s.bits.assign(L, 1);
      break;
    case InitialStateKind::afm:
    case InitialStateKind::one_fm:
    case InitialStateKind::two_fm:
      for (int j = 0; j < L; j += 2) s.bits[j] = 1;
      if (kind == InitialStateKind::one_fm) s.bits[L / 2 - 1] ^= 1;
      if (kind == InitialStateKind::two_fm) {
        s.bits[L / 4] ^= 1;
        s.bits[3 * L / 4] ^= 1;
      }
      break;
    case InitialStateKind::random: {
      RngStream rng = RngStream::derive(seed, 0);
      for (int j = 0; j < L; ++j) s.bits[j] = rng.next_bit() ? 1 : 0;
      break;
    }
  }
  if (shift != 0) {
    FockState rot;
    rot.bits.resize(L);
    for (int j = 0; j < L; ++j) rot.bits[(j + shift) % L] = s.bits[j];
    s = rot;
  }
  return s;
}

void GateSequence::validate() const {
  for (const auto& layer : layers) {
    std::vector<char> used(n_qubits, 0);
    for (const auto& g : layer.gates) {
      const auto dim = static_cast<Eigen::Index>(1) << g.sites.size();
      if (g.u.rows() != dim || g.u.cols() != dim)
        throw std::invalid_argument("GateSequence: gate dimension inconsistent with site count");
      double dev = (g.u.adjoint() * g.u - Eigen::MatrixXcd::Identity(dim, dim))
                       .cwiseAbs()
                       .maxCoeff();
      if (dev > 1e-12) throw std::invalid_argument("GateSequence: gate not unitary");
      for (int q : g.sites) {
        if (q < 0 || q >= n_qubits) throw std::invalid_argument("GateSequence: site out of range");
        if (used[q]) throw std::invalid_argument("GateSequence: layer reuses a site");
        used[q] = 1;
      }
    }
  }
}

// Pauli matrices in the index ordering (|0>, |1>) with the spin convention
// sz|s> = (2s-1)|s>, i.e. bit 1 is spin up. This keeps the cat-state phases
// and quasienergy formulas in their printed form.
Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << 0, Complex(0, 1), Complex(0, -1), 0;
  return m;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << -1, 0, 0, 1;
  return m;
}

Eigen::Matrix2cd rot_z(double theta) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = std::exp(Complex(0, 0.5 * theta));
  m(1, 1) = std::exp(Complex(0, -0.5 * theta));
  return m;
}

Eigen::Matrix2cd pi_pulse_gate() { return Complex(0, -1) * pauli_x(); }

Eigen::Matrix2cd euler_perturbation(double phi1, double lambda1, double phi2) {
  // rightmost factor acts first on the state
  Eigen::Matrix2cd y = std::cos(0.5 * lambda1) * Eigen::Matrix2cd::Identity() +
                       Complex(0, 1) * std::sin(0.5 * lambda1) * pauli_y();
  return rot_z(phi1) * y * rot_z(phi2);
}

Eigen::Matrix2cd tilted_z(double lambda2) {
  return std::cos(lambda2) * pauli_z() + std::sin(lambda2) * pauli_x();
}

Eigen::Matrix4cd ising_bond_gate(double J, double lambda2) {
  // (sz~ x sz~)^2 = I, so the exponential closes after one sine/cosine pair.
  Eigen::Matrix2cd t = tilted_z(lambda2);
  Eigen::Matrix4cd zz = Eigen::Matrix4cd::Zero();
  for (int b1 = 0; b1 < 2; ++b1)
    for (int b0 = 0; b0 < 2; ++b0)
      for (int a1 = 0; a1 < 2; ++a1)
        for (int a0 = 0; a0 < 2; ++a0)
          zz(b0 + 2 * b1, a0 + 2 * a1) = t(b0, a0) * t(b1, a1);
  return std::cos(J) * Eigen::Matrix4cd::Identity() - Complex(0, 1) * std::sin(J) * zz;
}

GateSequence build_floquet_circuit(const ModelParams& p) {
  p.validate();
  const int L = p.L;
  GateSequence seq;
  seq.n_qubits = L;

  GateLayer pi_layer;
  pi_layer.label = "pi_pulse";
  pi_layer.duration_ns = 20.0;
  Eigen::MatrixXcd xp = pi_pulse_gate();
  for (int q = 0; q < L; ++q) pi_layer.gates.push_back({{q}, xp});
  seq.layers.push_back(std::move(pi_layer));

  GateLayer up_layer;
  up_layer.label = "euler";
  up_layer.duration_ns = 20.0;
  Eigen::MatrixXcd up = euler_perturbation(p.phi1, p.lambda1, p.phi2);
  for (int q = 0; q < L; ++q) up_layer.gates.push_back({{q}, up});
  seq.layers.push_back(std::move(up_layer));

  Eigen::MatrixXcd bond = ising_bond_gate(p.J, p.lambda2);
  GateLayer even_layer, odd_layer, wrap_layer;
  even_layer.label = "bonds_even";
  odd_layer.label = "bonds_odd";
  wrap_layer.label = "bonds_wrap";
  even_layer.duration_ns = odd_layer.duration_ns = wrap_layer.duration_ns = 44.0;
  const int n_bonds = (p.boundary == Boundary::periodic) ? L : L - 1;
  for (int j = 0; j < n_bonds; ++j) {
    Gate g{{j, (j + 1) % L}, bond};
    // On an odd-L ring the wrap bond shares site 0 with bond 0 despite its
    // even parity, so it gets its own layer (all bond gates commute).
    if (j == L - 1 && p.boundary == Boundary::periodic && L % 2 == 1)
      wrap_layer.gates.push_back(std::move(g));
    else if (j % 2 == 0)
      even_layer.gates.push_back(std::move(g));
    else
      odd_layer.gates.push_back(std::move(g));
  }
  seq.layers.push_back(std::move(even_layer));
  seq.layers.push_back(std::move(odd_layer));
  if (!wrap_layer.gates.empty()) seq.layers.push_back(std::move(wrap_layer));
  return seq;
}

double check_echo_condition(const ModelParams& p) {
  return circular_distance(p.phi1 - p.phi2, 0.0);
}

}  // namespace fockflow
