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

#include "fockflow/statevector.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace fockflow {

StateVector StateVector::basis_state(const FockState& s) {
  StateVector psi;
  psi.n_qubits = s.size();
  psi.amps = Eigen::VectorXcd::Zero(Eigen::Index(1) << psi.n_qubits);
  psi.amps[static_cast<Eigen::Index>(s.to_index())] = 1.0;
  return psi;
}

void apply_gate_1q(Eigen::VectorXcd& amps, const Eigen::Matrix2cd& u, int q) {
  const Eigen::Index dim = amps.size();
  const Eigen::Index mask = Eigen::Index(1) << q;
  const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  Complex* a = amps.data();
  for (Eigen::Index base = 0; base < dim; base += 2 * mask) {
    for (Eigen::Index i = base; i < base + mask; ++i) {
      const Complex lo = a[i];
      const Complex hi = a[i + mask];
      a[i] = u00 * lo + u01 * hi;
      a[i + mask] = u10 * lo + u11 * hi;
    }
  }
}

void apply_gate_2q(Eigen::VectorXcd& amps, const Eigen::Matrix4cd& u, int q0, int q1) {
  const Eigen::Index dim = amps.size();
  const Eigen::Index m0 = Eigen::Index(1) << q0;
  const Eigen::Index m1 = Eigen::Index(1) << q1;
  Complex g[4][4];
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) g[r][c] = u(r, c);
  Complex* a = amps.data();
  const Eigen::Index lo_mask = std::min(m0, m1);
  const Eigen::Index hi_mask = std::max(m0, m1);
  for (Eigen::Index blk = 0; blk < dim; blk += 2 * hi_mask) {
    for (Eigen::Index mid = blk; mid < blk + hi_mask; mid += 2 * lo_mask) {
      for (Eigen::Index i = mid; i < mid + lo_mask; ++i) {
        const Complex v0 = a[i];
        const Complex v1 = a[i + m0];
        const Complex v2 = a[i + m1];
        const Complex v3 = a[i + m0 + m1];
        a[i] = g[0][0] * v0 + g[0][1] * v1 + g[0][2] * v2 + g[0][3] * v3;
        a[i + m0] = g[1][0] * v0 + g[1][1] * v1 + g[1][2] * v2 + g[1][3] * v3;
        a[i + m1] = g[2][0] * v0 + g[2][1] * v1 + g[2][2] * v2 + g[2][3] * v3;
        a[i + m0 + m1] = g[3][0] * v0 + g[3][1] * v1 + g[3][2] * v2 + g[3][3] * v3;
      }
    }
  }
}

void apply_gate(Eigen::VectorXcd& amps, const Gate& g) {
  if (g.sites.size() == 1) {
    apply_gate_1q(amps, g.u, g.sites[0]);
  } else if (g.sites.size() == 2) {
    apply_gate_2q(amps, g.u, g.sites[0], g.sites[1]);
  } else {
    throw std::invalid_argument("apply_gate: only 1- and 2-qubit gates supported");
  }
}

void apply_layer(Eigen::VectorXcd& amps, const GateLayer& layer) {
  for (const auto& g : layer.gates) apply_gate(amps, g);
}

void apply_sequence(Eigen::VectorXcd& amps, const GateSequence& seq) {
  for (const auto& layer : seq.layers) apply_layer(amps, layer);
}

std::vector<Gate> fuse_sequence(const GateSequence& seq) {
  // Exact algebraic fusion: consecutive single-qubit gates fold into the
  // next two-qubit gate touching that site (or flush at the end). Each pass
  // over the amplitude array is memory-bound, so fewer passes win.
  std::vector<Eigen::Matrix2cd> pending(seq.n_qubits, Eigen::Matrix2cd::Identity());
  std::vector<bool> has_pending(seq.n_qubits, false);
  std::vector<Gate> fused;
  for (const auto& layer : seq.layers) {
    for (const auto& g : layer.gates) {
      if (g.sites.size() == 1) {
        const int q = g.sites[0];
        pending[q] = Eigen::Matrix2cd(g.u) * pending[q];
        has_pending[q] = true;
      } else {
        const int a = g.sites[0], b = g.sites[1];
        Eigen::Matrix4cd u2 = g.u;
        if (has_pending[a] || has_pending[b]) {
          Eigen::Matrix4cd pre = Eigen::Matrix4cd::Zero();
          for (int sa = 0; sa < 2; ++sa)
            for (int sb = 0; sb < 2; ++sb)
              for (int ta = 0; ta < 2; ++ta)
                for (int tb = 0; tb < 2; ++tb)
                  pre(ta + 2 * tb, sa + 2 * sb) = pending[a](ta, sa) * pending[b](tb, sb);
          u2 = u2 * pre;
          pending[a].setIdentity();
          pending[b].setIdentity();
          has_pending[a] = has_pending[b] = false;
        }
        fused.push_back({{a, b}, u2});
      }
    }
  }
  for (int q = 0; q < seq.n_qubits; ++q)
    if (has_pending[q]) fused.push_back({{q}, Eigen::MatrixXcd(pending[q])});
  return fused;
}

StateVector evolve_statevector(const FockState& s0, const GateSequence& circuit, int n_periods,
                               const PeriodHook& hook, int dense_limit) {
  if (s0.size() != circuit.n_qubits)
    throw std::invalid_argument("evolve_statevector: state length != circuit width");
  if (circuit.n_qubits > dense_limit)
    throw std::invalid_argument("evolve_statevector: L exceeds dense limit");
  if (n_periods < 0) throw std::invalid_argument("evolve_statevector: n_periods must be >= 0");

  const std::vector<Gate> fused = fuse_sequence(circuit);
  StateVector psi = StateVector::basis_state(s0);
  if (hook) hook(0, psi);
  for (int n = 1; n <= n_periods; ++n) {
    for (const auto& g : fused) apply_gate(psi.amps, g);
    const double nrm = psi.amps.norm();
    if (std::abs(nrm - 1.0) > 1e-10)
      throw std::runtime_error("evolve_statevector: norm drift above 1e-10, gate bug?");
    psi.amps /= nrm;
    if (hook) hook(n, psi);
  }
  return psi;
}

Eigen::MatrixXcd assemble_unitary(const GateSequence& seq) {
  const Eigen::Index dim = Eigen::Index(1) << seq.n_qubits;
  const std::vector<Gate> fused = fuse_sequence(seq);
  Eigen::MatrixXcd u(dim, dim);
  Eigen::VectorXcd col(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    col.setZero();
    col[k] = 1.0;
    for (const auto& g : fused) apply_gate(col, g);
    u.col(k) = col;
  }
  return u;
}

std::vector<int> domain_wall_table(int L, Boundary boundary) {
  const std::uint64_t dim = 1ull << L;
  std::vector<int> w(dim);
  if (boundary == Boundary::periodic) {
    for (std::uint64_t i = 0; i < dim; ++i) w[i] = popcount64(i ^ ror_bits(i, L));
  } else {
    const std::uint64_t bond_mask = (1ull << (L - 1)) - 1;
    for (std::uint64_t i = 0; i < dim; ++i) w[i] = popcount64((i ^ (i >> 1)) & bond_mask);
  }
  return w;
}

EigData floquet_eigensystem(const ModelParams& p, int eigen_limit) {
  p.validate();
  if (p.L > eigen_limit) throw std::invalid_argument("floquet_eigensystem: L exceeds eigen limit");
  const GateSequence seq = build_floquet_circuit(p);
  const Eigen::MatrixXcd u = assemble_unitary(seq);
  const Eigen::Index dim = u.rows();

  // The unitary is normal, so its Schur form is diagonal up to rounding and
  // the Schur basis is an orthonormal eigenbasis even at degeneracies.
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(u, /*computeU=*/true);
  if (schur.info() != Eigen::Success)
    throw std::runtime_error("floquet_eigensystem: Schur decomposition failed");

  EigData out;
  out.quasienergies.resize(dim);
  out.eigenvectors = schur.matrixU();
  for (Eigen::Index n = 0; n < dim; ++n) {
    const Complex ev = schur.matrixT()(n, n);
    if (std::abs(std::abs(ev) - 1.0) > 1e-8)
      throw std::runtime_error("floquet_eigensystem: non-unit-modulus eigenvalue, assembly bug?");
    out.quasienergies[n] = std::arg(ev);
  }

  const std::vector<int> w = domain_wall_table(p.L, p.boundary);
  out.w_mean.resize(dim);
  for (Eigen::Index n = 0; n < dim; ++n) {
    double acc = 0.0;
    for (Eigen::Index s = 0; s < dim; ++s) acc += w[s] * std::norm(out.eigenvectors(s, n));
    out.w_mean[n] = acc;
  }
  return out;
}

std::vector<FockEdge> fock_hopping_matrix(const ModelParams& p, bool drop_pi_pulse,
                                          double threshold) {
  p.validate();
  if (p.L > 10) throw std::invalid_argument("fock_hopping_matrix: L exceeds limit 10");
  GateSequence seq = build_floquet_circuit(p);
  if (drop_pi_pulse) seq.layers.erase(seq.layers.begin());
  const Eigen::MatrixXcd u = assemble_unitary(seq);

  const double cutoff = threshold * u.cwiseAbs().maxCoeff();
  std::vector<FockEdge> edges;
  for (Eigen::Index c = 0; c < u.cols(); ++c)
    for (Eigen::Index r = 0; r < u.rows(); ++r) {
      const double t = std::abs(u(r, c));
      if (t >= cutoff)
        edges.push_back({static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(c), t});
    }
  return edges;
}

Eigen::VectorXd local_magnetization(const StateVector& state) {
  const int L = state.n_qubits;
  Eigen::VectorXd sz = Eigen::VectorXd::Zero(L);
  const Eigen::Index dim = state.amps.size();
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double p = std::norm(state.amps[i]);
    if (p == 0.0) continue;
    for (int j = 0; j < L; ++j) sz[j] += ((i >> j) & 1) ? p : -p;
  }
  return sz;
}

std::vector<FockState> sample_statevector(const StateVector& state, int shots, std::uint64_t seed) {
  if (shots <= 0) throw std::invalid_argument("sample_statevector: shots must be > 0");
  RngStream rng = RngStream::derive(seed, 0x5a17);
  std::vector<double> u(shots);
  for (auto& x : u) x = rng.next_double();
  std::sort(u.begin(), u.end());

  const Eigen::Index dim = state.amps.size();
  std::vector<FockState> out;
  out.reserve(shots);
  double cum = 0.0;
  Eigen::Index i = 0;
  for (int k = 0; k < shots; ++k) {
    while (i < dim - 1 && cum + std::norm(state.amps[i]) < u[k]) {
      cum += std::norm(state.amps[i]);
      ++i;
    }
    out.push_back(FockState::from_index(static_cast<std::uint64_t>(i), state.n_qubits));
  }
  // sorted draws leave samples ordered by index; order carries no meaning
  return out;
}

}  // namespace fockflow
