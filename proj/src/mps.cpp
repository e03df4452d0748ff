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

#include "fockflow/mps.hpp"

#include <algorithm>
#include <cmath>

// LAPACKE-backed SVD: the two-site updates are SVD-bound, and the
// divide-and-conquer driver beats Eigen's bidiagonalization at chi ~ 256.
#ifdef FOCKFLOW_USE_LAPACKE
#include <lapacke.h>
#endif
#include <Eigen/SVD>

namespace fockflow {

namespace {

Eigen::Matrix4cd swap_gate() {
  Eigen::Matrix4cd s = Eigen::Matrix4cd::Zero();
  s(0, 0) = 1;
  s(1, 2) = 1;
  s(2, 1) = 1;
  s(3, 3) = 1;
  return s;
}

// Pseudo-inverse of a Schmidt vector; entries under the relative cutoff have
// negligible weight in the adjacent tensors and are zeroed instead of
// amplified.
Eigen::VectorXd safe_inverse(const Eigen::VectorXd& v, double rel_cutoff = 1e-12) {
  const double cut = rel_cutoff * v.maxCoeff();
  Eigen::VectorXd inv(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) inv[i] = (v[i] > cut) ? 1.0 / v[i] : 0.0;
  return inv;
}

}  // namespace

MpsState MpsState::product_state(const FockState& s, int chi_max) {
  if (chi_max < 1) throw std::invalid_argument("MpsState: chi_max must be >= 1");
  MpsState m;
  m.n_sites = s.size();
  m.chi_max = chi_max;
  m.gamma.resize(m.n_sites);
  for (int j = 0; j < m.n_sites; ++j) {
    for (int b = 0; b < 2; ++b) {
      m.gamma[j][b] = Eigen::MatrixXcd::Zero(1, 1);
      if (s.bits[j] == b) m.gamma[j][b](0, 0) = 1.0;
    }
  }
  m.lambda.assign(m.n_sites - 1, Eigen::VectorXd::Ones(1));
  return m;
}

int MpsState::max_bond_dim() const {
  int chi = 1;
  for (const auto& l : lambda) chi = std::max(chi, static_cast<int>(l.size()));
  return chi;
}

void mps_apply_1q(MpsState& m, const Eigen::Matrix2cd& u, int site) {
  auto& g = m.gamma[site];
  Eigen::MatrixXcd g0 = u(0, 0) * g[0] + u(0, 1) * g[1];
  Eigen::MatrixXcd g1 = u(1, 0) * g[0] + u(1, 1) * g[1];
  g[0] = std::move(g0);
  g[1] = std::move(g1);
}

double mps_apply_2q(MpsState& m, const Eigen::Matrix4cd& u, int j, const MpsEvolveOptions& opts) {
  const int L = m.n_sites;
  if (j < 0 || j + 1 >= L) throw std::invalid_argument("mps_apply_2q: bond out of range");
  const Eigen::Index chi_l = m.gamma[j][0].rows();
  const Eigen::Index chi_r = m.gamma[j + 1][0].cols();

  const Eigen::VectorXd lam_left =
      (j > 0) ? m.lambda[j - 1] : Eigen::VectorXd::Ones(chi_l);
  const Eigen::VectorXd& lam_mid = m.lambda[j];
  const Eigen::VectorXd lam_right =
      (j + 1 < L - 1) ? m.lambda[j + 1] : Eigen::VectorXd::Ones(chi_r);

  // theta[s][t] = diag(lamL) G_j[s] diag(lamM) G_{j+1}[t] diag(lamR)
  std::array<Eigen::MatrixXcd, 2> a, b;
  for (int s = 0; s < 2; ++s)
    a[s] = lam_left.asDiagonal() * m.gamma[j][s] * lam_mid.asDiagonal();
  for (int t = 0; t < 2; ++t) b[t] = m.gamma[j + 1][t] * lam_right.asDiagonal();

  std::array<std::array<Eigen::MatrixXcd, 2>, 2> theta;
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t) theta[s][t].noalias() = a[s] * b[t];

  // gate in the local index convention m = s + 2t
  Eigen::MatrixXcd big(2 * chi_l, 2 * chi_r);
  for (int sp = 0; sp < 2; ++sp)
    for (int tp = 0; tp < 2; ++tp) {
      Eigen::MatrixXcd blk = Eigen::MatrixXcd::Zero(chi_l, chi_r);
      for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) {
          const Complex g = u(sp + 2 * tp, s + 2 * t);
          if (g != 0.0) blk.noalias() += g * theta[s][t];
        }
      big.block(sp * chi_l, tp * chi_r, chi_l, chi_r) = blk;
    }

  Eigen::VectorXd sv;
  Eigen::MatrixXcd u_mat;   // (2 chi_l) x r
  Eigen::MatrixXcd vh_mat;  // r x (2 chi_r)
#ifdef FOCKFLOW_USE_LAPACKE
  {
    const auto rows = static_cast<lapack_int>(big.rows());
    const auto cols = static_cast<lapack_int>(big.cols());
    const lapack_int k = std::min(rows, cols);
    sv.resize(k);
    u_mat.resize(rows, k);
    vh_mat.resize(k, cols);
    const lapack_int info = LAPACKE_zgesdd(
        LAPACK_COL_MAJOR, 'S', rows, cols, reinterpret_cast<lapack_complex_double*>(big.data()),
        rows, sv.data(), reinterpret_cast<lapack_complex_double*>(u_mat.data()), rows,
        reinterpret_cast<lapack_complex_double*>(vh_mat.data()), k);
    if (info != 0) throw std::runtime_error("mps_apply_2q: SVD failed");
  }
#else
  {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(big, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success) throw std::runtime_error("mps_apply_2q: SVD failed");
    sv = svd.singularValues();
    u_mat = svd.matrixU();
    vh_mat = svd.matrixV().adjoint();
  }
#endif

  const double floor = opts.svd_floor_rel * sv[0];
  Eigen::Index rank = 0;
  while (rank < sv.size() && rank < opts.chi_max && sv[rank] > floor) ++rank;
  if (rank == 0) rank = 1;

  double kept_sq = sv.head(rank).squaredNorm();
  double discarded = sv.squaredNorm() - kept_sq;

  Eigen::VectorXd lam_new = sv.head(rank) / std::sqrt(kept_sq);
  const Eigen::VectorXd inv_l = safe_inverse(lam_left);
  const Eigen::VectorXd inv_r = safe_inverse(lam_right);

  for (int s = 0; s < 2; ++s)
    m.gamma[j][s] = inv_l.asDiagonal() * u_mat.block(s * chi_l, 0, chi_l, rank);
  for (int t = 0; t < 2; ++t)
    m.gamma[j + 1][t] =
        vh_mat.block(0, t * chi_r, rank, chi_r) * inv_r.asDiagonal();
  m.lambda[j] = std::move(lam_new);

  return std::max(0.0, discarded);
}

double mps_apply_boundary_bond(MpsState& m, const Eigen::Matrix4cd& u,
                               const MpsEvolveOptions& opts) {
  const int L = m.n_sites;
  const Eigen::Matrix4cd sw = swap_gate();
  if (L < 3) return mps_apply_2q(m, Eigen::Matrix4cd(sw * u * sw), 0, opts);
  double discarded = 0.0;
  // route logical site L-1 down to position 1
  for (int p = L - 2; p >= 1; --p) discarded += mps_apply_2q(m, sw, p, opts);
  // positions (0, 1) now hold logical (0, L-1); the gate arrived in
  // (L-1, 0) site order, so conjugate with a swap to flip the convention.
  discarded += mps_apply_2q(m, sw * u * sw, 0, opts);
  for (int p = 1; p <= L - 2; ++p) discarded += mps_apply_2q(m, sw, p, opts);
  return discarded;
}

MpsState evolve_mps(const FockState& s0, const GateSequence& circuit, int n_periods,
                    const MpsEvolveOptions& opts, const MpsPeriodHook& hook) {
  if (opts.chi_max < 1) throw std::invalid_argument("evolve_mps: chi_max must be >= 1");
  if (s0.size() != circuit.n_qubits)
    throw std::invalid_argument("evolve_mps: state length != circuit width");
  const int L = circuit.n_qubits;

  MpsState m = MpsState::product_state(s0, opts.chi_max);
  if (hook) hook(0, m);
  for (int n = 1; n <= n_periods; ++n) {
    double discarded = 0.0;
    for (const auto& layer : circuit.layers) {
      for (const auto& g : layer.gates) {
        if (g.sites.size() == 1) {
          mps_apply_1q(m, g.u, g.sites[0]);
        } else if (g.sites.size() == 2 && g.sites[1] == g.sites[0] + 1) {
          discarded += mps_apply_2q(m, g.u, g.sites[0], opts);
        } else if (g.sites.size() == 2 && g.sites[0] == L - 1 && g.sites[1] == 0) {
          discarded += mps_apply_boundary_bond(m, g.u, opts);
        } else {
          throw std::invalid_argument("evolve_mps: unsupported gate geometry");
        }
      }
    }
    m.discarded_per_period.push_back(discarded);
    m.discarded_total += discarded;
    if (canonical_form_error(m) > opts.recanonicalize_tol) recanonicalize(m);
    if (hook) hook(n, m);
  }
  return m;
}

SampleSet sample_bitstrings(const MpsState& m, int shots, std::uint64_t seed) {
  if (shots <= 0) throw std::invalid_argument("sample_bitstrings: shots must be > 0");
  const int L = m.n_sites;

  // right-canonical tensors B[s] = Gamma[s] diag(lambda)
  std::vector<std::array<Eigen::MatrixXcd, 2>> b(L);
  for (int j = 0; j < L; ++j)
    for (int s = 0; s < 2; ++s)
      b[j][s] = (j < L - 1) ? Eigen::MatrixXcd(m.gamma[j][s] * m.lambda[j].asDiagonal())
                            : m.gamma[j][s];

  SampleSet out;
  out.seed = seed;
  out.samples.reserve(shots);
  for (int shot = 0; shot < shots; ++shot) {
    RngStream rng = RngStream::derive(seed, static_cast<std::uint64_t>(shot));
    FockState s;
    s.bits.resize(L);
    Eigen::RowVectorXcd v = Eigen::RowVectorXcd::Ones(1);
    for (int j = 0; j < L; ++j) {
      Eigen::RowVectorXcd v0 = v * b[j][0];
      Eigen::RowVectorXcd v1 = v * b[j][1];
      const double p0 = v0.squaredNorm();
      const double p1 = v1.squaredNorm();
      if (std::abs(p0 + p1 - 1.0) > 1e-6)
        throw std::runtime_error("sample_bitstrings: state not in canonical form");
      const bool one = rng.next_double() >= p0;
      s.bits[j] = one ? 1 : 0;
      v = one ? (v1 / std::sqrt(p1)) : (v0 / std::sqrt(p0));
    }
    out.samples.push_back(std::move(s));
  }
  return out;
}

StateVector mps_to_statevector(const MpsState& m, int dense_limit) {
  const int L = m.n_sites;
  if (L > dense_limit) throw std::invalid_argument("mps_to_statevector: L exceeds dense limit");
  // contract left to right with B tensors; row index accumulates the bits
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Ones(1, 1);
  for (int j = 0; j < L; ++j) {
    const Eigen::MatrixXcd b0 =
        (j < L - 1) ? Eigen::MatrixXcd(m.gamma[j][0] * m.lambda[j].asDiagonal()) : m.gamma[j][0];
    const Eigen::MatrixXcd b1 =
        (j < L - 1) ? Eigen::MatrixXcd(m.gamma[j][1] * m.lambda[j].asDiagonal()) : m.gamma[j][1];
    Eigen::MatrixXcd next(t.rows() * 2, b0.cols());
    next.topRows(t.rows()).noalias() = t * b0;
    next.bottomRows(t.rows()).noalias() = t * b1;
    t = std::move(next);
  }
  // each doubling step put s_j at bit j of the row index, so the column is
  // already in little-endian order
  StateVector psi;
  psi.n_qubits = L;
  psi.amps = t.col(0);
  return psi;
}

double mps_fidelity(const MpsState& m, const StateVector& reference) {
  if (m.n_sites != reference.n_qubits) throw std::invalid_argument("mps_fidelity: size mismatch");
  const StateVector dense = mps_to_statevector(m, m.n_sites);
  const Complex overlap = reference.amps.dot(dense.amps);
  return std::norm(overlap);
}

double extrapolate_chi(std::vector<std::pair<int, double>> points) {
  if (points.size() < 2) throw std::invalid_argument("extrapolate_chi: need >= 2 points");
  std::sort(points.begin(), points.end());
  const auto [chi1, y1] = points[points.size() - 2];
  const auto [chi2, y2] = points[points.size() - 1];
  if (chi1 == chi2) throw std::invalid_argument("extrapolate_chi: duplicate chi");
  const double x1 = 1.0 / chi1, x2 = 1.0 / chi2;
  const double slope = (y1 - y2) / (x1 - x2);
  return y2 - slope * x2;
}

double canonical_form_error(const MpsState& m) {
  const int L = m.n_sites;
  double err = 0.0;
  for (int j = 0; j < L; ++j) {
    const Eigen::Index chi_l = m.gamma[j][0].rows();
    const Eigen::Index chi_r = m.gamma[j][0].cols();
    const Eigen::VectorXd lam_l = (j > 0) ? m.lambda[j - 1] : Eigen::VectorXd::Ones(chi_l);
    const Eigen::VectorXd lam_r = (j < L - 1) ? m.lambda[j] : Eigen::VectorXd::Ones(chi_r);
    Eigen::MatrixXcd left = Eigen::MatrixXcd::Zero(chi_r, chi_r);
    Eigen::MatrixXcd right = Eigen::MatrixXcd::Zero(chi_l, chi_l);
    for (int s = 0; s < 2; ++s) {
      const Eigen::MatrixXcd a = lam_l.asDiagonal() * m.gamma[j][s];
      const Eigen::MatrixXcd b = m.gamma[j][s] * lam_r.asDiagonal();
      left.noalias() += a.adjoint() * a;
      right.noalias() += b * b.adjoint();
    }
    err = std::max(err, (left - Eigen::MatrixXcd::Identity(chi_r, chi_r)).cwiseAbs().maxCoeff());
    err = std::max(err, (right - Eigen::MatrixXcd::Identity(chi_l, chi_l)).cwiseAbs().maxCoeff());
  }
  return err;
}

void recanonicalize(MpsState& m) {
  const int L = m.n_sites;
  if (L < 2) return;

  // right-to-left QR sweep: produce right-orthonormal tensors without ever
  // inverting a Schmidt vector
  std::vector<std::array<Eigen::MatrixXcd, 2>> b(L);
  Eigen::MatrixXcd carry = Eigen::MatrixXcd::Identity(1, 1);
  for (int j = L - 1; j >= 0; --j) {
    std::array<Eigen::MatrixXcd, 2> msv;
    for (int s = 0; s < 2; ++s) {
      Eigen::MatrixXcd t = m.gamma[j][s];
      if (j < L - 1) t = t * m.lambda[j].asDiagonal();
      msv[s].noalias() = t * carry;
    }
    const Eigen::Index rows = msv[0].rows();
    const Eigen::Index cols = msv[0].cols();
    Eigen::MatrixXcd n(rows, 2 * cols);
    n.leftCols(cols) = msv[0];
    n.rightCols(cols) = msv[1];
    // LQ through the QR of the adjoint: N = R^dagger Q^dagger
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(n.adjoint());
    const Eigen::Index k = std::min(rows, 2 * cols);
    const Eigen::MatrixXcd q =
        Eigen::MatrixXcd(qr.householderQ() * Eigen::MatrixXcd::Identity(2 * cols, k));
    const Eigen::MatrixXcd r =
        qr.matrixQR().topLeftCorner(k, rows).triangularView<Eigen::Upper>();
    b[j][0] = q.topRows(cols).adjoint();
    b[j][1] = q.bottomRows(cols).adjoint();
    carry = r.adjoint();
  }
  // carry is 1x1 now: the norm and global phase
  b[0][0] = carry(0, 0) * b[0][0];
  b[0][1] = carry(0, 0) * b[0][1];

  // left-to-right SVD sweep: rebuild the Schmidt vectors and gammas; the
  // divisions by lambda are benign in this fresh gauge
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Identity(1, 1);
  Eigen::VectorXd lam_prev = Eigen::VectorXd::Ones(1);
  for (int j = 0; j < L; ++j) {
    std::array<Eigen::MatrixXcd, 2> t;
    for (int s = 0; s < 2; ++s) t[s].noalias() = c * b[j][s];
    const Eigen::Index rows = t[0].rows();
    const Eigen::Index cols = t[0].cols();
    if (j == L - 1) {
      const Eigen::VectorXd inv = lam_prev.cwiseInverse();
      for (int s = 0; s < 2; ++s) m.gamma[j][s] = inv.asDiagonal() * t[s];
      break;
    }
    Eigen::MatrixXcd stacked(2 * rows, cols);
    stacked.topRows(rows) = t[0];
    stacked.bottomRows(rows) = t[1];
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(stacked, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sv = svd.singularValues();
    Eigen::Index rank = 0;
    const double floor = 1e-14 * sv[0];
    while (rank < sv.size() && sv[rank] > floor) ++rank;
    if (rank == 0) rank = 1;
    Eigen::VectorXd lam = sv.head(rank);
    const double nrm = lam.norm();
    lam /= nrm;
    const Eigen::VectorXd inv = lam_prev.cwiseInverse();
    for (int s = 0; s < 2; ++s)
      m.gamma[j][s] = inv.asDiagonal() * svd.matrixU().block(s * rows, 0, rows, rank);
    m.lambda[j] = lam;
    c = (nrm * lam).asDiagonal() * svd.matrixV().leftCols(rank).adjoint();
    lam_prev = lam;
  }
}

Eigen::VectorXd mps_local_magnetization(const MpsState& m) {
  const int L = m.n_sites;
  Eigen::VectorXd sz(L);
  for (int j = 0; j < L; ++j) {
    const Eigen::Index chi_l = m.gamma[j][0].rows();
    const Eigen::Index chi_r = m.gamma[j][0].cols();
    const Eigen::VectorXd lam_l = (j > 0) ? m.lambda[j - 1] : Eigen::VectorXd::Ones(chi_l);
    const Eigen::VectorXd lam_r = (j < L - 1) ? m.lambda[j] : Eigen::VectorXd::Ones(chi_r);
    double val = 0.0;
    for (int s = 0; s < 2; ++s) {
      const Eigen::MatrixXcd ms = lam_l.asDiagonal() * m.gamma[j][s] * lam_r.asDiagonal();
      val += (s ? 1.0 : -1.0) * ms.squaredNorm();
    }
    sz[j] = val;
  }
  return sz;
}

}  // namespace fockflow
