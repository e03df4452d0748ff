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

#include "fockflow/u1.hpp"

#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>

namespace fockflow {

void U1Params::validate() const {
  if (L < 4) throw std::invalid_argument("U1Params: L must be >= 4");
  if (omega <= 0) throw std::invalid_argument("U1Params: omega must be positive");
  if (!std::isfinite(theta_h) || !std::isfinite(eps))
    throw std::invalid_argument("U1Params: angles must be finite");
}

void h_xxz_apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out, int L) {
  const Eigen::Index dim = Eigen::Index(1) << L;
  if (in.size() != dim) throw std::invalid_argument("h_xxz_apply: dimension mismatch");
  out.setZero(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Complex amp = in[i];
    if (amp == 0.0) continue;
    double diag = 0.0;
    for (int j = 0; j < L; ++j) {
      const int zj = ((i >> j) & 1) ? 1 : -1;
      for (const auto& [k, coef] : {std::pair<int, double>{(j + 1) % L, 1.0},
                                    std::pair<int, double>{(j + 2) % L, 0.5}}) {
        const int zk = ((i >> k) & 1) ? 1 : -1;
        diag += -coef * zj * zk;  // -ZZ term
        if (zj != zk) {
          // (XX+YY)/2 exchanges anti-parallel pairs with amplitude 1
          const Eigen::Index flipped = i ^ (Eigen::Index(1) << j) ^ (Eigen::Index(1) << k);
          out[flipped] += coef * amp;
        }
      }
    }
    out[i] += diag * amp;
  }
}

void h_xxz_expmv(Eigen::VectorXcd& state, double t, int L) {
  const double nrm0 = state.norm();
  if (nrm0 == 0.0) return;

  const int m_max = 120;
  const double tol = 1e-13;
  std::vector<Eigen::VectorXcd> v;
  v.reserve(m_max + 1);
  v.push_back(state / nrm0);
  std::vector<double> alpha, beta;

  Eigen::VectorXcd w;
  int m = 0;
  Eigen::VectorXcd combo;
  while (m < m_max) {
    h_xxz_apply(v[m], w, L);
    if (m > 0) w -= beta[m - 1] * v[m - 1];
    const double a = w.dot(v[m]).real();
    alpha.push_back(a);
    w -= a * v[m];
    // full reorthogonalization keeps the basis clean over long Krylov runs
    for (const auto& u : v) w -= u.dot(w) * u;
    const double b = w.norm();
    ++m;

    // exp(-i t T_m) e1 through the tridiagonal eigensystem
    Eigen::MatrixXd tm = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      tm(i, i) = alpha[i];
      if (i + 1 < m) tm(i, i + 1) = tm(i + 1, i) = beta.size() > static_cast<std::size_t>(i)
                                                       ? beta[i]
                                                       : 0.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tm);
    Eigen::VectorXcd phases(m);
    for (int i = 0; i < m; ++i) phases[i] = std::exp(Complex(0, -t * es.eigenvalues()[i]));
    Eigen::VectorXcd y =
        es.eigenvectors().cast<Complex>() *
        (phases.array() * es.eigenvectors().row(0).transpose().cast<Complex>().array()).matrix();

    const double err = (b < 1e-14) ? 0.0 : b * std::abs(t) * std::abs(y[m - 1]);
    if (err < tol || b < 1e-14 || m == m_max) {
      combo = Eigen::VectorXcd::Zero(state.size());
      for (int i = 0; i < m; ++i) combo += y[i] * v[i];
      break;
    }
    beta.push_back(b);
    v.push_back(w / b);
  }
  state = nrm0 * combo;
}

U1Floquet::U1Floquet(const U1Params& p) : p_(p) { p_.validate(); }

void U1Floquet::apply_period(Eigen::VectorXcd& amps) const {
  const int L = p_.L;
  h_xxz_expmv(amps, p_.J(), L);
  const double half = 0.5 * (kPi + p_.eps);
  Eigen::Matrix2cd kick;
  kick << std::cos(half), Complex(0, -std::sin(half)), Complex(0, -std::sin(half)),
      std::cos(half);
  for (int q = 0; q < L; ++q) apply_gate_1q(amps, kick, q);
  Eigen::Matrix2cd zphase = Eigen::Matrix2cd::Zero();
  zphase(0, 0) = std::exp(Complex(0, -0.5 * p_.theta_h));
  zphase(1, 1) = std::exp(Complex(0, 0.5 * p_.theta_h));
  for (int q = 0; q < L; ++q) apply_gate_1q(amps, zphase, q);
}

Eigen::MatrixXcd build_u1_floquet(const U1Params& p, int dense_limit) {
  p.validate();
  if (p.L > dense_limit)
    throw std::invalid_argument("build_u1_floquet: L exceeds dense matrix limit");
  const U1Floquet op(p);
  const Eigen::Index dim = Eigen::Index(1) << p.L;
  Eigen::MatrixXcd u(dim, dim);
  Eigen::VectorXcd col(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    col.setZero();
    col[k] = 1.0;
    op.apply_period(col);
    u.col(k) = col;
  }
  return u;
}

StateVector evolve_u1(const FockState& s0, const U1Params& p, int n_periods,
                      const PeriodHook& hook, int dense_limit) {
  p.validate();
  if (s0.size() != p.L) throw std::invalid_argument("evolve_u1: state length mismatch");
  if (p.L > dense_limit) throw std::invalid_argument("evolve_u1: L exceeds dense limit");
  const U1Floquet op(p);
  StateVector psi = StateVector::basis_state(s0);
  if (hook) hook(0, psi);
  for (int n = 1; n <= n_periods; ++n) {
    op.apply_period(psi.amps);
    const double nrm = psi.amps.norm();
    if (std::abs(nrm - 1.0) > 1e-9)
      throw std::runtime_error("evolve_u1: norm drift, exponential not converged?");
    psi.amps /= nrm;
    if (hook) hook(n, psi);
  }
  return psi;
}

Eigen::VectorXd eigenstate_magnetization(const Eigen::MatrixXcd& eigenvectors, int L) {
  const Eigen::Index dim = eigenvectors.rows();
  Eigen::VectorXd out(eigenvectors.cols());
  for (Eigen::Index n = 0; n < eigenvectors.cols(); ++n) {
    double acc = 0.0;
    for (Eigen::Index s = 0; s < dim; ++s) {
      const int sz = 2 * popcount64(static_cast<std::uint64_t>(s)) - L;
      acc += sz * std::norm(eigenvectors(s, n));
    }
    out[n] = acc;
  }
  return out;
}

}  // namespace fockflow
