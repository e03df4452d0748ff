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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fockflow/analytics.hpp"
#include "fockflow/observables.hpp"
#include "fockflow/statevector.hpp"

using namespace fockflow;

namespace {

// circular greedy matching between two phase multisets, as complex points
double spectrum_multiset_distance(const Eigen::VectorXd& a, const std::vector<double>& b) {
  REQUIRE(static_cast<std::size_t>(a.size()) == b.size());
  std::vector<bool> used(b.size(), false);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const Complex za = std::exp(Complex(0, a[i]));
    double best = 1e9;
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(za - std::exp(Complex(0, b[j])));
      if (d < best) {
        best = d;
        best_j = j;
      }
    }
    used[best_j] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

ModelParams reference_params(int L, double lambda1) {
  return ModelParams::coupled(L, lambda1, -1.5701, 0.9708);
}

}  // namespace

TEST_CASE("unperturbed evolution alternates between s0 and its complement") {
  ModelParams p = reference_params(10, 0.0);
  const FockState s0 = make_initial_state(InitialStateKind::afm, 10, 0);
  std::vector<double> pi0, piL, k;
  evolve_statevector(s0, build_floquet_circuit(p), 4, [&](int, const StateVector& psi) {
    const FockStatistics fs = fock_statistics(psi, s0);
    pi0.push_back(fs.pi.p[0]);
    piL.push_back(fs.pi.p[10]);
    k.push_back(autocorrelator(local_magnetization(psi), s0));
  });
  for (int n = 0; n <= 4; ++n) {
    const double expect0 = (n % 2 == 0) ? 1.0 : 0.0;
    CHECK(std::abs(pi0[n] - expect0) < 1e-10);
    CHECK(std::abs(piL[n] - (1.0 - expect0)) < 1e-10);
    CHECK(k[n] == doctest::Approx((n % 2 == 0) ? 1.0 : -1.0).epsilon(1e-12));
  }
}

TEST_CASE("evolution rejects oversize systems and bad circuits") {
  ModelParams p = reference_params(8, 0.1);
  const FockState s0 = make_initial_state(InitialStateKind::afm, 8, 0);
  CHECK_THROWS_AS(evolve_statevector(s0, build_floquet_circuit(p), 1, {}, /*dense_limit=*/6),
                  std::invalid_argument);

  GateSequence broken = build_floquet_circuit(p);
  broken.layers[0].gates[0].u *= 1.01;  // norm-growing gate
  CHECK_THROWS_AS(evolve_statevector(s0, broken, 1), std::runtime_error);
}

TEST_CASE("lambda=0 quasienergy multiset matches the closed form") {
  for (int L : {4, 6}) {
    ModelParams p = reference_params(L, 0.0);
    const EigData eig = floquet_eigensystem(p);
    std::vector<double> expected;
    for (int w = 0; w <= L; w += 2)
      for (int ell = 0; ell < 2; ++ell) {
        const double e = p.J * (L - 2.0 * w) + kPi * ell;
        for (int m = 0; m < static_cast<int>(binomial(L, w) + 0.5); ++m) expected.push_back(e);
      }
    CHECK(spectrum_multiset_distance(eig.quasienergies, expected) < 1e-9);
    // every <w>_n is an exact even integer at lambda = 0
    for (Eigen::Index n = 0; n < eig.w_mean.size(); ++n) {
      const double nearest = 2.0 * std::round(eig.w_mean[n] / 2.0);
      CHECK(std::abs(eig.w_mean[n] - nearest) < 1e-8);
    }
  }
}

TEST_CASE("spectral pi-pairing at lambda=0") {
  ModelParams p = reference_params(6, 0.0);
  const EigData eig = floquet_eigensystem(p);
  std::vector<double> shifted;
  for (Eigen::Index n = 0; n < eig.quasienergies.size(); ++n)
    shifted.push_back(eig.quasienergies[n] + kPi);
  CHECK(spectrum_multiset_distance(eig.quasienergies, shifted) < 1e-9);
}

TEST_CASE("eigendecomposition reconstructs the unitary") {
  ModelParams p = reference_params(6, 0.37);
  const Eigen::MatrixXcd u = assemble_unitary(build_floquet_circuit(p));
  CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <
        1e-10);
  const EigData eig = floquet_eigensystem(p);
  Eigen::VectorXcd phases(eig.quasienergies.size());
  for (Eigen::Index n = 0; n < phases.size(); ++n)
    phases[n] = std::exp(Complex(0, eig.quasienergies[n]));
  const Eigen::MatrixXcd rebuilt =
      eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
  CHECK((u - rebuilt).cwiseAbs().maxCoeff() < 1e-7);
  // orthonormal eigenbasis even through degeneracies
  CHECK((eig.eigenvectors.adjoint() * eig.eigenvectors -
         Eigen::MatrixXcd::Identity(u.rows(), u.cols()))
            .cwiseAbs()
            .maxCoeff() < 1e-8);
}

TEST_CASE("two lambda=0 periods with no longitudinal field restore the state") {
  ModelParams p;
  p.L = 8;
  p.J = 0.9;
  const FockState s0 = make_initial_state(InitialStateKind::one_fm, 8, 0);
  const StateVector psi = evolve_statevector(s0, build_floquet_circuit(p), 2);
  CHECK(std::abs(std::abs(psi.amps[static_cast<Eigen::Index>(s0.to_index())]) - 1.0) < 1e-12);
}

TEST_CASE("eigenstate DW clustering in FSP vs thermal regimes at L=10") {
  const EigData fsp = floquet_eigensystem(reference_params(10, 0.1));
  int near_even = 0;
  for (Eigen::Index n = 0; n < fsp.w_mean.size(); ++n) {
    const double nearest = 2.0 * std::round(fsp.w_mean[n] / 2.0);
    if (std::abs(fsp.w_mean[n] - nearest) < 0.2) ++near_even;
  }
  CHECK(near_even >= static_cast<int>(0.95 * fsp.w_mean.size()));

  const EigData thermal = floquet_eigensystem(reference_params(10, 1.2));
  const double mean = thermal.w_mean.mean();
  const double stddev = std::sqrt((thermal.w_mean.array() - mean).square().mean());
  CHECK(std::abs(mean - 5.0) < 0.5);
  CHECK(stddev < 1.0);
}

TEST_CASE("fock hopping network edges") {
  ModelParams p = reference_params(6, 0.0);
  // unperturbed drive without the pi pulse is diagonal in the Fock basis
  for (const auto& e : fock_hopping_matrix(p, /*drop_pi_pulse=*/true, 0.01))
    CHECK(e.s1 == e.s2);

  const auto sparse = fock_hopping_matrix(reference_params(6, 0.1), true, 0.04);
  const auto dense = fock_hopping_matrix(reference_params(6, 1.2), true, 0.04);
  CHECK(dense.size() > 3 * sparse.size());

  const auto top = fock_hopping_matrix(reference_params(4, 0.3), true, 1.0);
  CHECK(!top.empty());
  double max_strength = 0.0;
  for (const auto& e : top) max_strength = std::max(max_strength, e.strength);
  for (const auto& e : top) CHECK(e.strength == doctest::Approx(max_strength).epsilon(1e-12));

  CHECK_THROWS_AS(fock_hopping_matrix(reference_params(12, 0.1), true, 0.04),
                  std::invalid_argument);
}

TEST_CASE("local magnetization of simple states") {
  const FockState s = make_initial_state(InitialStateKind::one_fm, 8, 0);
  const StateVector psi = StateVector::basis_state(s);
  const Eigen::VectorXd sz = local_magnetization(psi);
  for (int j = 0; j < 8; ++j) CHECK(sz[j] == doctest::Approx(2.0 * s.bits[j] - 1.0));

  StateVector uniform;
  uniform.n_qubits = 6;
  uniform.amps = Eigen::VectorXcd::Constant(64, 1.0 / 8.0);
  CHECK(local_magnetization(uniform).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("statevector sampling") {
  const FockState s = make_initial_state(InitialStateKind::afm, 10, 0);
  const StateVector psi = StateVector::basis_state(s);
  const auto samples = sample_statevector(psi, 50, 42);
  for (const auto& draw : samples) CHECK(draw == s);

  StateVector uniform;
  uniform.n_qubits = 4;
  uniform.amps = Eigen::VectorXcd::Constant(16, 0.25);
  const auto a = sample_statevector(uniform, 400, 7);
  const auto b = sample_statevector(uniform, 400, 7);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("light cone starts at the neighbors of the flipped qubit") {
  // mini version of the magnetization light-cone picture
  const int L = 12;
  ModelParams p = reference_params(L, 0.1);
  const FockState s0 = make_initial_state(InitialStateKind::one_fm, L, 0);
  const int flipped = L / 2 - 1;
  Eigen::VectorXd dev = Eigen::VectorXd::Zero(L);
  evolve_statevector(s0, build_floquet_circuit(p), 10, [&](int n, const StateVector& psi) {
    if (n != 10) return;
    const Eigen::VectorXd sz = local_magnetization(psi);
    for (int j = 0; j < L; ++j) dev[j] = 1.0 - std::abs(sz[j]);
  });
  const double near = std::max(dev[flipped - 1], dev[flipped + 1]);
  const double far = std::max(dev[(flipped + 5) % L], dev[(flipped + 7) % L]);
  CHECK(near > 5.0 * far);
}
