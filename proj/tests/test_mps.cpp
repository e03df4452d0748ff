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

#include "fockflow/mps.hpp"
#include "fockflow/observables.hpp"

using namespace fockflow;

namespace {

ModelParams reference_params(int L, double lambda1) {
  return ModelParams::coupled(L, lambda1, -1.5701, 0.9708);
}

MpsState plus_product_state(int L, int chi_max) {
  FockState zeros;
  zeros.bits.assign(L, 0);
  MpsState m = MpsState::product_state(zeros, chi_max);
  Eigen::Matrix2cd h;
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  for (int j = 0; j < L; ++j) mps_apply_1q(m, h, j);
  return m;
}

}  // namespace

TEST_CASE("product states evolve exactly at lambda=0") {
  const int L = 10;
  ModelParams p = reference_params(L, 0.0);
  const FockState s0 = make_initial_state(InitialStateKind::afm, L, 0);
  MpsEvolveOptions opts;
  opts.chi_max = 1;  // no entanglement is ever generated
  int periods_seen = 0;
  const MpsState m =
      evolve_mps(s0, build_floquet_circuit(p), 3, opts, [&](int n, const MpsState& state) {
        CHECK(state.max_bond_dim() == 1);
        const StateVector dense = mps_to_statevector(state);
        const FockState target = (n % 2 == 0) ? s0 : s0.complement();
        CHECK(std::abs(std::abs(dense.amps[static_cast<Eigen::Index>(target.to_index())]) - 1.0) <
              1e-10);
        ++periods_seen;
      });
  CHECK(periods_seen == 4);
  CHECK(m.discarded_total < 1e-14);
}

TEST_CASE("saturating bond dimension reproduces dense evolution exactly") {
  const int L = 8;
  ModelParams p = reference_params(L, 0.3);
  const FockState s0 = make_initial_state(InitialStateKind::one_fm, L, 0);
  const GateSequence circuit = build_floquet_circuit(p);
  MpsEvolveOptions opts;
  opts.chi_max = 16;  // 2^{L/2}, the exact Schmidt rank bound
  const StateVector dense = evolve_statevector(s0, circuit, 10);
  const MpsState m = evolve_mps(s0, circuit, 10, opts);
  CHECK(mps_fidelity(m, dense) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(canonical_form_error(m) < 1e-8);
}

TEST_CASE("swap-routed boundary bond equals the dense wrap gate") {
  const int L = 10;
  // entangle an open patch first so the routing acts on a non-product state
  RngStream rng = RngStream::derive(77, 0);
  FockState s0;
  s0.bits.resize(L);
  for (auto& b : s0.bits) b = rng.next_bit() ? 1 : 0;
  MpsEvolveOptions opts;
  opts.chi_max = 64;
  MpsState m = MpsState::product_state(s0, opts.chi_max);
  StateVector dense = StateVector::basis_state(s0);
  const Eigen::Matrix4cd entangler = ising_bond_gate(0.8, 0.9);
  for (int j = 0; j + 1 < L; j += 2) {
    mps_apply_2q(m, entangler, j, opts);
    apply_gate_2q(dense.amps, entangler, j, j + 1);
  }
  const Eigen::Matrix4cd wrap = ising_bond_gate(1.0, 0.4);
  mps_apply_boundary_bond(m, wrap, opts);
  apply_gate_2q(dense.amps, wrap, L - 1, 0);
  const StateVector routed = mps_to_statevector(m);
  const Complex overlap = dense.amps.dot(routed.amps);
  CHECK(std::abs(overlap) > 1.0 - 1e-9);
  CHECK((routed.amps - overlap / std::abs(overlap) * dense.amps).norm() < 1e-9);
}

TEST_CASE("schmidt vectors stay sorted, normalized, and canonical") {
  const int L = 12;
  ModelParams p = reference_params(L, 0.4);
  const FockState s0 = make_initial_state(InitialStateKind::one_fm, L, 0);
  MpsEvolveOptions opts;
  opts.chi_max = 32;
  const MpsState m = evolve_mps(s0, build_floquet_circuit(p), 6, opts);
  for (const auto& lam : m.lambda) {
    CHECK(std::abs(lam.squaredNorm() - 1.0) < 1e-10);
    for (Eigen::Index i = 0; i + 1 < lam.size(); ++i) CHECK(lam[i] >= lam[i + 1] - 1e-14);
    CHECK(lam.minCoeff() >= 0.0);
  }
  CHECK(canonical_form_error(m) < 1e-8);
}

TEST_CASE("gauge rebuild restores the canonical identities exactly") {
  // heavy truncation drifts the Vidal gauge through the inverse-Schmidt
  // factors; the rebuild must fix the identities without touching the state
  const int L = 12;
  ModelParams p = reference_params(L, 0.4);
  const FockState s0 = make_initial_state(InitialStateKind::one_fm, L, 0);
  MpsEvolveOptions opts;
  opts.chi_max = 8;
  opts.recanonicalize_tol = 1e100;  // let the drift accumulate
  MpsState m = evolve_mps(s0, build_floquet_circuit(p), 10, opts);
  CHECK(canonical_form_error(m) > 1e-6);

  const StateVector before = mps_to_statevector(m);
  recanonicalize(m);
  CHECK(canonical_form_error(m) < 1e-10);
  const StateVector after = mps_to_statevector(m);
  CHECK((before.amps - after.amps).cwiseAbs().maxCoeff() < 1e-10);

  // with the default policy the evolver keeps the invariant itself
  MpsEvolveOptions def;
  def.chi_max = 8;
  const MpsState auto_fixed = evolve_mps(s0, build_floquet_circuit(p), 10, def);
  CHECK(canonical_form_error(auto_fixed) < 1e-8);
}

TEST_CASE("discarded weight bounds the fidelity loss") {
  const int L = 12;
  ModelParams p = reference_params(L, 0.4);
  const FockState s0 = make_initial_state(InitialStateKind::one_fm, L, 0);
  const GateSequence circuit = build_floquet_circuit(p);
  MpsEvolveOptions opts;
  opts.chi_max = 32;  // mild but nonzero truncation
  const MpsState m = evolve_mps(s0, circuit, 10, opts);
  const StateVector dense = evolve_statevector(s0, circuit, 10);
  const double f = mps_fidelity(m, dense);
  CHECK(m.discarded_total > 1e-4);  // truncation actually happened
  CHECK(1.0 - m.discarded_total >= f - 1e-3);
}

TEST_CASE("bitstring sampling") {
  const int L = 8;
  const FockState s0 = make_initial_state(InitialStateKind::two_fm, L, 0);
  const MpsState fock = MpsState::product_state(s0, 4);
  const SampleSet fixed = sample_bitstrings(fock, 64, 5);
  for (const auto& s : fixed.samples) CHECK(s == s0);

  // fair-coin qubits from |+>^L
  const MpsState plus = plus_product_state(L, 4);
  const SampleSet coins = sample_bitstrings(plus, 10000, 17);
  for (int j = 0; j < L; ++j) {
    double mean = 0.0;
    for (const auto& s : coins.samples) mean += s.bits[j];
    mean /= coins.shots();
    CHECK(mean > 0.47);
    CHECK(mean < 0.53);
  }

  // deterministic under a fixed seed
  const SampleSet again = sample_bitstrings(plus, 100, 17);
  const SampleSet other = sample_bitstrings(plus, 100, 18);
  for (int k = 0; k < 100; ++k) CHECK(again.samples[k] == coins.samples[k]);
  bool any_diff = false;
  for (int k = 0; k < 100; ++k) any_diff = any_diff || !(other.samples[k] == again.samples[k]);
  CHECK(any_diff);

  // a corrupted tensor breaks right-orthonormality and must be rejected
  MpsState broken = plus_product_state(L, 4);
  broken.gamma[3][0] *= 1.5;
  CHECK_THROWS_AS(sample_bitstrings(broken, 4, 1), std::runtime_error);
}

TEST_CASE("sampled observables track exact values at L=14") {
  const int L = 14;
  ModelParams p = reference_params(L, 0.4);
  const FockState s0 = make_initial_state(InitialStateKind::one_fm, L, 0);
  const GateSequence circuit = build_floquet_circuit(p);
  MpsEvolveOptions opts;
  opts.chi_max = 128;  // = 2^{L/2}, exact
  const MpsState m = evolve_mps(s0, circuit, 8, opts);
  const StateVector dense = evolve_statevector(s0, circuit, 8);
  REQUIRE(mps_fidelity(m, dense) > 1.0 - 1e-9);

  const int shots = 10000;
  const SampleSet samples = sample_bitstrings(m, shots, 23);
  const DwStatistics exact = dw_statistics(dense, Boundary::periodic);
  const DwStatistics est = dw_statistics(samples, Boundary::periodic);
  // binomial 3-sigma bound on the mean of w
  double var_w = 0.0;
  for (int w = 0; w <= L; ++w)
    var_w += (w - exact.w_mean) * (w - exact.w_mean) * exact.d.p[w];
  CHECK(std::abs(est.w_mean - exact.w_mean) <= 3.0 * std::sqrt(var_w / shots) + 1e-9);

  const Eigen::VectorXd sz_exact = local_magnetization(dense);
  const Eigen::VectorXd sz_mps = mps_local_magnetization(m);
  CHECK((sz_exact - sz_mps).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("fidelity endpoints") {
  const FockState a = make_initial_state(InitialStateKind::afm, 8, 0);
  const FockState b = make_initial_state(InitialStateKind::fm, 8, 0);
  const MpsState ma = MpsState::product_state(a, 2);
  CHECK(mps_fidelity(ma, StateVector::basis_state(a)) == doctest::Approx(1.0));
  CHECK(mps_fidelity(ma, StateVector::basis_state(b)) == doctest::Approx(0.0));
  StateVector wrong;
  wrong.n_qubits = 6;
  wrong.amps = Eigen::VectorXcd::Zero(64);
  CHECK_THROWS_AS(mps_fidelity(ma, wrong), std::invalid_argument);
}

TEST_CASE("chi extrapolation") {
  CHECK(extrapolate_chi({{128, 0.9}, {256, 0.95}}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(extrapolate_chi({{64, 0.37}, {128, 0.37}}) == doctest::Approx(0.37).epsilon(1e-12));
  // only the two largest chi define the line
  CHECK(extrapolate_chi({{8, -4.0}, {128, 0.9}, {256, 0.95}}) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(extrapolate_chi({{64, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(extrapolate_chi({{64, 1.0}, {64, 2.0}}), std::invalid_argument);
}

TEST_CASE("chi extrapolation lands on the dense value at L=16") {
  const int L = 16;
  ModelParams p = reference_params(L, 0.3);
  const FockState s0 = make_initial_state(InitialStateKind::one_fm, L, 0);
  const GateSequence circuit = build_floquet_circuit(p);
  const int n_periods = 20;

  double exact = 0.0;
  evolve_statevector(s0, circuit, n_periods, [&](int n, const StateVector& psi) {
    if (n == n_periods) exact = fock_statistics(psi, s0).x_mean / L;
  });

  std::vector<std::pair<int, double>> points;
  for (int chi : {8, 16, 32, 64}) {
    MpsEvolveOptions opts;
    opts.chi_max = chi;
    const MpsState m = evolve_mps(s0, circuit, n_periods, opts);
    points.push_back({chi, fock_statistics(mps_to_statevector(m), s0).x_mean / L});
  }
  CHECK(std::abs(extrapolate_chi(points) - exact) < 1e-2);
}

TEST_CASE("thermal-regime sampling matches the dense oracle at L=24") {
  // the slow cross-check: chi saturates at 256 in the thermal regime, yet
  // the sampled wave packet stays within TV < 0.05 of the exact one at 5T
  const int L = 24, shots = 10000;
  ModelParams p = reference_params(L, 1.2);
  const FockState s0 = make_initial_state(InitialStateKind::one_fm, L, 0);
  const GateSequence circuit = build_floquet_circuit(p);
  const StateVector dense = evolve_statevector(s0, circuit, 5);
  MpsEvolveOptions opts;
  opts.chi_max = 256;
  const MpsState m = evolve_mps(s0, circuit, 5, opts);
  const SampleSet samples = sample_bitstrings(m, shots, 31);
  const FockStatistics est = fock_statistics(samples, s0);
  const FockStatistics exact = fock_statistics(dense, s0);
  const double tv = 0.5 * (est.pi.p - exact.pi.p).cwiseAbs().sum();
  CHECK(tv < 0.05);
}

TEST_CASE("rejects bad arguments") {
  const FockState s0 = make_initial_state(InitialStateKind::afm, 6, 0);
  CHECK_THROWS_AS(MpsState::product_state(s0, 0), std::invalid_argument);
  const MpsState m = MpsState::product_state(s0, 4);
  CHECK_THROWS_AS(sample_bitstrings(m, 0, 1), std::invalid_argument);
  ModelParams p = reference_params(8, 0.1);
  MpsEvolveOptions opts;
  opts.chi_max = 0;
  CHECK_THROWS_AS(evolve_mps(make_initial_state(InitialStateKind::afm, 8, 0),
                             build_floquet_circuit(p), 1, opts),
                  std::invalid_argument);
}
