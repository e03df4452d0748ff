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

#ifndef FOCKFLOW_MPS_HPP
#define FOCKFLOW_MPS_HPP

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "fockflow/sampleset.hpp"
#include "fockflow/statevector.hpp"

namespace fockflow {

/// Tensor train in Vidal canonical form: per-site tensors Gamma[j][s]
/// (chi_left x chi_right) and per-bond Schmidt vectors Lambda[b]
/// (nonnegative, descending, unit 2-norm).
struct MpsState {
  int n_sites = 0;
  int chi_max = 0;
  std::vector<std::array<Eigen::MatrixXcd, 2>> gamma;
  std::vector<Eigen::VectorXd> lambda;  // bond b sits between sites b and b+1
  std::vector<double> discarded_per_period;
  double discarded_total = 0.0;

  static MpsState product_state(const FockState& s, int chi_max);

  int bond_dim(int b) const { return static_cast<int>(lambda[b].size()); }
  int max_bond_dim() const;
};

struct MpsEvolveOptions {
  int chi_max = 256;
  /// Singular values below svd_floor_rel * largest are dropped regardless
  /// of chi_max; the kept spectrum is renormalized.
  double svd_floor_rel = 1e-14;
  /// After each period the canonical identities are checked and the gauge
  /// is rebuilt when the deviation exceeds this. Heavy truncation drifts
  /// the Vidal gauge through the inverse-Schmidt factors; the rebuild is
  /// exact (it never changes the represented state).
  double recanonicalize_tol = 1e-8;
};

/// Single-qubit gate contracted into the local tensor; bond dims unchanged.
void mps_apply_1q(MpsState& m, const Eigen::Matrix2cd& u, int site);

/// Two-site gate on adjacent sites (j, j+1) via contraction + SVD.
/// Returns the discarded weight of this update.
double mps_apply_2q(MpsState& m, const Eigen::Matrix4cd& u, int j, const MpsEvolveOptions& opts);

/// Wrap-around bond gate applied by swap-routing site L-1 next to site 0
/// and back; O(L) extra two-site updates. Returns total discarded weight.
double mps_apply_boundary_bond(MpsState& m, const Eigen::Matrix4cd& u,
                               const MpsEvolveOptions& opts);

using MpsPeriodHook = std::function<void(int, const MpsState&)>;

/// Applies `circuit` n_periods times on an open-chain MPS, accumulating the
/// discarded weight per period; hook runs after each period.
MpsState evolve_mps(const FockState& s0, const GateSequence& circuit, int n_periods,
                    const MpsEvolveOptions& opts, const MpsPeriodHook& hook = {});

/// Exact sequential bitstring sampling: each draw is distributed as
/// |<s|psi>|^2. Per-shot RNG streams derive from (seed, shot), so results
/// do not depend on scheduling. Throws if the state is not right-canonical.
SampleSet sample_bitstrings(const MpsState& m, int shots, std::uint64_t seed);

/// Contracts the MPS into a dense statevector (L <= 24 guard).
StateVector mps_to_statevector(const MpsState& m, int dense_limit = kDefaultDenseEvolveLimit);

/// F = |<ref|mps>|^2.
double mps_fidelity(const MpsState& m, const StateVector& reference);

/// Linear fit in 1/chi through the two largest-chi points, evaluated at
/// 1/chi = 0. Points are (chi, y).
double extrapolate_chi(std::vector<std::pair<int, double>> points);

/// Max deviation from the Vidal canonical identities (left and right
/// orthonormality of the lambda-dressed tensors).
double canonical_form_error(const MpsState& m);

/// Rebuilds the canonical gauge exactly: a right-to-left QR sweep followed
/// by a left-to-right SVD sweep. The represented state is unchanged up to
/// rounding; afterwards the canonical identities hold to machine precision.
void recanonicalize(MpsState& m);

/// <sigma^z_j> computed exactly from the canonical form.
Eigen::VectorXd mps_local_magnetization(const MpsState& m);

}  // namespace fockflow

#endif  // FOCKFLOW_MPS_HPP
