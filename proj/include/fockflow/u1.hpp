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

#ifndef FOCKFLOW_U1_HPP
#define FOCKFLOW_U1_HPP

#include <Eigen/Dense>

#include "fockflow/statevector.hpp"

namespace fockflow {

/// High-frequency kicked XXZ drive used as the U(1)-prethermal reference:
/// U = e^{i theta_h sum sz/2} e^{-i (pi+eps) sum sx/2} e^{-i J H_XXZ} with
/// J = pi/omega and H_XXZ carrying nearest-neighbor coefficient 1 and
/// next-nearest 0.5 of (XX+YY)/2 - ZZ on a periodic ring.
struct U1Params {
  int L = 0;
  double omega = 8.0;
  double theta_h = 0.9 * kPi;
  double eps = 0.1;

  double J() const { return kPi / omega; }
  void validate() const;
};

/// H_XXZ acting on dense amplitudes: out = H * in.
void h_xxz_apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out, int L);

/// out = exp(-i t H_XXZ) * in via Hermitian Lanczos with full
/// reorthogonalization; converged to ~1e-13 (not a Trotter splitting).
void h_xxz_expmv(Eigen::VectorXcd& state, double t, int L);

/// One-period applier; evolve up to L = 18 without materializing the
/// 2^L x 2^L operator.
class U1Floquet {
 public:
  explicit U1Floquet(const U1Params& p);
  void apply_period(Eigen::VectorXcd& amps) const;
  const U1Params& params() const { return p_; }

 private:
  U1Params p_;
};

/// Dense one-period unitary, column by column. Guarded at L <= 12: the
/// matrix itself is the memory limit, evolution goes through U1Floquet.
Eigen::MatrixXcd build_u1_floquet(const U1Params& p, int dense_limit = 12);

StateVector evolve_u1(const FockState& s0, const U1Params& p, int n_periods,
                      const PeriodHook& hook = {}, int dense_limit = 18);

/// <S^z>_n = <eps_n| sum_j sz_j |eps_n> for every eigenvector column.
Eigen::VectorXd eigenstate_magnetization(const Eigen::MatrixXcd& eigenvectors, int L);

}  // namespace fockflow

#endif  // FOCKFLOW_U1_HPP
