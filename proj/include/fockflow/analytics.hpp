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

#ifndef FOCKFLOW_ANALYTICS_HPP
#define FOCKFLOW_ANALYTICS_HPP

#include <vector>

#include <Eigen/Dense>

#include "fockflow/model.hpp"

namespace fockflow {

/// Perturbative light-cone speed from local domain wall conservation,
/// v_B = v1 + v2. The first-order term keeps its printed complex-modulus
/// form on purpose; do not "simplify" it algebraically.
double butterfly_velocity(const ModelParams& p);

/// Closed-form solution of the unperturbed drive (lambda1 = lambda2 = 0).
struct UnperturbedSolution {
  /// Quasienergy E(l, w) = J(L - 2w) + pi*l folded to (-pi, pi], with
  /// multiplicity C(L, w), for even w = 0..L and l = 0, 1.
  struct Level {
    double quasienergy;
    int w;
    int ell;
    double multiplicity;
  };
  std::vector<Level> levels;
  int L;
  double J;
  double h;  // (phi1 + phi2)/2

  /// Cat eigenstate (e^{-i h m}|s> + (-1)^l e^{+i h m}|s_bar>)/sqrt(2) with
  /// m = sum_j (s^j - 1/2). An exact eigenvector of the lambda = 0 circuit.
  Eigen::VectorXcd cat_state(const FockState& s, int ell) const;
};

UnperturbedSolution unperturbed_solution(int L, double J, double h);

/// Fully thermalized wave-packet references.
struct ThermalReference {
  Eigen::VectorXd pi_ft;   // Pi_ft(d) = C(L,d)/2^L, d = 0..L
  Eigen::VectorXd d_ft;    // D_ft(w) = 2 C(L,w)/2^L on even w, else 0
  double x_width;          // sqrt(L)/2
  Eigen::VectorXd pi_gauss;  // large-L Gaussian asymptote of pi_ft
  Eigen::VectorXd d_gauss;   // large-L Gaussian asymptote of d_ft
};

ThermalReference thermal_reference(int L);

/// Uniform occupation of one small-w sector after the light cone has wrapped.
struct SubspaceThermalReference {
  double x_mean;   // L/2
  double x_width;  // sqrt((L^2 - 6L + 20)/12)
};

SubspaceThermalReference subspace_thermal_reference(int L);

/// Porter-Thomas density of basis probabilities for an ergodic pure state,
/// P(a) = H exp(-H a) with H = 2^L.
double porter_thomas_density(double a, double hilbert_dim);

/// CLT density for a sum over N Porter-Thomas variables,
/// P(y; N) = H/sqrt(2 pi N) exp(-H^2 (y - N/H)^2 / (2N)).
double summed_amplitude_density(double y, int n_terms, double hilbert_dim);

}  // namespace fockflow

#endif  // FOCKFLOW_ANALYTICS_HPP
