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

#include "fockflow/analytics.hpp"

#include <cmath>

namespace fockflow {

double butterfly_velocity(const ModelParams& p) {
  p.validate();
  const double l1 = p.lambda1, l2 = p.lambda2, f1 = p.phi1, f2 = p.phi2, J = p.J;
  const Complex inner =
      -(1.0 - std::cos(l1)) * std::sin(l2) * std::sin(f2 - f1) +
      std::sin(l1) * Complex(std::cos(l2) * (std::sin(f2) - std::sin(f1)),
                             -(std::cos(f2) - std::cos(f1)));
  const double v1 = 0.5 * std::abs(inner);
  const double beta2 =
      std::sin(l2) * std::cos(l2) *
          (std::sin(f2) * std::sin(f1) - std::cos(l1) * (1.0 + std::cos(f2) * std::cos(f1))) -
      std::sin(l1) * (std::cos(l2) * std::cos(l2) * std::cos(f1) -
                      std::sin(l2) * std::sin(l2) * std::cos(f2));
  const double gamma2 =
      -(std::sin(l1) * std::cos(l2) + std::cos(l1) * std::sin(l2) * std::cos(f2)) * std::sin(f1) -
      std::sin(l2) * std::sin(f2) * std::cos(f1);
  const double v2 = std::sin(J * (beta2 * beta2 + gamma2 * gamma2));
  return v1 + v2;
}

UnperturbedSolution unperturbed_solution(int L, double J, double h) {
  if (L < 2) throw std::invalid_argument("unperturbed_solution: L must be >= 2");
  UnperturbedSolution sol;
  sol.L = L;
  sol.J = J;
  sol.h = h;
  for (int w = 0; w <= L; w += 2) {
    for (int ell = 0; ell < 2; ++ell) {
      UnperturbedSolution::Level lvl;
      lvl.quasienergy = wrap_angle(J * (L - 2.0 * w) + kPi * ell);
      lvl.w = w;
      lvl.ell = ell;
      lvl.multiplicity = binomial(L, w);
      sol.levels.push_back(lvl);
    }
  }
  return sol;
}

Eigen::VectorXcd UnperturbedSolution::cat_state(const FockState& s, int ell) const {
  if (s.size() != L) throw std::invalid_argument("cat_state: length mismatch");
  const std::uint64_t idx = s.to_index();
  const std::uint64_t idx_bar = s.complement().to_index();
  double m = 0.0;
  for (int j = 0; j < L; ++j) m += s.bits[j] - 0.5;
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index(1) << L);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  v[static_cast<Eigen::Index>(idx)] = inv_sqrt2 * std::exp(Complex(0, -h * m));
  v[static_cast<Eigen::Index>(idx_bar)] =
      inv_sqrt2 * ((ell % 2) ? -1.0 : 1.0) * std::exp(Complex(0, h * m));
  return v;
}

ThermalReference thermal_reference(int L) {
  if (L < 2) throw std::invalid_argument("thermal_reference: L must be >= 2");
  ThermalReference ref;
  ref.pi_ft.resize(L + 1);
  ref.d_ft = Eigen::VectorXd::Zero(L + 1);
  ref.pi_gauss.resize(L + 1);
  ref.d_gauss = Eigen::VectorXd::Zero(L + 1);
  const double log2L = L * std::log(2.0);
  for (int d = 0; d <= L; ++d) {
    ref.pi_ft[d] = (L <= 50) ? binomial(L, d) / std::pow(2.0, L)
                             : std::exp(std::lgamma(L + 1.0) - std::lgamma(d + 1.0) -
                                        std::lgamma(L - d + 1.0) - log2L);
  }
  // compensate rounding so the distribution sums to 1 exactly
  ref.pi_ft /= ref.pi_ft.sum();
  for (int w = 0; w <= L; w += 2) ref.d_ft[w] = 2.0 * ref.pi_ft[w];
  ref.d_ft /= ref.d_ft.sum();
  ref.x_width = 0.5 * std::sqrt(static_cast<double>(L));

  const double norm = 1.0 / std::sqrt(kPi * L / 2.0);
  for (int d = 0; d <= L; ++d) {
    const double g = norm * std::exp(-(d - 0.5 * L) * (d - 0.5 * L) / (0.5 * L));
    ref.pi_gauss[d] = g;
    if (d % 2 == 0) ref.d_gauss[d] = 2.0 * g;
  }
  return ref;
}

SubspaceThermalReference subspace_thermal_reference(int L) {
  if (L < 4) throw std::invalid_argument("subspace_thermal_reference: L must be >= 4");
  SubspaceThermalReference ref;
  ref.x_mean = 0.5 * L;
  ref.x_width = std::sqrt((static_cast<double>(L) * L - 6.0 * L + 20.0) / 12.0);
  return ref;
}

double porter_thomas_density(double a, double hilbert_dim) {
  if (hilbert_dim <= 0) throw std::invalid_argument("porter_thomas_density: H must be positive");
  if (a < 0) throw std::invalid_argument("porter_thomas_density: a must be >= 0");
  return hilbert_dim * std::exp(-hilbert_dim * a);
}

double summed_amplitude_density(double y, int n_terms, double hilbert_dim) {
  if (hilbert_dim <= 0 || n_terms < 1)
    throw std::invalid_argument("summed_amplitude_density: need H > 0 and N >= 1");
  const double h = hilbert_dim;
  const double mu = n_terms / h;
  return h / std::sqrt(2.0 * kPi * n_terms) * std::exp(-h * h * (y - mu) * (y - mu) / (2.0 * n_terms));
}

}  // namespace fockflow
