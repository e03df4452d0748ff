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

#ifndef FOCKFLOW_OBSERVABLES_HPP
#define FOCKFLOW_OBSERVABLES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fockflow/sampleset.hpp"
#include "fockflow/statevector.hpp"

namespace fockflow {

/// Per-period observable records for one realization.
struct TimeSeries {
  std::vector<int> periods;
  std::map<std::string, std::vector<double>> scalars;
  std::map<std::string, std::vector<Eigen::VectorXd>> vectors;
  std::string label;
  std::uint64_t seed = 0;

  void append_period(int n);
  void push_scalar(const std::string& name, double v);
  void push_vector(const std::string& name, Eigen::VectorXd v);
  const std::vector<double>& scalar(const std::string& name) const;
  const std::vector<Eigen::VectorXd>& vector(const std::string& name) const;
  void check_consistent() const;
};

/// Probability distribution over an integer support (Hamming distance d or
/// domain wall number w).
struct Distribution {
  Eigen::VectorXd p;  // index = support label

  double mean() const;
  double stddev() const;
  void check_normalized(double tol = 1e-9) const;
};

struct FockStatistics {
  Distribution pi;  // Pi(d), d = 0..L
  double x_mean = 0.0;
  double x_width = 0.0;  // Delta x
};

struct DwStatistics {
  Distribution d;  // D(w), w = 0..L
  double w_mean = 0.0;
};

FockStatistics fock_statistics(const StateVector& state, const FockState& s0);
FockStatistics fock_statistics(const SampleSet& samples, const FockState& s0);
DwStatistics dw_statistics(const StateVector& state, Boundary boundary);
DwStatistics dw_statistics(const SampleSet& samples, Boundary boundary);

struct CorrelatorData {
  Eigen::MatrixXd c;        // C_jk = <sz_j sz_k>, C_jj = 1
  Eigen::VectorXd a;        // A_j = (1/(L-1)) sum_{k!=j} |C_jk|
  double chi_ea = 0.0;      // (1/(L-1)) sum_{j!=k} C_jk^2
};

CorrelatorData correlators(const StateVector& state);
/// Sample estimate of the same quantities (used by the MPS engine).
CorrelatorData correlators(const SampleSet& samples);

/// K(t) from the magnetization profile, using sz_j|s0> = (2 s0^j - 1)|s0>.
double autocorrelator(const Eigen::VectorXd& sz, const FockState& s0);

enum class SectorPartition { by_w, by_nup };

/// Participation entropy S[sector] = -sum_{s in sector} p_s ln p_s with
/// p_s = |<s|psi>|^2 (no in-sector renormalization). Index = sector label
/// (w or N_up).
Eigen::VectorXd participation_entropy(const StateVector& state, SectorPartition partition,
                                      Boundary boundary = Boundary::periodic);

/// Largest amplitude of the discrete spectrum of the mean-subtracted series
/// over the inclusive window [n1, n2], cosine convention: a pure cosine of
/// amplitude b at a grid frequency returns b. The grid always contains the
/// subharmonic frequency pi; DC is excluded by construction.
double fourier_peak(const std::vector<double>& series, int n1, int n2);

/// First period with |K| below threshold; nullopt when the series never
/// crosses within its horizon.
std::optional<int> dtc_lifetime(const std::vector<double>& k_series, double threshold = 0.10);

}  // namespace fockflow

#endif  // FOCKFLOW_OBSERVABLES_HPP
