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

#ifndef FOCKFLOW_SAMPLESET_HPP
#define FOCKFLOW_SAMPLESET_HPP

#include <cstdint>
#include <vector>

#include "fockflow/model.hpp"

namespace fockflow {

/// Bitstring draws from a quantum state, with their seed for reproducibility.
struct SampleSet {
  std::vector<FockState> samples;
  std::uint64_t seed = 0;

  int shots() const { return static_cast<int>(samples.size()); }
  int n_qubits() const { return samples.empty() ? 0 : samples.front().size(); }

  void validate() const {
    if (samples.empty()) throw std::invalid_argument("SampleSet: empty");
    const int L = samples.front().size();
    for (const auto& s : samples)
      if (s.size() != L) throw std::invalid_argument("SampleSet: inconsistent lengths");
  }
};

}  // namespace fockflow

#endif  // FOCKFLOW_SAMPLESET_HPP
