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

#include "fockflow/common.hpp"

#include <cmath>

namespace fockflow {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  if (n <= 50) {
    double c = 1.0;
    for (int i = 0; i < k; ++i) c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
    return c;
  }
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

RngStream RngStream::derive(std::uint64_t seed, std::uint64_t stream_id) {
  // Mix seed and stream id through two splitmix rounds so that nearby
  // (seed, id) pairs land in unrelated parts of the sequence.
  RngStream r(seed);
  std::uint64_t a = r.next_u64();
  RngStream s(stream_id ^ 0xD1B54A32D192ED03ull);
  std::uint64_t b = s.next_u64();
  return RngStream(a ^ (b + 0x9E3779B97F4A7C15ull * (stream_id + 1)));
}

std::uint64_t RngStream::next_below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("next_below: n must be positive");
  // rejection sampling keeps the draw exactly uniform
  std::uint64_t limit = ~0ull - (~0ull % n);
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % n;
}

}  // namespace fockflow
