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

#ifndef FOCKFLOW_COMMON_HPP
#define FOCKFLOW_COMMON_HPP

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace fockflow {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Fold an angle into (-pi, pi].
inline double wrap_angle(double theta) {
  double t = std::remainder(theta, 2.0 * kPi);
  if (t <= -kPi) t += 2.0 * kPi;
  return t;
}

/// Circular distance between two phases, in [0, pi].
inline double circular_distance(double a, double b) {
  return std::abs(wrap_angle(a - b));
}

inline int popcount64(std::uint64_t x) { return std::popcount(x); }

/// Rotate the low `nbits` bits of `x` right by one position.
inline std::uint64_t ror_bits(std::uint64_t x, int nbits) {
  return ((x >> 1) | ((x & 1ull) << (nbits - 1))) & ((nbits == 64) ? ~0ull : ((1ull << nbits) - 1));
}

/// Binomial coefficient as a double. Exact incremental products up to L=50,
/// lgamma beyond that to stay clear of overflow at large L.
double binomial(int n, int k);

// Deterministic splittable random stream. splitmix64 steps; streams derived
// from (seed, stream_id) are statistically independent and reproducible
// across platforms, unlike std:: distributions.
class RngStream {
 public:
  RngStream() : state_(0x9E3779B97F4A7C15ull) {}
  static RngStream derive(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in [0, hi).
  double next_uniform(double hi) { return next_double() * hi; }

  bool next_bit() { return (next_u64() >> 63) != 0; }

  /// Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n);

 private:
  explicit RngStream(std::uint64_t s) : state_(s) {}
  std::uint64_t state_;
};

}  // namespace fockflow

#endif  // FOCKFLOW_COMMON_HPP
