// Copyright 2026 The mcpref Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>

#include "core/types.hpp"

namespace mcpref {

/// Stafford mix13 finalizer, the output scrambler of SplitMix64. Used both
/// inside the generator and to derive independent per-trial seeds.
inline uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Trial seeds are seed xor index pushed through the mixer, so any cell of a
/// sweep can be replayed in isolation regardless of scheduling.
inline uint64_t derive_seed(uint64_t seed, uint64_t index) {
  return mix64(seed ^ mix64(index + 0x9E3779B97F4A7C15ULL));
}

/// SplitMix64: counter-based generator; the state is a Weyl sequence and each
/// output is mix64 of the counter.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound), bound > 0. Rejection sampling keeps the
  /// draw unbiased.
  uint64_t below(uint64_t bound) {
    uint64_t threshold = (0ULL - bound) % bound;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Standard normal via Box-Muller (cosine branch only, no cached state).
  double gaussian() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

 private:
  uint64_t state_;
};

/// Uniform point on the Euclidean unit sphere in R^d.
inline Vec sphere_sample(int d, SplitMix64& rng) {
  Vec u(d);
  for (;;) {
    for (int i = 0; i < d; ++i) u[i] = rng.gaussian();
    double n = u.norm();
    if (n > 1e-12) return u / n;
  }
}

}  // namespace mcpref
