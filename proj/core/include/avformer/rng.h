// core/include/avformer/rng.h

// Copyright 2026  avformer authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef AVFORMER_RNG_H_
#define AVFORMER_RNG_H_

#include <cmath>
#include <cstdint>
#include <random>

namespace avformer {

// All randomness in the library flows through explicitly passed generators.
// The helpers below avoid std::*_distribution so that a given seed produces
// the same stream on every standard library implementation.
using Rng = std::mt19937_64;

// Uniform double in [0, 1) with 53 bits of precision.
inline double UniformReal(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform double in [lo, hi).
inline double UniformReal(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * UniformReal(rng);
}

// Uniform integer in [0, n). n must be positive.
inline int UniformInt(Rng& rng, int n) {
  // Rejection sampling keeps the result unbiased.
  const uint64_t un = static_cast<uint64_t>(n);
  const uint64_t limit = UINT64_MAX - UINT64_MAX % un;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<int>(x % un);
}

// Standard normal via Box-Muller.
inline double GaussianReal(Rng& rng) {
  double u1 = UniformReal(rng);
  double u2 = UniformReal(rng);
  if (u1 < 1e-300) u1 = 1e-300;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

// Bernoulli draw with success probability p.
inline bool Bernoulli(Rng& rng, double p) { return UniformReal(rng) < p; }

}  // namespace avformer

#endif  // AVFORMER_RNG_H_
