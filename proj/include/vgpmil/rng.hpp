// Copyright 2026 The vgpmil Authors.
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

#ifndef VGPMIL_RNG_HPP_
#define VGPMIL_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>

#include "vgpmil/normal.hpp"

namespace vgpmil {

// Deterministic RNG used everywhere randomness is needed. Uniform and normal
// variates are derived from the raw mt19937_64 stream directly (not through
// std distributions, whose output is implementation-defined), so a seed
// yields the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n);

  // Standard normal via the inverse CDF; (0,1) open on both sides.
  double normal() {
    double u = (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    return inverse_norm_cdf(u);
  }

 private:
  std::mt19937_64 engine_;
};

// FNV-1a, used to derive stable per-bag seeds from string ids.
std::uint64_t fnv1a64(std::string_view s);

// Mixes a root seed with a domain label so independent sub-streams
// (k-means, posterior initialization, per-bag QMC) never collide.
std::uint64_t derive_seed(std::uint64_t root, std::string_view domain);

}  // namespace vgpmil

#endif  // VGPMIL_RNG_HPP_
