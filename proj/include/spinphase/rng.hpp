// Copyright 2026 The spinphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace spinphase {

/// Counter-based deterministic random stream. Each draw is a pure hash of
/// (seed, worker, counter), so the sample at a given global index is identical
/// no matter how the index range is partitioned across workers.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t worker = 0)
      : base_(mix(seed ^ mix(worker + 0x9e3779b97f4a7c15ull))), counter_(0) {}

  /// Jump directly to a global draw index (used when partitioning MC work).
  void seek(std::uint64_t counter) { counter_ = counter; }

  std::uint64_t next_u64() { return mix(base_ + 0x9e3779b97f4a7c15ull * (++counter_)); }

  /// Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform point on S^2 via u = cos(theta) uniform in [-1,1].
  void next_sphere_point(double& theta, double& phi) {
    const double u = 2.0 * next_double() - 1.0;
    theta = std::acos(u);
    phi = 2.0 * std::numbers::pi * next_double();
  }

 private:
  // splitmix64 finalizer
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t base_;
  std::uint64_t counter_;
};

}  // namespace spinphase
