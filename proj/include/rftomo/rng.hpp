// Copyright 2026 The rftomo Authors
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

#include <cstdint>
#include <random>

namespace rftomo {

/// Seedable random generator used everywhere in the project. Wraps
/// std::mt19937_64 but derives all variates from raw 64-bit draws with
/// explicit formulas, so a given seed reproduces the same stream on any
/// standard library.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard exponential via inversion.
  double exponential() {
    double u;
    do { u = uniform(); } while (u <= 0.0);
    return -std::log1p(-u);
  }

  /// Standard normal via Box-Muller (one value per call, no caching).
  double normal();

  /// Binomial(n, p) draw.
  long long binomial(long long n, double p);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Derives a child seed from a master seed and a stream index; used to hand
/// independent, reproducible streams to pulses, records and Monte Carlo
/// shards. splitmix64 finalizer.
uint64_t derive_seed(uint64_t master, uint64_t stream);

uint64_t derive_seed(uint64_t master, uint64_t stream_a, uint64_t stream_b);

}  // namespace rftomo
