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

#include "rftomo/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace rftomo {

double Rng::normal() {
  double u1;
  do { u1 = uniform(); } while (u1 <= 0.0);
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(6.283185307179586476925286766559 * u2);
}

long long Rng::binomial(long long n, double p) {
  if (n < 0 || p < 0.0 || p > 1.0) {
    throw std::invalid_argument("binomial: need n >= 0 and p in [0,1]");
  }
  // Exact via std::binomial_distribution; deterministic for a fixed engine
  // state on a given platform.
  std::binomial_distribution<long long> dist(n, p);
  return dist(engine_);
}

namespace {
uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}
}  // namespace

uint64_t derive_seed(uint64_t master, uint64_t stream) {
  return splitmix64(splitmix64(master) ^ splitmix64(stream + 1));
}

uint64_t derive_seed(uint64_t master, uint64_t stream_a, uint64_t stream_b) {
  return derive_seed(derive_seed(master, stream_a), stream_b);
}

}  // namespace rftomo
