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
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace rftomo {

/// One cosine component of a truncated Fourier pulse.
struct FourierComponent {
  double amplitude = 0.0;  // F_j, dimensionless
  double nu = 0.0;         // angular frequency, rad/s
  double phi = 0.0;        // phase, rad
};

/// f(t) = sum_j F_j cos(nu_j t + phi_j), defined on [0, duration].
/// Amplitudes are normalized: sum F_j = 1 (within 1e-12).
struct FourierPulse {
  std::vector<FourierComponent> components;
  double duration = 0.0;  // seconds

  std::size_t num_components() const { return components.size(); }

  /// Throws std::invalid_argument when K < 1, duration <= 0, entries are
  /// non-finite, or the amplitudes do not sum to 1.
  void validate() const;
};

/// Evaluates f(t). Values outside [0, duration] are permitted (asserted
/// against in debug builds only).
double eval(const FourierPulse& pulse, double t);

/// How random pulses are drawn.
struct PulseSamplingSpec {
  int k = 10;                   // number of Fourier components
  double freq_lo = 0.0;         // rad/s
  double freq_hi = 0.0;         // rad/s, must exceed freq_lo
  uint64_t seed = 0;

  void validate() const;
};

/// Draws a random pulse: amplitudes uniform on the simplex {F >= 0,
/// sum F = 1} (exponential-gap normalization), frequencies uniform on
/// [freq_lo, freq_hi), phases uniform on [0, 2*pi). Deterministic in
/// spec.seed.
FourierPulse sample_pulse(const PulseSamplingSpec& spec, double duration);

/// f(t) = 1: a single component with F = 1, nu = 0, phi = 0.
FourierPulse constant_pulse(double duration);

// JSON encoding {duration_s, components: [{F, nu_hz_linear, phi_rad}]};
// frequencies are stored as linear Hz, the loader multiplies by 2*pi.
nlohmann::json pulse_to_json(const FourierPulse& pulse);
FourierPulse pulse_from_json(const nlohmann::json& j);

}  // namespace rftomo
