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

#include "rftomo/pulse.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "rftomo/rng.hpp"

namespace rftomo {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

void FourierPulse::validate() const {
  if (components.empty()) {
    throw std::invalid_argument("FourierPulse: need at least one component");
  }
  if (!(duration > 0.0) || !std::isfinite(duration)) {
    throw std::invalid_argument("FourierPulse: duration must be positive");
  }
  double sum = 0.0;
  for (const auto& c : components) {
    if (!std::isfinite(c.amplitude) || !std::isfinite(c.nu) || !std::isfinite(c.phi)) {
      throw std::invalid_argument("FourierPulse: non-finite component");
    }
    sum += c.amplitude;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("FourierPulse: amplitudes must sum to 1");
  }
}

double eval(const FourierPulse& pulse, double t) {
  assert(t >= -1e-15 && t <= pulse.duration * (1.0 + 1e-12));
  double f = 0.0;
  for (const auto& c : pulse.components) {
    f += c.amplitude * std::cos(c.nu * t + c.phi);
  }
  return f;
}

void PulseSamplingSpec::validate() const {
  if (k < 1) throw std::invalid_argument("PulseSamplingSpec: k must be >= 1");
  if (!(freq_lo >= 0.0) || !(freq_hi > freq_lo)) {
    throw std::invalid_argument("PulseSamplingSpec: need 0 <= freq_lo < freq_hi");
  }
}

FourierPulse sample_pulse(const PulseSamplingSpec& spec, double duration) {
  spec.validate();
  if (!(duration > 0.0)) {
    throw std::invalid_argument("sample_pulse: duration must be positive");
  }
  Rng rng(spec.seed);
  FourierPulse pulse;
  pulse.duration = duration;
  pulse.components.resize(static_cast<size_t>(spec.k));

  // Uniform on the simplex: normalized exponential gaps.
  double sum = 0.0;
  for (auto& c : pulse.components) {
    c.amplitude = rng.exponential();
    sum += c.amplitude;
  }
  for (auto& c : pulse.components) {
    c.amplitude /= sum;
    c.nu = rng.uniform(spec.freq_lo, spec.freq_hi);
    c.phi = rng.uniform(0.0, kTwoPi);
  }
  pulse.validate();
  return pulse;
}

FourierPulse constant_pulse(double duration) {
  if (!(duration > 0.0)) {
    throw std::invalid_argument("constant_pulse: duration must be positive");
  }
  FourierPulse pulse;
  pulse.duration = duration;
  pulse.components.push_back(FourierComponent{1.0, 0.0, 0.0});
  return pulse;
}

nlohmann::json pulse_to_json(const FourierPulse& pulse) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : pulse.components) {
    comps.push_back(nlohmann::json{
        {"F", c.amplitude}, {"nu_hz_linear", c.nu / kTwoPi}, {"phi_rad", c.phi}});
  }
  return nlohmann::json{{"duration_s", pulse.duration}, {"components", comps}};
}

FourierPulse pulse_from_json(const nlohmann::json& j) {
  FourierPulse pulse;
  pulse.duration = j.at("duration_s").get<double>();
  for (const auto& c : j.at("components")) {
    pulse.components.push_back(FourierComponent{
        c.at("F").get<double>(), c.at("nu_hz_linear").get<double>() * kTwoPi,
        c.at("phi_rad").get<double>()});
  }
  pulse.validate();
  return pulse;
}

}  // namespace rftomo
