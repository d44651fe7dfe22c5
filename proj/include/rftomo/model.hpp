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

#include <nlohmann/json_fwd.hpp>

#include "rftomo/linalg.hpp"

namespace rftomo {

/// A driven system H(t) = h0 + f(t) hc with a single measured observable.
/// h0 and hc are in angular-frequency units (rad/s); the observable is
/// dimensionless and traceless.
struct ControlledSystem {
  Eigen::Index dim = 0;
  ComplexMatrix h0;
  ComplexMatrix hc;
  ComplexMatrix observable;
};

/// Rotating-frame two-qubit parameters (electron + nuclear spin). All values
/// stored in rad/s; `from_mhz` accepts linear-frequency MHz and multiplies
/// by 2*pi, matching how such parameters are usually quoted.
struct NVParams {
  double omega1 = 0.0;  // electron detuning, coefficient of sigma1z/2
  double omega2 = 0.0;  // nuclear detuning, coefficient of sigma2z/2
  double Omega1 = 0.0;  // drive amplitude on the electron, must be nonzero
  double Omega2 = 0.0;  // static transverse field on the nucleus
  double gz = 0.0;      // longitudinal coupling, sigma1z sigma2z / 2
  double gx = 0.0;      // transverse coupling, sigma1z sigma2x / 2

  static NVParams from_mhz(double omega1, double omega2, double Omega1,
                           double Omega2, double gz, double gx);
};

/// Measured parameters of the NV sample used throughout the test suite,
/// {omega1, omega2, Omega1, Omega2, gz, gx}/2pi =
/// {-2.97, -6.46, 7.91, -1.39, 5.92, 1.39} MHz.
NVParams default_nv_params();

/// Lab-frame constants of the electron-nuclear spin system. Frequencies in
/// rad/s, gyromagnetic ratios in rad/s per Gauss, field in Gauss.
struct NVPhysicalParams {
  double D = 0.0;         // zero-field splitting
  double gamma_e = 0.0;   // electron gyromagnetic ratio
  double gamma_c = 0.0;   // carbon-13 gyromagnetic ratio
  double B = 0.0;         // static field along the NV axis
  double A_N = 0.0;       // nitrogen-induced shift of the driven transition
  double A_zz = 0.0;      // longitudinal hyperfine coupling
  double A_zx = 0.0;      // transverse hyperfine coupling
  double omega_mw = 0.0;  // microwave carrier frequency
};

/// d = 4 system: h0 = omega1/2 s1z + omega2/2 s2z + Omega2/2 s2x
/// + gz/2 s1z s2z + gx/2 s1z s2x, hc = Omega1/2 s1x, observable s1z.
ControlledSystem nv_system(const NVParams& p);

/// Rotating-frame parameters from physical constants:
/// omega1 = omega_mw - D + gamma_e B + A_N, omega2 = gamma_c B - A_zz/2,
/// Omega2 = -A_zx/2, gz = A_zz/2, gx = A_zx/2. The drive amplitude Omega1
/// is calibrated separately and passed through.
NVParams nv_params_from_physical(const NVPhysicalParams& p, double Omega1);

/// Validates a user-supplied system. A non-traceless observable is replaced
/// by its traceless part (a constant offset in the record carries no state
/// information); a note is printed to stderr when that happens.
ControlledSystem custom_system(const ComplexMatrix& h0, const ComplexMatrix& hc,
                               const ComplexMatrix& observable);

/// Population of the +1 eigenspace of a +/-1 observable: (1 + <M>) / 2.
double population_from_expectation(double expectation);

nlohmann::json system_to_json(const ControlledSystem& s);
ControlledSystem system_from_json(const nlohmann::json& j);

/// NVParams serialize with values in linear MHz for readability.
nlohmann::json nv_params_to_json(const NVParams& p);
NVParams nv_params_from_json(const nlohmann::json& j);

}  // namespace rftomo
