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

#include "rftomo/model.hpp"

#include <cmath>
#include <iostream>

#include <nlohmann/json.hpp>

namespace rftomo {

NVParams NVParams::from_mhz(double omega1, double omega2, double Omega1,
                            double Omega2, double gz, double gx) {
  constexpr double mhz = kTwoPi * 1e6;
  return NVParams{omega1 * mhz, omega2 * mhz, Omega1 * mhz,
                  Omega2 * mhz, gz * mhz,     gx * mhz};
}

NVParams default_nv_params() {
  return NVParams::from_mhz(-2.97, -6.46, 7.91, -1.39, 5.92, 1.39);
}

namespace {

void require_finite_params(const NVParams& p) {
  for (double v : {p.omega1, p.omega2, p.Omega1, p.Omega2, p.gz, p.gx}) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("NVParams: non-finite parameter");
    }
  }
  if (p.Omega1 == 0.0) {
    throw std::invalid_argument("NVParams: Omega1 must be nonzero (no control)");
  }
}

}  // namespace

ControlledSystem nv_system(const NVParams& p) {
  require_finite_params(p);
  const ComplexMatrix& id = identity2();
  const ComplexMatrix s1z = kron(pauli_z(), id);
  const ComplexMatrix s1x = kron(pauli_x(), id);
  const ComplexMatrix s2z = kron(id, pauli_z());
  const ComplexMatrix s2x = kron(id, pauli_x());

  ControlledSystem sys;
  sys.dim = 4;
  sys.h0 = 0.5 * (p.omega1 * s1z + p.omega2 * s2z + p.Omega2 * s2x +
                  p.gz * kron(pauli_z(), pauli_z()) +
                  p.gx * kron(pauli_z(), pauli_x()));
  sys.hc = 0.5 * p.Omega1 * s1x;
  sys.observable = s1z;
  return sys;
}

NVParams nv_params_from_physical(const NVPhysicalParams& p, double Omega1) {
  for (double v : {p.D, p.gamma_e, p.gamma_c, p.B, p.A_N, p.A_zz, p.A_zx,
                   p.omega_mw, Omega1}) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("NVPhysicalParams: non-finite parameter");
    }
  }
  NVParams out;
  out.omega1 = p.omega_mw - p.D + p.gamma_e * p.B + p.A_N;
  out.omega2 = p.gamma_c * p.B - p.A_zz / 2.0;
  out.Omega1 = Omega1;
  out.Omega2 = -p.A_zx / 2.0;
  out.gz = p.A_zz / 2.0;
  out.gx = p.A_zx / 2.0;
  return out;
}

ControlledSystem custom_system(const ComplexMatrix& h0, const ComplexMatrix& hc,
                               const ComplexMatrix& observable) {
  require_hermitian(h0, "custom_system: h0");
  require_hermitian(hc, "custom_system: hc");
  require_hermitian(observable, "custom_system: observable");
  if (h0.rows() != hc.rows() || h0.rows() != observable.rows()) {
    throw std::invalid_argument("custom_system: dimension mismatch");
  }
  ControlledSystem sys;
  sys.dim = h0.rows();
  sys.h0 = h0;
  sys.hc = hc;
  sys.observable = observable;
  const Complex tr = observable.trace();
  if (std::abs(tr) > 1e-12 * static_cast<double>(sys.dim)) {
    std::cerr << "custom_system: observable has trace " << tr.real()
              << "; using its traceless part\n";
    sys.observable -= (tr / static_cast<double>(sys.dim)) *
                      ComplexMatrix::Identity(sys.dim, sys.dim);
    if (sys.observable.cwiseAbs().maxCoeff() < 1e-14) {
      std::cerr << "custom_system: traceless part of the observable is zero; "
                   "the record will carry no information\n";
    }
  }
  return sys;
}

double population_from_expectation(double expectation) {
  return (1.0 + expectation) / 2.0;
}

nlohmann::json system_to_json(const ControlledSystem& s) {
  return nlohmann::json{{"dim", s.dim},
                        {"h0", matrix_to_json(s.h0)},
                        {"hc", matrix_to_json(s.hc)},
                        {"observable", matrix_to_json(s.observable)}};
}

ControlledSystem system_from_json(const nlohmann::json& j) {
  ControlledSystem s = custom_system(matrix_from_json(j.at("h0")),
                                     matrix_from_json(j.at("hc")),
                                     matrix_from_json(j.at("observable")));
  if (j.at("dim").get<Eigen::Index>() != s.dim) {
    throw std::invalid_argument("system_from_json: dim field inconsistent");
  }
  return s;
}

nlohmann::json nv_params_to_json(const NVParams& p) {
  constexpr double mhz = kTwoPi * 1e6;
  return nlohmann::json{{"omega1_mhz", p.omega1 / mhz}, {"omega2_mhz", p.omega2 / mhz},
                        {"Omega1_mhz", p.Omega1 / mhz}, {"Omega2_mhz", p.Omega2 / mhz},
                        {"gz_mhz", p.gz / mhz},         {"gx_mhz", p.gx / mhz}};
}

NVParams nv_params_from_json(const nlohmann::json& j) {
  return NVParams::from_mhz(j.at("omega1_mhz").get<double>(),
                            j.at("omega2_mhz").get<double>(),
                            j.at("Omega1_mhz").get<double>(),
                            j.at("Omega2_mhz").get<double>(),
                            j.at("gz_mhz").get<double>(),
                            j.at("gx_mhz").get<double>());
}

}  // namespace rftomo
