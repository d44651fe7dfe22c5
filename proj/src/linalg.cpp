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

#include "rftomo/linalg.hpp"

#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

namespace rftomo {

double hermiticity_defect(const ComplexMatrix& a) {
  return (a - a.adjoint().eval()).cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix& a) {
  return a.allFinite();
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  return a.rows() == a.cols() && all_finite(a) && hermiticity_defect(a) <= tol;
}

void require_hermitian(const ComplexMatrix& a, const char* what, double tol) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix is not square");
  }
  if (!all_finite(a)) {
    throw std::invalid_argument(std::string(what) + ": non-finite entries");
  }
  if (hermiticity_defect(a) > tol) {
    throw std::invalid_argument(std::string(what) + ": matrix is not Hermitian");
  }
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols()) {
    throw std::invalid_argument("kron: inputs must be square");
  }
  const Eigen::Index na = a.rows();
  const Eigen::Index nb = b.rows();
  ComplexMatrix out(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i) {
    for (Eigen::Index j = 0; j < na; ++j) {
      out.block(i * nb, j * nb, nb, nb) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.adjoint() * b).trace();
}

ComplexMatrix expm_hermitian(const ComplexMatrix& h, double scale) {
  require_hermitian(h, "expm_hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  const Eigen::Index d = h.rows();
  ComplexVector phases(d);
  for (Eigen::Index k = 0; k < d; ++k) {
    phases(k) = std::polar(1.0, -scale * es.eigenvalues()(k));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

ComplexMatrix sqrt_psd(const ComplexMatrix& a, double neg_tol) {
  require_hermitian(a, "sqrt_psd");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a);
  RealVector roots(a.rows());
  for (Eigen::Index k = 0; k < a.rows(); ++k) {
    double ev = es.eigenvalues()(k);
    if (ev < -neg_tol) {
      throw std::invalid_argument("sqrt_psd: matrix has a negative eigenvalue");
    }
    roots(k) = std::sqrt(std::max(ev, 0.0));
  }
  return es.eigenvectors() * roots.asDiagonal().toDenseMatrix().cast<Complex>() *
         es.eigenvectors().adjoint();
}

namespace {

ComplexMatrix make_pauli(int which) {
  ComplexMatrix m(2, 2);
  const Complex i(0.0, 1.0);
  switch (which) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -i, i, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

}  // namespace

const ComplexMatrix& pauli_x() { static const ComplexMatrix m = make_pauli(1); return m; }
const ComplexMatrix& pauli_y() { static const ComplexMatrix m = make_pauli(2); return m; }
const ComplexMatrix& pauli_z() { static const ComplexMatrix m = make_pauli(3); return m; }
const ComplexMatrix& identity2() { static const ComplexMatrix m = make_pauli(0); return m; }

nlohmann::json matrix_to_json(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("matrix_to_json: matrix is not square");
  }
  const Eigen::Index d = a.rows();
  std::vector<double> re, im;
  re.reserve(static_cast<size_t>(d * d));
  im.reserve(static_cast<size_t>(d * d));
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      re.push_back(a(i, j).real());
      im.push_back(a(i, j).imag());
    }
  }
  return nlohmann::json{{"dim", d}, {"re", re}, {"im", im}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  const auto d = j.at("dim").get<Eigen::Index>();
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  if (d <= 0 || re.size() != static_cast<size_t>(d * d) ||
      im.size() != static_cast<size_t>(d * d)) {
    throw std::invalid_argument("matrix_from_json: inconsistent dimensions");
  }
  ComplexMatrix a(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j2 = 0; j2 < d; ++j2) {
      const size_t k = static_cast<size_t>(i * d + j2);
      a(i, j2) = Complex(re[k], im[k]);
    }
  }
  if (!all_finite(a)) {
    throw std::invalid_argument("matrix_from_json: non-finite entries");
  }
  return a;
}

}  // namespace rftomo
