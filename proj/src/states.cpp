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

#include "rftomo/states.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <nlohmann/json.hpp>

#include "rftomo/rng.hpp"

namespace rftomo {

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m) {
  require_hermitian(m, "DensityMatrix", kHermitianTol);
  if (std::abs(m.trace().real() - 1.0) > kTraceTol ||
      std::abs(m.trace().imag()) > kTraceTol) {
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kEigTol) {
    throw std::invalid_argument("DensityMatrix: not positive semidefinite");
  }
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
  if (dim <= 0) throw std::invalid_argument("maximally_mixed: dim must be positive");
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double n = psi.norm();
  if (n <= 0.0 || !std::isfinite(n)) {
    throw std::invalid_argument("pure: state vector must be nonzero and finite");
  }
  ComplexVector u = psi / n;
  return DensityMatrix(u * u.adjoint());
}

DensityMatrix DensityMatrix::basis_state(Eigen::Index dim, Eigen::Index index) {
  if (dim <= 0 || index < 0 || index >= dim) {
    throw std::invalid_argument("basis_state: index out of range");
  }
  ComplexVector psi = ComplexVector::Zero(dim);
  psi(index) = 1.0;
  return pure(psi);
}

double DensityMatrix::purity() const {
  return (m_ * m_).trace().real();
}

void OperatorBasis::validate() const {
  constexpr double tol = 1e-12;
  if (size() != dim * dim - 1) {
    throw std::invalid_argument("OperatorBasis: expected d^2-1 elements");
  }
  for (const auto& b : elements) {
    if (b.rows() != dim || b.cols() != dim) {
      throw std::invalid_argument("OperatorBasis: element dimension mismatch");
    }
    if (hermiticity_defect(b) > tol) {
      throw std::invalid_argument("OperatorBasis: element not Hermitian");
    }
    if (std::abs(b.trace()) > tol) {
      throw std::invalid_argument("OperatorBasis: element not traceless");
    }
  }
  for (Eigen::Index i = 0; i < size(); ++i) {
    for (Eigen::Index j = i; j < size(); ++j) {
      const Complex g = hs_inner(elements[static_cast<size_t>(i)],
                                 elements[static_cast<size_t>(j)]);
      const double want = i == j ? 1.0 : 0.0;
      if (std::abs(g - want) > tol) {
        throw std::invalid_argument("OperatorBasis: not orthonormal");
      }
    }
  }
}

OperatorBasis pauli_basis(int num_qubits) {
  if (num_qubits < 1) {
    throw std::invalid_argument("pauli_basis: need at least one qubit");
  }
  if (num_qubits > 6) {
    // Dense storage of 4^n - 1 operators of size 4^n; d <= 64 is the
    // supported range.
    throw std::invalid_argument("pauli_basis: num_qubits > 6 not supported");
  }
  const Eigen::Index d = Eigen::Index(1) << num_qubits;
  const std::array<const ComplexMatrix*, 4> sigma = {
      &identity2(), &pauli_x(), &pauli_y(), &pauli_z()};

  OperatorBasis basis;
  basis.dim = d;
  const Eigen::Index count = d * d;  // 4^n strings including identity
  basis.elements.reserve(static_cast<size_t>(count - 1));
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (Eigen::Index code = 1; code < count; ++code) {
    // Base-4 digits of `code`, first qubit = most significant digit.
    ComplexMatrix op = ComplexMatrix::Identity(1, 1);
    for (int q = num_qubits - 1; q >= 0; --q) {
      const auto digit = (code >> (2 * q)) & 3;
      op = kron(op, *sigma[static_cast<size_t>(digit)]);
    }
    basis.elements.push_back(scale * op);
  }
  return basis;
}

double BlochVector::pure_norm_bound(Eigen::Index dim) {
  return std::sqrt(static_cast<double>(dim - 1) / static_cast<double>(dim));
}

bool BlochVector::within_pure_bound(double tol) const {
  return components.norm() <= pure_norm_bound(dim) + tol;
}

BlochVector to_bloch(const DensityMatrix& rho, const OperatorBasis& basis) {
  if (rho.dim() != basis.dim) {
    throw std::invalid_argument("to_bloch: dimension mismatch");
  }
  BlochVector r;
  r.dim = basis.dim;
  r.components.resize(basis.size());
  for (Eigen::Index m = 0; m < basis.size(); ++m) {
    const Complex c = (rho.matrix() * basis.elements[static_cast<size_t>(m)]).trace();
    if (std::abs(c.imag()) > 1e-10) {
      throw std::invalid_argument("to_bloch: non-real component");
    }
    r.components(m) = c.real();
  }
  return r;
}

StateExpansion from_bloch(const BlochVector& r, const OperatorBasis& basis) {
  if (r.size() != basis.size()) {
    throw std::invalid_argument("from_bloch: length must be d^2-1");
  }
  const Eigen::Index d = basis.dim;
  ComplexMatrix m = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
  for (Eigen::Index k = 0; k < basis.size(); ++k) {
    m += r.components(k) * basis.elements[static_cast<size_t>(k)];
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
  return StateExpansion{m, es.eigenvalues().minCoeff() >= -DensityMatrix::kEigTol};
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  const ComplexMatrix root = sqrt_psd(rho.matrix());
  const ComplexMatrix inner = root * sigma.matrix() * root;
  // inner is PSD up to round-off; sum of sqrt eigenvalues = Tr sqrt(inner).
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(inner, Eigen::EigenvaluesOnly);
  double tr = 0.0;
  for (Eigen::Index k = 0; k < inner.rows(); ++k) {
    tr += std::sqrt(std::max(es.eigenvalues()(k), 0.0));
  }
  return std::clamp(tr * tr, 0.0, 1.0);
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("concurrence: defined for two qubits (d = 4)");
  }
  const ComplexMatrix yy = kron(pauli_y(), pauli_y());
  const ComplexMatrix rho_tilde = yy * rho.matrix().conjugate() * yy;
  // Eigenvalues of rho * rho_tilde equal those of the Hermitian PSD matrix
  // sqrt(rho) rho_tilde sqrt(rho).
  const ComplexMatrix root = sqrt_psd(rho.matrix());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(root * rho_tilde * root,
                                                  Eigen::EigenvaluesOnly);
  RealVector lam(4);
  for (Eigen::Index k = 0; k < 4; ++k) {
    lam(k) = std::sqrt(std::max(es.eigenvalues()(k), 0.0));
  }
  std::sort(lam.data(), lam.data() + 4, std::greater<double>());
  return std::max(0.0, lam(0) - lam(1) - lam(2) - lam(3));
}

DensityMatrix random_pure_state(Eigen::Index dim, uint64_t seed) {
  if (dim <= 0) throw std::invalid_argument("random_pure_state: bad dim");
  Rng rng(seed);
  ComplexVector psi(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    psi(k) = Complex(rng.normal(), rng.normal());
  }
  return DensityMatrix::pure(psi);
}

DensityMatrix random_mixed_state(Eigen::Index dim, uint64_t seed, Eigen::Index rank) {
  if (dim <= 0) throw std::invalid_argument("random_mixed_state: bad dim");
  if (rank <= 0 || rank > dim) rank = dim;
  Rng rng(seed);
  ComplexMatrix g(dim, rank);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < rank; ++j) {
      g(i, j) = Complex(rng.normal(), rng.normal());
    }
  }
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  // Symmetrize away round-off before validation.
  m = ((m + m.adjoint()) / 2.0).eval();
  return DensityMatrix::from_matrix(m);
}

nlohmann::json density_to_json(const DensityMatrix& rho) {
  return matrix_to_json(rho.matrix());
}

DensityMatrix density_from_json(const nlohmann::json& j) {
  return DensityMatrix::from_matrix(matrix_from_json(j));
}

}  // namespace rftomo
