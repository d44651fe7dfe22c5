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

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

namespace rftomo {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Largest absolute entry of (a - a^dagger); zero for Hermitian a.
double hermiticity_defect(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double tol = kHermitianTol);

/// Throws std::invalid_argument when `a` is not square, has non-finite
/// entries, or deviates from Hermiticity by more than `tol`.
void require_hermitian(const ComplexMatrix& a, const char* what,
                       double tol = kHermitianTol);

bool all_finite(const ComplexMatrix& a);

/// Kronecker product, dim = dim(a) * dim(b).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hilbert-Schmidt inner product Tr{a^dagger b}.
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// exp(-i * scale * h) for Hermitian h, via eigendecomposition.
/// Rejects non-Hermitian input; the result is unitary up to round-off.
ComplexMatrix expm_hermitian(const ComplexMatrix& h, double scale);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-neg_tol, 0] are clamped to zero; anything below throws.
ComplexMatrix sqrt_psd(const ComplexMatrix& a, double neg_tol = 1e-9);

// Pauli matrices and the 2x2 identity.
const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();
const ComplexMatrix& identity2();

// JSON encoding {dim, re, im} with row-major entry arrays.
nlohmann::json matrix_to_json(const ComplexMatrix& a);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace rftomo
