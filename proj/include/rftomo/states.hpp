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

#include "rftomo/linalg.hpp"

namespace rftomo {

/// A d x d Hermitian, unit-trace, positive-semidefinite matrix. Instances
/// are validated on construction and immutable afterwards.
///
/// Tolerances: Hermiticity and trace within 1e-10, smallest eigenvalue
/// >= -1e-9 (absorbs reconstruction round-off).
class DensityMatrix {
 public:
  static constexpr double kTraceTol = 1e-10;
  static constexpr double kEigTol = 1e-9;

  /// Validates and wraps `m`; throws std::invalid_argument on violation.
  static DensityMatrix from_matrix(const ComplexMatrix& m);

  /// Maximally mixed state 1/d.
  static DensityMatrix maximally_mixed(Eigen::Index dim);

  /// |psi><psi| for a (not necessarily normalized) state vector.
  static DensityMatrix pure(const ComplexVector& psi);

  /// Computational basis state |index> of dimension dim.
  static DensityMatrix basis_state(Eigen::Index dim, Eigen::Index index);

  const ComplexMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

  /// Tr{rho^2}, in [1/d, 1].
  double purity() const;

 private:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// Complete Hilbert-Schmidt-orthonormal basis {B_m} of traceless Hermitian
/// d x d operators; d^2 - 1 elements, Tr{B_i B_j} = delta_ij.
struct OperatorBasis {
  Eigen::Index dim = 0;
  std::vector<ComplexMatrix> elements;

  Eigen::Index size() const { return static_cast<Eigen::Index>(elements.size()); }

  /// Checks Hermiticity/tracelessness (1e-12) and pairwise orthonormality
  /// (1e-12); throws on violation.
  void validate() const;
};

/// All 4^n - 1 nontrivial Pauli strings, each scaled by 1/sqrt(d) so that
/// Tr{B^2} = 1. Ordering is lexicographic per qubit in (I, x, y, z), with
/// the all-identity string excluded; the first qubit is the slowest digit.
OperatorBasis pauli_basis(int num_qubits);

/// Real coefficient vector r of a state in an OperatorBasis,
/// rho = 1/d + sum_m r_m B_m.
struct BlochVector {
  Eigen::Index dim = 0;  // Hilbert-space dimension d, not the vector length
  RealVector components;

  Eigen::Index size() const { return components.size(); }

  /// Norm bound sqrt((d-1)/d) attained by pure states.
  static double pure_norm_bound(Eigen::Index dim);
  bool within_pure_bound(double tol = 1e-9) const;
};

/// r_m = Tr{rho B_m}. Imaginary residues beyond 1e-10 throw; the real parts
/// are returned.
BlochVector to_bloch(const DensityMatrix& rho, const OperatorBasis& basis);

/// Result of expanding a Bloch vector; `matrix` is Hermitian and unit-trace
/// by construction but PSD only when `is_physical`.
struct StateExpansion {
  ComplexMatrix matrix;
  bool is_physical = false;
};

/// 1/d + sum_m r_m B_m along with a PSD flag (smallest eigenvalue >= -1e-9).
StateExpansion from_bloch(const BlochVector& r, const OperatorBasis& basis);

/// Uhlmann fidelity, squared-trace convention:
/// (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, clamped to [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Wootters two-qubit concurrence; requires dim == 4.
double concurrence(const DensityMatrix& rho);

/// Haar-random pure state of dimension dim.
DensityMatrix random_pure_state(Eigen::Index dim, uint64_t seed);

/// Full-rank random mixed state rho = G G^dagger / Tr{...} with G a
/// dim x rank complex Gaussian matrix (rank = dim by default).
DensityMatrix random_mixed_state(Eigen::Index dim, uint64_t seed,
                                 Eigen::Index rank = 0);

nlohmann::json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const nlohmann::json& j);

}  // namespace rftomo
