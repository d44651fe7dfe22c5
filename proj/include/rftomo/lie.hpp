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

#include <vector>

#include "rftomo/linalg.hpp"

namespace rftomo {

/// Closure of the real Lie algebra generated by {i h_k} under commutation.
struct LieClosureResult {
  int dimension = 0;
  std::vector<ComplexMatrix> basis;  // anti-Hermitian, HS-orthonormal
  bool is_fully_controllable = false;
  int depth = 0;  // commutator generations until no new directions appeared
};

/// Dynamical Lie algebra of (h0, hc): iteratively orthonormalizes the
/// generators i*h0, i*hc, commutates the current basis against the
/// generators breadth-first, and keeps components orthogonal to the span
/// whose norm exceeds tol times the largest candidate norm seen.
///
/// Full controllability holds when the dimension reaches d^2 - 1 (su(d),
/// automatically selected for traceless generators) or d^2 (u(d)).
LieClosureResult lie_closure(const ComplexMatrix& h0, const ComplexMatrix& hc,
                             double tol = 1e-10);

/// Same closure over an arbitrary generator list.
LieClosureResult lie_closure(const std::vector<ComplexMatrix>& generators,
                             double tol = 1e-10);

}  // namespace rftomo
