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

#include "rftomo/lie.hpp"

#include <cmath>
#include <stdexcept>

namespace rftomo {

namespace {

// Real HS inner product on the real vector space of anti-Hermitian matrices.
double real_hs(const ComplexMatrix& a, const ComplexMatrix& b) {
  return hs_inner(a, b).real();
}

// Removes the span of `basis` from `c` (two Gram-Schmidt passes) and
// returns the residual norm.
double orthogonalize(const std::vector<ComplexMatrix>& basis, ComplexMatrix& c) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) {
      c -= real_hs(b, c) * b;
    }
  }
  return c.norm();
}

}  // namespace

LieClosureResult lie_closure(const std::vector<ComplexMatrix>& generators,
                             double tol) {
  if (generators.empty()) {
    throw std::invalid_argument("lie_closure: need at least one generator");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("lie_closure: tol must be positive");
  }
  const Eigen::Index d = generators.front().rows();
  bool all_traceless = true;
  std::vector<ComplexMatrix> gens;  // anti-Hermitian i*h
  for (const auto& h : generators) {
    require_hermitian(h, "lie_closure");
    if (h.rows() != d) {
      throw std::invalid_argument("lie_closure: generator dimension mismatch");
    }
    gens.push_back(Complex(0.0, 1.0) * h);
    if (std::abs(h.trace()) > 1e-12 * static_cast<double>(d)) {
      all_traceless = false;
    }
  }

  LieClosureResult res;
  double max_norm_seen = 0.0;
  for (const auto& g : gens) max_norm_seen = std::max(max_norm_seen, g.norm());

  auto try_add = [&](ComplexMatrix c) -> bool {
    max_norm_seen = std::max(max_norm_seen, c.norm());
    const double residual = orthogonalize(res.basis, c);
    if (residual > tol * max_norm_seen) {
      res.basis.push_back(c / residual);
      return true;
    }
    return false;
  };

  std::vector<ComplexMatrix> frontier;
  for (const auto& g : gens) {
    if (try_add(g)) frontier.push_back(res.basis.back());
  }

  // Breadth-first closure against the generators; sufficient because the
  // algebra is generated by them.
  const int max_depth = static_cast<int>(d * d);
  const int max_dim = static_cast<int>(d * d);
  while (!frontier.empty()) {
    if (res.depth > max_depth) {
      throw std::runtime_error("lie_closure: no convergence within d^2 generations");
    }
    std::vector<ComplexMatrix> next;
    for (const auto& b : frontier) {
      for (const auto& g : gens) {
        if (static_cast<int>(res.basis.size()) >= max_dim) break;
        if (try_add(commutator(b, g))) next.push_back(res.basis.back());
      }
    }
    if (!next.empty()) ++res.depth;
    frontier = std::move(next);
  }

  res.dimension = static_cast<int>(res.basis.size());
  const int full_su = static_cast<int>(d * d) - 1;
  res.is_fully_controllable =
      all_traceless ? res.dimension == full_su : res.dimension >= full_su;
  return res;
}

LieClosureResult lie_closure(const ComplexMatrix& h0, const ComplexMatrix& hc,
                             double tol) {
  return lie_closure(std::vector<ComplexMatrix>{h0, hc}, tol);
}

}  // namespace rftomo
