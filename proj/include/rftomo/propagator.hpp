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

#include <memory>
#include <string>
#include <vector>

#include "rftomo/linalg.hpp"
#include "rftomo/model.hpp"
#include "rftomo/pulse.hpp"
#include "rftomo/states.hpp"

namespace rftomo {

/// Fixed-step scheme: the control field is sampled at each slice midpoint
/// and every slice is propagated with the exact Hermitian exponential
/// (unconditionally unitary, 2nd-order accurate).
struct PropagationSpec {
  double step = 1e-9;  // slice width, seconds

  void validate() const;
};

/// Expectation values of the system observable on a time grid.
struct TimeTrace {
  std::vector<double> times;   // seconds, strictly increasing
  std::vector<double> values;  // dimensionless, within the observable's range
};

/// Incremental propagator for one pulse. Slices are anchored at multiples
/// of the step; a requested time is reached from the last full slice
/// boundary with one exactly-sized partial slice, so advancing to t2 after
/// t1 reproduces a from-scratch propagation to t2 slice for slice.
class Propagation {
 public:
  Propagation(const ControlledSystem& system, const FourierPulse& pulse,
              const PropagationSpec& spec);
  ~Propagation();
  Propagation(Propagation&&) noexcept;
  Propagation& operator=(Propagation&&) noexcept;

  /// U(t) for t >= the previous call's time (within [0, pulse duration]).
  ComplexMatrix advance_to(double t);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Time-ordered evolution operator U(t) under h0 + f(t) hc.
ComplexMatrix propagate(const ControlledSystem& system, const FourierPulse& pulse,
                        double t, const PropagationSpec& spec);

/// <M>_t = Tr{U_t^dagger M U_t rho} on a sorted time grid, propagating
/// incrementally between consecutive grid points.
TimeTrace expectation_trace(const ControlledSystem& system,
                            const FourierPulse& pulse, const DensityMatrix& rho,
                            const std::vector<double>& times,
                            const PropagationSpec& spec);

/// Writes a trace as CSV with header `t_s,expectation`. Any `preamble`
/// lines are emitted first, each prefixed with `# `.
std::string trace_to_csv(const TimeTrace& trace,
                         const std::vector<std::string>& preamble = {});

}  // namespace rftomo
