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

#include "rftomo/propagator.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace rftomo {

void PropagationSpec::validate() const {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("PropagationSpec: step must be positive");
  }
}

namespace {

// Slice loop on a fixed- or dynamic-size matrix type. The eigensolver works
// on stack storage for the fixed sizes, which dominates the run time of the
// Monte Carlo studies.
template <class Mat>
class WalkerImpl;

struct WalkerBase {
  virtual ~WalkerBase() = default;
  virtual ComplexMatrix advance_to(double t) = 0;
};

template <class Mat>
class WalkerImpl final : public WalkerBase {
 public:
  WalkerImpl(const ControlledSystem& system, const FourierPulse& pulse,
             const PropagationSpec& spec)
      : pulse_(pulse), step_(spec.step) {
    const auto d = system.dim;
    h0_ = Mat(system.h0);
    hc_ = Mat(system.hc);
    u_boundary_ = Mat::Identity(d, d);
    h_ = Mat(d, d);
  }

  ComplexMatrix advance_to(double t) override {
    if (t < 0.0) throw std::invalid_argument("propagate: t must be >= 0");
    if (t > pulse_.duration * (1.0 + 1e-12)) {
      throw std::invalid_argument("propagate: t exceeds the pulse duration");
    }
    if (t < last_time_) {
      throw std::invalid_argument("propagate: times must be non-decreasing");
    }
    last_time_ = t;

    const auto n = static_cast<long long>(std::floor(t / step_));
    while (boundary_ < n) {
      const double t0 = static_cast<double>(boundary_) * step_;
      apply_slice(t0 + 0.5 * step_, step_, u_boundary_);
      ++boundary_;
    }
    const double t0 = static_cast<double>(boundary_) * step_;
    const double w = t - t0;
    if (w <= 0.0) return ComplexMatrix(u_boundary_);
    Mat u = u_boundary_;
    apply_slice(t0 + 0.5 * w, w, u);
    return ComplexMatrix(u);
  }

 private:
  void apply_slice(double t_mid, double width, Mat& u) {
    h_ = h0_ + eval(pulse_, t_mid) * hc_;
    es_.compute(h_);
    const auto d = h_.rows();
    phases_.resize(d);
    for (Eigen::Index k = 0; k < d; ++k) {
      phases_(k) = std::polar(1.0, -width * es_.eigenvalues()(k));
    }
    u = es_.eigenvectors() * (phases_.asDiagonal() * (es_.eigenvectors().adjoint() * u));
  }

  using Phases = Eigen::Matrix<Complex, Mat::RowsAtCompileTime, 1>;

  const FourierPulse& pulse_;
  double step_;
  Mat h0_, hc_, h_, u_boundary_;
  Phases phases_;
  Eigen::SelfAdjointEigenSolver<Mat> es_;
  long long boundary_ = 0;   // full slices applied to u_boundary_
  double last_time_ = 0.0;
};

std::unique_ptr<WalkerBase> make_walker(const ControlledSystem& system,
                                        const FourierPulse& pulse,
                                        const PropagationSpec& spec) {
  pulse.validate();
  spec.validate();
  require_hermitian(system.h0, "propagate: h0");
  require_hermitian(system.hc, "propagate: hc");
  switch (system.dim) {
    case 2:
      return std::make_unique<WalkerImpl<Eigen::Matrix2cd>>(system, pulse, spec);
    case 4:
      return std::make_unique<WalkerImpl<Eigen::Matrix4cd>>(system, pulse, spec);
    case 8:
      return std::make_unique<WalkerImpl<Eigen::Matrix<Complex, 8, 8>>>(system,
                                                                        pulse, spec);
    default:
      return std::make_unique<WalkerImpl<ComplexMatrix>>(system, pulse, spec);
  }
}

}  // namespace

struct Propagation::Impl {
  // Walkers keep a reference to the pulse; own a stable copy.
  FourierPulse pulse;
  std::unique_ptr<WalkerBase> walker;
};

Propagation::Propagation(const ControlledSystem& system, const FourierPulse& pulse,
                         const PropagationSpec& spec)
    : impl_(std::make_unique<Impl>()) {
  impl_->pulse = pulse;
  impl_->walker = make_walker(system, impl_->pulse, spec);
}

Propagation::~Propagation() = default;
Propagation::Propagation(Propagation&&) noexcept = default;
Propagation& Propagation::operator=(Propagation&&) noexcept = default;

ComplexMatrix Propagation::advance_to(double t) {
  return impl_->walker->advance_to(t);
}

ComplexMatrix propagate(const ControlledSystem& system, const FourierPulse& pulse,
                        double t, const PropagationSpec& spec) {
  Propagation walker(system, pulse, spec);
  return walker.advance_to(t);
}

TimeTrace expectation_trace(const ControlledSystem& system,
                            const FourierPulse& pulse, const DensityMatrix& rho,
                            const std::vector<double>& times,
                            const PropagationSpec& spec) {
  if (rho.dim() != system.dim) {
    throw std::invalid_argument("expectation_trace: state dimension mismatch");
  }
  for (size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) {
      throw std::invalid_argument("expectation_trace: times must be strictly increasing");
    }
  }
  require_hermitian(system.observable, "expectation_trace: observable");

  TimeTrace trace;
  trace.times = times;
  trace.values.reserve(times.size());
  Propagation walker(system, pulse, spec);
  for (double t : times) {
    const ComplexMatrix u = walker.advance_to(t);
    const Complex v = (u.adjoint() * system.observable * u * rho.matrix()).trace();
    if (std::abs(v.imag()) > 1e-9) {
      throw std::runtime_error("expectation_trace: non-real expectation value");
    }
    trace.values.push_back(v.real());
  }
  return trace;
}

std::string trace_to_csv(const TimeTrace& trace,
                         const std::vector<std::string>& preamble) {
  std::string out;
  for (const auto& line : preamble) {
    out += "# " + line + "\n";
  }
  out += "t_s,expectation\n";
  char buf[80];
  for (size_t i = 0; i < trace.times.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", trace.times[i],
                  trace.values[i]);
    out += buf;
  }
  return out;
}

}  // namespace rftomo
