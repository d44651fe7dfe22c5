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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rftomo/model.hpp"
#include "rftomo/propagator.hpp"
#include "rftomo/pulse.hpp"
#include "rftomo/states.hpp"

namespace rftomo {

/// How rows of the measurement matrix map to times.
///  - kSharedTime: row n = pulse n measured at sample_times[sample_index]
///    (one matrix per sample time; the multi-pulse protocol).
///  - kStaggered: row n = pulse n measured at sample_times[n] (a single
///    matrix; with identical pulses this is the one-long-pulse record
///    measured at successive intervals).
enum class SampleLayout { kSharedTime, kStaggered };

/// The pulses and sample times defining a measurement record.
struct RecordDesign {
  std::vector<FourierPulse> pulses;  // exactly d^2 - 1
  std::vector<double> sample_times;  // seconds, strictly increasing
  PropagationSpec step;
  SampleLayout layout = SampleLayout::kSharedTime;

  void validate(Eigen::Index dim) const;
};

/// Real (d^2-1) x (d^2-1) matrix with rows Tr{U_n^dagger M U_n B_m}.
struct MeasurementMatrix {
  RealMatrix entries;
  int sample_index = 0;
};

/// Noise applied to simulated expectation values.
struct NoiseSpec {
  enum class Kind { kNone, kGaussian, kShots };
  Kind kind = Kind::kNone;
  double sigma = 0.0;     // Gaussian standard deviation
  long long shots = 0;    // measurement repetitions per expectation value
  uint64_t seed = 0;

  static NoiseSpec none() { return {}; }
  static NoiseSpec gaussian(double sigma, uint64_t seed);
  static NoiseSpec shot_noise(long long shots, uint64_t seed);
  std::string describe() const;
};

/// One measurement record y with its matrix.
struct MeasurementRecord {
  RealVector y;
  MeasurementMatrix matrix;
  NoiseSpec noise_meta;
};

/// Thrown when the stacked record matrix is rank deficient and the state
/// cannot be reconstructed uniquely.
class InformationallyIncompleteError : public std::runtime_error {
 public:
  InformationallyIncompleteError(int null_space_dim, const std::string& what)
      : std::runtime_error(what), null_space_dim_(null_space_dim) {}
  int null_space_dim() const { return null_space_dim_; }

 private:
  int null_space_dim_;
};

struct SolverOptions {
  double gtol = 1e-9;       // gradient-norm convergence threshold
  int max_iters = 20000;
  double rank_tol = 1e-10;  // relative singular-value cutoff for rank checks
};

enum class ReconstructionMethod { kLinearInversionProjected, kFactorParametrized };

struct TomographyResult {
  DensityMatrix rho;
  BlochVector bloch;        // Bloch vector of rho
  RealVector bloch_raw;     // unconstrained least-squares solution (diagnostic)
  double residual = 0.0;    // stacked objective sum_j |y_j - M_j r|^2 at rho
  int iterations = 0;
  ReconstructionMethod method = ReconstructionMethod::kLinearInversionProjected;
  bool converged = true;
};

/// Measurement matrix for one sample time (kSharedTime) or for the whole
/// staggered design (sample_index must then be 0).
MeasurementMatrix build_matrix(const ControlledSystem& system,
                               const RecordDesign& design,
                               const OperatorBasis& basis, int sample_index);

/// All matrices of a design in one incremental propagation pass per pulse.
std::vector<MeasurementMatrix> build_all_matrices(const ControlledSystem& system,
                                                  const RecordDesign& design,
                                                  const OperatorBasis& basis,
                                                  int threads = 0);

/// y_n = Tr{U_n^dagger M U_n rho} + noise for one sample time.
MeasurementRecord simulate_record(const ControlledSystem& system,
                                  const RecordDesign& design,
                                  const DensityMatrix& rho,
                                  const OperatorBasis& basis, int sample_index,
                                  const NoiseSpec& noise);

/// Records for every sample time of the design; record j draws its noise
/// from a child seed derived from (noise.seed, j).
std::vector<MeasurementRecord> simulate_records(const ControlledSystem& system,
                                                const RecordDesign& design,
                                                const DensityMatrix& rho,
                                                const OperatorBasis& basis,
                                                const NoiseSpec& noise,
                                                int threads = 0);

/// Stacked least squares via pseudoinverse, followed by projection onto the
/// nearest (Frobenius) unit-trace PSD matrix by eigenvalue simplex
/// projection. Throws InformationallyIncompleteError when the stacked
/// matrix is column-rank deficient.
TomographyResult reconstruct_linear(const std::vector<MeasurementRecord>& records,
                                    const OperatorBasis& basis,
                                    double rank_tol = 1e-10);

/// Constrained least squares over rho = T^dagger T / Tr{T^dagger T} with T
/// complex lower-triangular: gradient descent with analytic gradient and
/// backtracking line search, initialized from the projected linear solution
/// when the stack has full rank. The result satisfies the density-matrix
/// constraints by construction; hitting max_iters clears `converged`.
TomographyResult reconstruct_constrained(const std::vector<MeasurementRecord>& records,
                                         const OperatorBasis& basis,
                                         const SolverOptions& opts = {});

/// Mean/std of |M^{-1}| (spectral norm) over random pulse sets, per
/// duration; matrices whose inverse norm exceeds `kSingularCap` count as
/// singular and are excluded from the means.
struct ConditioningRow {
  double duration = 0.0;
  double mean_inv_norm = 0.0;
  double std_inv_norm = 0.0;
  double mean_log_inv_norm = 0.0;  // natural log
  double std_log_inv_norm = 0.0;
  int singular_count = 0;
  int realizations = 0;
};

inline constexpr double kSingularCap = 1e12;

std::vector<ConditioningRow> conditioning_study(
    const ControlledSystem& system, const PulseSamplingSpec& pulse_spec,
    const std::vector<double>& durations, int realizations,
    const OperatorBasis& basis, const PropagationSpec& step = {},
    int threads = 0);

/// Constants of the stacked-record protocol: d^2-1 random pulses of a fixed
/// duration, expectation traces sampled on a uniform grid, and the last
/// `last_k` grid points of every pulse forming `last_k` records.
struct ProtocolOptions {
  double duration = 0.7e-6;
  double sample_spacing = 20e-9;
  int last_k = 10;
  PropagationSpec step;
  SolverOptions solver;
};

struct ProtocolRun {
  std::vector<FourierPulse> pulses;
  RecordDesign design;  // sample_times = the last_k trace times
  std::vector<MeasurementRecord> records;
  TomographyResult result;
};

/// End-to-end pipeline: sample pulses, simulate the records, reconstruct.
/// Pulse n uses the child seed (pulse_spec.seed, n).
ProtocolRun run_protocol(const ControlledSystem& system, const DensityMatrix& rho,
                         const PulseSamplingSpec& pulse_spec, const NoiseSpec& noise,
                         const ProtocolOptions& opts = {}, int threads = 0);

/// run_protocol with the default constants; requires d = 4.
TomographyResult experiment_protocol(const ControlledSystem& system,
                                     const DensityMatrix& rho,
                                     const PulseSamplingSpec& pulse_spec,
                                     const NoiseSpec& noise, int threads = 0);

nlohmann::json record_to_json(const MeasurementRecord& record, double sample_time_s);
MeasurementRecord record_from_json(const nlohmann::json& j);

/// Row-major CSV of the matrix entries; `preamble` lines are prefixed `# `.
std::string matrix_to_csv(const MeasurementMatrix& m,
                          const std::vector<std::string>& preamble = {});

nlohmann::json result_to_json(const TomographyResult& result);

namespace detail {

/// Stacked objective and analytic gradient for the factor parametrization,
/// exposed for finite-difference verification. `t` is complex lower
/// triangular with real diagonal; the gradient has the same support.
struct FactorObjective {
  double value = 0.0;
  ComplexMatrix grad;  // d/dRe on the diagonal; d/dRe + i d/dIm below it
};

FactorObjective factor_objective(const RealMatrix& stacked_matrix,
                                 const RealVector& stacked_y,
                                 const OperatorBasis& basis,
                                 const ComplexMatrix& t);

/// Eigenvalue simplex projection: nearest (Frobenius) unit-trace PSD matrix
/// to a Hermitian unit-trace input.
ComplexMatrix project_to_physical(const ComplexMatrix& hermitian_unit_trace);

}  // namespace detail

}  // namespace rftomo
