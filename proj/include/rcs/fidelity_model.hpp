// Copyright 2026 The rcsbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rcs/circuit.hpp"

namespace rcs {

/// Exponential fidelity model F = 2^-(lambda * m * (3n - sqrt n) / 2 + gamma * n).
/// lambda is the per-cycle-volume decay constant, gamma the per-qubit one.
/// covariance is row-major [[var(lambda), cov], [cov, var(gamma)]].
struct FidelityParams {
  double lambda = 0.0;
  double gamma = 0.0;
  std::array<double, 4> covariance{};
};

/// Constants fitted to the Sycamore supremacy data.
inline constexpr double kSycamoreLambda = 0.0043;
inline constexpr double kSycamoreGamma = 0.042;
/// Two-sigma half-widths of the published fit.
inline constexpr double kSycamoreLambda2Sigma = 0.0008;
inline constexpr double kSycamoreGamma2Sigma = 0.017;
/// Average isolated two-qubit gate error at epsilon = 1.
inline constexpr double kSycamoreTwoQubitError = 0.0036;

inline FidelityParams sycamore_params() { return {kSycamoreLambda, kSycamoreGamma, {}}; }

/// The exponent -log2 F; real-valued n and m are accepted.
double fidelity_bits(const FidelityParams& params, double n, double m);
double log2_fidelity(const FidelityParams& params, double n, double m);
double predict_fidelity(const FidelityParams& params, double n, double m);

/// Per-class error rates for the gate-level product formula.
struct GateLevelErrors {
  double single_qubit = 0.0;
  double two_qubit = 0.0;
  double qubit = 0.0;  // readout and preparation, once per qubit
};

/// prod over gates (1 - e_g) * prod over qubits (1 - e_q). Throws
/// std::invalid_argument for any rate outside [0, 1).
double predict_fidelity_gatewise(const GateLevelErrors& errors, const GateCounts& counts, std::uint32_t n);

struct FidelityRecord {
  double n = 0.0;
  double m = 0.0;
  double f_xeb = 0.0;
  double weight = 1.0;
};

using FidelityDataset = std::vector<FidelityRecord>;

struct FitReport {
  FidelityParams params;
  std::vector<double> residuals;  // in log2 units, observed - predicted exponent
  double residual_rms = 0.0;
  std::size_t records = 0;
};

/// Weighted linear least squares of -log2 f_xeb on [m(3n - sqrt n)/2, n].
/// Covariance is s^2 (X^T W X)^-1 with s^2 the weighted residual variance
/// (zero when there are only two records). Throws std::invalid_argument for
/// invalid records and NumericError when the design matrix has rank < 2.
FitReport fit(const FidelityDataset& dataset);

/// (lambda, gamma) -> (eps * lambda, eps * gamma); covariance scales by eps^2.
FidelityParams scale_error(const FidelityParams& params, double epsilon);

/// Scaled parameters annotated with the isolated two-qubit gate error they
/// correspond to.
struct ErrorProfile {
  double epsilon = 1.0;
  FidelityParams params;
  double two_qubit_error = kSycamoreTwoQubitError;
};

ErrorProfile error_profile(const FidelityParams& base, double epsilon,
                           double reference_two_qubit_error = kSycamoreTwoQubitError);

struct TrendRecord {
  double year = 0.0;
  double two_qubit_error = 0.0;
};

struct ErrorTrend {
  std::vector<TrendRecord> records;
  double reference_year = 2019.0;  // year at which epsilon = 1
};

struct TrendFit {
  double decay_factor = 1.0;  // error multiplier per year
  double log_intercept = 0.0; // ln(error) at year 0 of the regression
  double reference_year = 0.0;
  double target_year = 0.0;
  double epsilon = 1.0;       // decay_factor^(target - reference)
};

/// Least squares of ln(error) against year. Throws std::invalid_argument for
/// fewer than two records, non-positive errors, or a single distinct year.
TrendFit extrapolate_error(const ErrorTrend& trend, double target_year);

/// CSV readers; headers `n,m,f_xeb[,weight]` and `year,two_qubit_error`.
FidelityDataset read_fidelity_csv(std::istream& in);
ErrorTrend read_trend_csv(std::istream& in);

/// JSON text with lambda, gamma, covariance, residual_rms, records.
std::string fit_report_json(const FitReport& report);

}  // namespace rcs
