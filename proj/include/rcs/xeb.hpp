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

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "rcs/statevec.hpp"

namespace rcs {

struct XebResult {
  double f_xeb = 0.0;
  double std_err = 0.0;
  std::uint64_t n_samples = 0;
  std::uint32_t n_qubits = 0;
};

/// Linear XEB: f = 2^n * mean(p) - 1, std_err = 2^n * sample_std(p) / sqrt(N).
/// std_err is 0 for a single sample. Throws std::invalid_argument for an
/// empty list or probabilities outside [0, 1].
XebResult xeb_estimate(std::span<const double> ideal_probs, std::uint32_t n);

/// Pools observed probabilities over several circuits of the same width.
XebResult xeb_estimate(std::span<const std::vector<double>> per_circuit_probs, std::uint32_t n);

/// Ideal probabilities |<x|psi>|^2 of observed bitstrings.
std::vector<double> ideal_probabilities(const StateVector& ideal, std::span<const std::uint64_t> bitstrings);

struct SamplePlan {
  double target_fidelity = 1.0;
  std::uint64_t n_s = 1;
  double sigma = 1.0;
};

/// n_s = ceil(F^-2), sigma = n_s^-1/2. Throws std::invalid_argument unless 0 < F <= 1.
SamplePlan required_samples(double fidelity);

/// Each draw comes from |a_x|^2 with probability f, else uniformly from
/// [0, 2^n). The mixture coin uses a stream derived from `seed`; the draw
/// itself uses the same stream as sample(state, count, seed), so f = 1
/// reproduces sample() exactly.
std::vector<std::uint64_t> depolarized_sample(const StateVector& state, double fidelity, std::size_t count,
                                              std::uint64_t seed);

/// Kolmogorov-Smirnov distance between the empirical CDF of 2^n p(x) and
/// 1 - exp(-x). Throws std::invalid_argument unless probs sum to 1 +- 1e-8.
double porter_thomas_ks(std::span<const double> probs);

/// Asymptotic Kolmogorov tail probability P(D > d) for sample size count.
double ks_pvalue(double d, std::size_t count);

struct XebRunRecord {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  std::uint64_t seed = 0;
  double f = 1.0;
  std::uint64_t n_samples = 0;
  double f_xeb = 0.0;
  double std_err = 0.0;
};

/// CSV with header n,m,seed,f,n_samples,f_xeb,std_err.
void write_xeb_csv(std::ostream& out, std::span<const XebRunRecord> records);

}  // namespace rcs
