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
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "rcs/fidelity_model.hpp"

namespace rcs {

// Every time scaling is carried as log2 T: values run past 2^1000.

enum class Algorithm : std::uint8_t { Q, SA, SFA, TN };

std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> algorithm_from_name(std::string_view name);

/// Dimensionless cost of one algorithm at (n, m).
struct RuntimeEstimate {
  Algorithm algorithm = Algorithm::Q;
  double log2_t = 0.0;
  double log2_memory_bytes = -std::numeric_limits<double>::infinity();  // -inf: none
  std::uint32_t patches = 0;   // SFA only
  double log2_fidelity = 0.0;  // simulation fidelity (SFA) or device fidelity (Q)
};

inline constexpr double kBytesPerAmplitude = 16.0;

/// T_Q = m / F^2 with F from the fidelity model.
RuntimeEstimate t_quantum(double n, double m, const FidelityParams& params);

/// T_SA = m n 2^n; memory 16 * 2^n bytes.
RuntimeEstimate t_sa(double n, double m);

/// log2 of T_Q * n * 2^(n(1 - 2 gamma) - lambda m (3n - sqrt n)), the second
/// algebraic form of T_SA.
double log2_t_sa_via_quantum(double n, double m, const FidelityParams& params);

struct ThresholdDepth {
  bool bounded = true;  // false when lambda == 0: SA never overtakes
  double m_th = 0.0;
  double asymptote = 0.0;  // (1 - 2 gamma) / (3 lambda), the n -> inf limit
};

/// m_th(n) = (n(1 - 2 gamma) + log2 n) / (lambda (3n - sqrt n)).
ThresholdDepth m_threshold(double n, const FidelityParams& params);

struct SfaCostConfig {
  double cut_constant = 0.24;  // B, set by the chip's grid layout
  std::vector<std::uint32_t> allowed_patches = default_patch_list();

  static std::vector<std::uint32_t> default_patch_list();
};

/// k(p) = 1/2 + 1/p; exact at p = 2 (k = 1) and p = 4 (k = 3/4).
double k_factor(std::uint32_t p);

/// log2 of the number of cross-gate paths, k p B m sqrt(n).
double log2_sfa_paths(double n, double m, std::uint32_t p, const SfaCostConfig& config);

/// T_SFA = 2^(k p B m sqrt n) F (p 2^(n/p) + min(F^-2, 2^n)) at a given
/// simulation fidelity.
RuntimeEstimate t_sfa_at_fidelity(double n, double m, std::uint32_t p, double log2_f, const SfaCostConfig& config);

/// T_SFA at its optimal simulation fidelity F^-2 = p 2^(n/p), or F = 1 when
/// n <= log2(p) / (1 - 1/p). Memory 16 * 2p * 2^(n/p) bytes. The optimum
/// does not depend on the device fidelity parameters.
RuntimeEstimate t_sfa(double n, double m, std::uint32_t p, const SfaCostConfig& config);

struct SfaChoice {
  enum class Status { Feasible, Infeasible };
  Status status = Status::Infeasible;
  RuntimeEstimate estimate;  // valid when feasible

  bool feasible() const { return status == Status::Feasible; }
};

/// Cheapest allowed p whose memory fits the budget.
SfaChoice optimal_sfa(double n, double m, const SfaCostConfig& config, double memory_budget_bytes);

/// Cheapest allowed p ignoring memory.
RuntimeEstimate optimal_sfa_unconstrained(double n, double m, const SfaCostConfig& config);

/// alpha = log T_C / log T_Q - 1. Throws std::domain_error unless log2 T_Q > 0.
double alpha(double log2_tc, double log2_tq);

/// Optional depth-limited algorithm curve n 2^(c m^2). The constant is
/// unknown, so the curve stays off unless a caller supplies c.
struct BgmCurve {
  bool enabled = false;
  double exponent_c = 0.0;
};

double log2_t_bgm(double n, double m, const BgmCurve& curve);

}  // namespace rcs
