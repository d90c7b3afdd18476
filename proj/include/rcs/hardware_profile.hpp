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

#include <iosfwd>
#include <string>
#include <string_view>

#include "rcs/cost_model.hpp"

namespace rcs {

enum class Provenance : std::uint8_t { Measured, Assumed };

std::string_view provenance_name(Provenance p);

struct ProfileConstant {
  double value = 0.0;
  Provenance provenance = Provenance::Assumed;
  std::string note;
};

/// Measured tensor-network runtime at a single circuit size. Off the anchor
/// point it is used only when `extrapolate` is set, scaling by
/// 2^(c (m sqrt n - m0 sqrt n0)).
struct TnAnchor {
  bool enabled = true;
  double n = 53.0;
  double m = 14.0;
  double anchor_seconds = 88.0;
  double anchor_samples = 1e6;
  bool extrapolate = false;
  double exponent_c = 0.0;
};

/// Seconds for `samples` samples at the anchor point. Throws
/// std::logic_error when the anchor is disabled.
double tn_runtime(const TnAnchor& anchor, double samples);

/// Seconds at (n, m). Throws std::domain_error away from the anchor unless
/// extrapolation is enabled.
double tn_runtime_at(const TnAnchor& anchor, double n, double m, double samples);

/// Converts dimensionless costs into seconds and bounds what is feasible.
struct HardwareProfile {
  std::string label = "default";
  ProfileConstant tau_q_seconds;
  ProfileConstant tau_sa_seconds;
  ProfileConstant tau_sfa_seconds;
  ProfileConstant memory_bytes;
  ProfileConstant cutoff_seconds;
  TnAnchor tn;

  /// Every value is an assumption:
  ///   tau_q     2e-4 s per unit of T_Q
  ///   tau_sa    flops_per_unit / sustained FLOPS, 8 / 1e15 s
  ///   tau_sfa   same as tau_sa
  ///   memory    2.5e17 bytes (secondary-storage-backed supercomputer)
  ///   cutoff    100 years
  static HardwareProfile defaults();
  /// tau_sa = tau_sfa = flops_per_unit / flops.
  static HardwareProfile from_flops(double flops, double flops_per_unit = 8.0);

  /// Throws std::invalid_argument unless every constant is positive.
  void validate() const;

  double tau(Algorithm a) const;
};

inline constexpr double kSecondsPerYear = 365.25 * 86400.0;

struct Runtime {
  double seconds = 0.0;
  double log2_seconds = 0.0;
};

/// R = tau * T for the estimate's algorithm (tau = 1 s for TN estimates,
/// which already carry seconds).
Runtime runtime(const HardwareProfile& profile, const RuntimeEstimate& estimate);

/// JSON with fields tau_q_seconds, tau_sa_seconds, tau_sfa_seconds,
/// memory_bytes, cutoff_seconds, each {"value", "provenance"[, "note"]},
/// plus optional "label" and "tn_anchor". Unknown keys are rejected.
HardwareProfile read_profile_json(std::istream& in);
std::string profile_to_json(const HardwareProfile& profile);

}  // namespace rcs
