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

#include "rcs/cost_model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rcs/logmath.hpp"

namespace rcs {

namespace {

void require_positive(double n, double m) {
  if (!(n >= 1.0)) throw std::invalid_argument("cost model needs n >= 1");
  if (!(m >= 1.0)) throw std::invalid_argument("cost model needs m >= 1");
}

}  // namespace

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Q: return "Q";
    case Algorithm::SA: return "SA";
    case Algorithm::SFA: return "SFA";
    case Algorithm::TN: return "TN";
  }
  return "?";
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
  for (Algorithm a : {Algorithm::Q, Algorithm::SA, Algorithm::SFA, Algorithm::TN}) {
    if (algorithm_name(a) == name) return a;
  }
  return std::nullopt;
}

RuntimeEstimate t_quantum(double n, double m, const FidelityParams& params) {
  require_positive(n, m);
  RuntimeEstimate e;
  e.algorithm = Algorithm::Q;
  e.log2_fidelity = log2_fidelity(params, n, m);
  e.log2_t = std::log2(m) - 2.0 * e.log2_fidelity;
  return e;
}

RuntimeEstimate t_sa(double n, double m) {
  require_positive(n, m);
  RuntimeEstimate e;
  e.algorithm = Algorithm::SA;
  e.log2_t = std::log2(m) + std::log2(n) + n;
  e.log2_memory_bytes = std::log2(kBytesPerAmplitude) + n;
  return e;
}

double log2_t_sa_via_quantum(double n, double m, const FidelityParams& params) {
  const double tq = t_quantum(n, m, params).log2_t;
  return tq + std::log2(n) + n * (1.0 - 2.0 * params.gamma) - params.lambda * m * (3.0 * n - std::sqrt(n));
}

ThresholdDepth m_threshold(double n, const FidelityParams& params) {
  if (!(n >= 1.0)) throw std::invalid_argument("m_threshold needs n >= 1");
  ThresholdDepth t;
  if (params.lambda == 0.0) {
    t.bounded = false;
    t.m_th = std::numeric_limits<double>::infinity();
    t.asymptote = std::numeric_limits<double>::infinity();
    return t;
  }
  t.m_th = (n * (1.0 - 2.0 * params.gamma) + std::log2(n)) / (params.lambda * (3.0 * n - std::sqrt(n)));
  t.asymptote = (1.0 - 2.0 * params.gamma) / (3.0 * params.lambda);
  return t;
}

std::vector<std::uint32_t> SfaCostConfig::default_patch_list() {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p <= 64; ++p) out.push_back(p);
  return out;
}

double k_factor(std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("SFA needs at least 2 patches");
  return 0.5 + 1.0 / static_cast<double>(p);
}

double log2_sfa_paths(double n, double m, std::uint32_t p, const SfaCostConfig& config) {
  return k_factor(p) * static_cast<double>(p) * config.cut_constant * m * std::sqrt(n);
}

RuntimeEstimate t_sfa_at_fidelity(double n, double m, std::uint32_t p, double log2_f, const SfaCostConfig& config) {
  require_positive(n, m);
  if (!(log2_f <= 0.0)) throw std::invalid_argument("simulation fidelity must be at most 1");
  const double pd = static_cast<double>(p);
  const double patch_term = std::log2(pd) + n / pd;           // log2(p 2^(n/p))
  const double amplitude_term = std::min(-2.0 * log2_f, n);   // log2 min(F^-2, 2^n)
  RuntimeEstimate e;
  e.algorithm = Algorithm::SFA;
  e.patches = p;
  e.log2_fidelity = log2_f;
  e.log2_t = log2_sfa_paths(n, m, p, config) + log2_f + log2_add(patch_term, amplitude_term);
  e.log2_memory_bytes = std::log2(kBytesPerAmplitude * 2.0 * pd) + n / pd;
  return e;
}

RuntimeEstimate t_sfa(double n, double m, std::uint32_t p, const SfaCostConfig& config) {
  const double pd = static_cast<double>(p);
  if (p < 2) throw std::invalid_argument("SFA needs at least 2 patches");
  const bool interior = n > std::log2(pd) / (1.0 - 1.0 / pd);
  const double log2_f = interior ? -0.5 * (std::log2(pd) + n / pd) : 0.0;
  return t_sfa_at_fidelity(n, m, p, log2_f, config);
}

SfaChoice optimal_sfa(double n, double m, const SfaCostConfig& config, double memory_budget_bytes) {
  if (!(memory_budget_bytes > 0.0)) throw std::invalid_argument("memory budget must be positive");
  const double log2_budget = std::log2(memory_budget_bytes);
  SfaChoice best;
  for (std::uint32_t p : config.allowed_patches) {
    const RuntimeEstimate e = t_sfa(n, m, p, config);
    if (e.log2_memory_bytes > log2_budget) continue;
    if (!best.feasible() || e.log2_t < best.estimate.log2_t) {
      best.status = SfaChoice::Status::Feasible;
      best.estimate = e;
    }
  }
  return best;
}

RuntimeEstimate optimal_sfa_unconstrained(double n, double m, const SfaCostConfig& config) {
  const SfaChoice c = optimal_sfa(n, m, config, std::numeric_limits<double>::max());
  if (!c.feasible()) throw std::invalid_argument("SFA config has no allowed patch counts");
  return c.estimate;
}

double alpha(double log2_tc, double log2_tq) {
  if (!(log2_tq > 0.0)) throw std::domain_error("alpha needs T_Q > 1");
  return log2_tc / log2_tq - 1.0;
}

double log2_t_bgm(double n, double m, const BgmCurve& curve) {
  if (!curve.enabled) throw std::logic_error("BGM cost curve is disabled");
  return std::log2(n) + curve.exponent_c * m * m;
}

}  // namespace rcs
