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

#include "rcs/xeb.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "rcs/csv.hpp"
#include "rcs/random.hpp"

namespace rcs {

namespace {

struct Moments {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;  // Welford running sum of squared deviations

  void add(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("probabilities must lie in [0, 1]");
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }
};

XebResult finish(const Moments& mom, std::uint32_t n) {
  if (mom.count == 0) throw std::invalid_argument("xeb_estimate: no samples");
  const double scale = std::exp2(static_cast<double>(n));
  XebResult r;
  r.n_samples = mom.count;
  r.n_qubits = n;
  r.f_xeb = scale * mom.mean - 1.0;
  if (mom.count > 1) {
    const double var = mom.m2 / static_cast<double>(mom.count - 1);
    r.std_err = scale * std::sqrt(var / static_cast<double>(mom.count));
  }
  return r;
}

}  // namespace

XebResult xeb_estimate(std::span<const double> ideal_probs, std::uint32_t n) {
  Moments mom;
  for (double p : ideal_probs) mom.add(p);
  return finish(mom, n);
}

XebResult xeb_estimate(std::span<const std::vector<double>> per_circuit_probs, std::uint32_t n) {
  Moments mom;
  for (const auto& probs : per_circuit_probs)
    for (double p : probs) mom.add(p);
  return finish(mom, n);
}

std::vector<double> ideal_probabilities(const StateVector& ideal, std::span<const std::uint64_t> bitstrings) {
  std::vector<double> out(bitstrings.size());
  for (std::size_t i = 0; i < bitstrings.size(); ++i) out[i] = ideal.probability(bitstrings[i]);
  return out;
}

SamplePlan required_samples(double fidelity) {
  if (!(fidelity > 0.0 && fidelity <= 1.0)) throw std::invalid_argument("target fidelity must lie in (0, 1]");
  const double inv_sq = 1.0 / (fidelity * fidelity);
  // Absorb one-ulp noise so that F = 0.01 gives exactly 10^4.
  const double n_s = std::ceil(inv_sq * (1.0 - 1e-12));
  SamplePlan plan;
  plan.target_fidelity = fidelity;
  plan.n_s = static_cast<std::uint64_t>(n_s);
  plan.sigma = 1.0 / std::sqrt(n_s);
  return plan;
}

std::vector<std::uint64_t> depolarized_sample(const StateVector& state, double fidelity, std::size_t count,
                                              std::uint64_t seed) {
  if (!(fidelity >= 0.0 && fidelity <= 1.0)) throw std::invalid_argument("fidelity must lie in [0, 1]");
  if (count == 0) throw std::invalid_argument("sample count must be positive");
  const Sampler sampler(state);
  Rng draws(seed);
  Rng coin(derive_seed(seed, 1));
  const std::uint64_t dim = state.size();
  std::vector<std::uint64_t> out(count);
  for (auto& x : out) {
    const bool ideal = uniform_unit(coin) < fidelity;
    x = ideal ? sampler.draw(draws) : uniform_index(draws, dim);
  }
  return out;
}

double porter_thomas_ks(std::span<const double> probs) {
  if (probs.empty()) throw std::invalid_argument("porter_thomas_ks: empty distribution");
  double total = 0.0;
  for (double p : probs) total += p;
  if (std::abs(total - 1.0) > 1e-8) throw std::invalid_argument("probabilities must sum to 1");
  const double scale = static_cast<double>(probs.size());
  std::vector<double> x(probs.begin(), probs.end());
  for (double& v : x) v *= scale;
  std::sort(x.begin(), x.end());
  const double count = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double cdf = -std::expm1(-x[i]);
    d = std::max({d, static_cast<double>(i + 1) / count - cdf, cdf - static_cast<double>(i) / count});
  }
  return d;
}

double ks_pvalue(double d, std::size_t count) {
  const double sn = std::sqrt(static_cast<double>(count));
  const double lambda = (sn + 0.12 + 0.11 / sn) * d;
  if (lambda < 1e-3) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = sign * std::exp(-2.0 * j * j * lambda * lambda);
    sum += term;
    if (std::abs(term) < 1e-16) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

void write_xeb_csv(std::ostream& out, std::span<const XebRunRecord> records) {
  out << "n,m,seed,f,n_samples,f_xeb,std_err\n";
  for (const XebRunRecord& r : records) {
    out << r.n << ',' << r.m << ',' << r.seed << ',' << format_double(r.f) << ',' << r.n_samples << ','
        << format_double(r.f_xeb) << ',' << format_double(r.std_err) << '\n';
  }
}

}  // namespace rcs
