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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <sstream>

#include "rcs/circuit.hpp"
#include "rcs/errors.hpp"
#include "rcs/random.hpp"
#include "rcs/statevec.hpp"
#include "rcs/xeb.hpp"

namespace rcs {
namespace {

// Dense reference: builds the full 2^n x 2^n operator of each gate from
// Kronecker structure on basis bits and multiplies it into the state.
std::vector<cplx> dense_apply(const std::vector<cplx>& psi, const Gate& g, std::uint32_t n) {
  const std::size_t dim = std::size_t{1} << n;
  std::vector<cplx> out(dim, 0.0);
  for (std::size_t row = 0; row < dim; ++row) {
    for (std::size_t col = 0; col < dim; ++col) {
      cplx element;
      if (g.arity() == 1) {
        const Qubit q = g.targets[0];
        if ((row & ~(std::size_t{1} << q)) != (col & ~(std::size_t{1} << q))) continue;
        element = g.matrix2()[((row >> q) & 1) * 2 + ((col >> q) & 1)];
      } else {
        const Qubit a = g.targets[0], b = g.targets[1];
        const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
        if ((row & ~mask) != (col & ~mask)) continue;
        const std::size_t r = 2 * ((row >> a) & 1) + ((row >> b) & 1);
        const std::size_t c = 2 * ((col >> a) & 1) + ((col >> b) & 1);
        element = g.matrix4()[r * 4 + c];
      }
      out[row] += element * psi[col];
    }
  }
  return out;
}

std::vector<cplx> dense_simulate(const Circuit& c) {
  const std::uint32_t n = c.num_qubits();
  std::vector<cplx> psi(std::size_t{1} << n, 0.0);
  psi[0] = 1.0;
  for (const Cycle& cyc : c.cycles()) {
    for (const Gate& g : cyc.single_layer) psi = dense_apply(psi, g, n);
    for (const Gate& g : cyc.two_qubit_layer) psi = dense_apply(psi, g, n);
  }
  return psi;
}

TEST(StateVector, XOnQubitZeroFlipsLowBit) {
  StateVector s(3);
  s.apply(Gate::single(GateKind::X, 0));
  EXPECT_EQ(s.amplitude(1), cplx(1.0));
  EXPECT_EQ(s.amplitude(0), cplx(0.0));
}

TEST(StateVector, CzLeavesZeroStateAlone) {
  StateVector s(2);
  s.apply(Gate::pair(GateKind::CZ, 0, 1));
  EXPECT_EQ(s.amplitude(0), cplx(1.0));
  EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
}

TEST(StateVector, ZeroStateAmplitude) {
  const StateVector s(5);
  EXPECT_EQ(s.amplitude(0), cplx(1.0, 0.0));
  for (std::uint64_t x = 1; x < 32; ++x) EXPECT_EQ(s.amplitude(x), cplx(0.0));
}

TEST(StateVector, RandomGatesPreserveNorm) {
  Rng rng(17);
  std::vector<cplx> amps(8);
  for (auto& a : amps) a = cplx(uniform_unit(rng) - 0.5, uniform_unit(rng) - 0.5);
  StateVector s = StateVector::from_amplitudes(amps);
  s.normalize();
  const GateKind kinds[] = {GateKind::SqrtX, GateKind::SqrtY, GateKind::SqrtW, GateKind::H};
  for (int k = 0; k < 50; ++k) {
    if (k % 3 == 0) {
      s.apply(Gate::pair(k % 2 ? GateKind::CZ : GateKind::ISwap, k % 3 == 0 ? 0 : 1, 2));
    } else {
      s.apply(Gate::single(kinds[k % 4], static_cast<Qubit>(k % 3)));
    }
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
  }
}

TEST(StateVector, SqrtYLayerGivesUniformMagnitudes) {
  const std::uint32_t n = 6;
  StateVector s(n);
  for (Qubit q = 0; q < n; ++q) s.apply(Gate::single(GateKind::SqrtY, q));
  for (std::uint64_t x = 0; x < s.size(); ++x) EXPECT_NEAR(std::abs(s.amplitude(x)), std::pow(2.0, -double(n) / 2.0), 1e-14);
}

TEST(StateVector, TwoQubitIndexConventionMatchesDenseOracle) {
  // iSWAP is not symmetric under exchanging targets' roles once combined with
  // asymmetric states, so this pins the 2*bit(t0)+bit(t1) convention.
  Rng rng(3);
  std::vector<cplx> amps(16);
  for (auto& a : amps) a = cplx(uniform_unit(rng), uniform_unit(rng));
  StateVector s = StateVector::from_amplitudes(amps);
  Matrix4 m{};
  for (auto& e : m) e = cplx(uniform_unit(rng), uniform_unit(rng));
  s.apply_two(m, 3, 1);
  // Dense oracle with an arbitrary (non-unitary) matrix.
  std::vector<cplx> expected(16, 0.0);
  for (std::size_t row = 0; row < 16; ++row) {
    for (std::size_t col = 0; col < 16; ++col) {
      if ((row & ~std::size_t{10}) != (col & ~std::size_t{10})) continue;
      const std::size_t r = 2 * ((row >> 3) & 1) + ((row >> 1) & 1);
      const std::size_t c = 2 * ((col >> 3) & 1) + ((col >> 1) & 1);
      expected[row] += m[r * 4 + c] * amps[col];
    }
  }
  for (std::size_t x = 0; x < 16; ++x) EXPECT_NEAR(std::abs(s.amplitude(x) - expected[x]), 0.0, 1e-13);
}

TEST(Simulate, MatchesDenseOracleOnSmallCircuits) {
  for (auto [r, c] : {std::pair{2u, 2u}, std::pair{1u, 4u}, std::pair{2u, 3u}}) {
    for (GateKind two : {GateKind::CZ, GateKind::ISwap}) {
      GateSetConfig cfg;
      cfg.two_qubit = two;
      const Circuit circ = generate_circuit(build_grid(r, c), 7, cfg, r * 10 + c);
      const StateVector s = simulate(circ);
      const auto ref = dense_simulate(circ);
      for (std::size_t x = 0; x < ref.size(); ++x) EXPECT_NEAR(std::abs(s.amplitude(x) - ref[x]), 0.0, 1e-13);
    }
  }
}

TEST(Simulate, IdentityCycleKeepsZeroState) {
  const QubitGrid g = build_grid(2, 2);
  Cycle cyc;
  for (Qubit q = 0; q < 4; ++q) cyc.single_layer.push_back(Gate::single(GateKind::I, q));
  const StateVector s = simulate(Circuit(g, {cyc}, 0));
  EXPECT_EQ(s.amplitude(0), cplx(1.0));
  EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
}

TEST(Simulate, ProbabilitiesSumToOne) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const StateVector s = simulate(generate_circuit(build_grid(3, 3), 10, {}, seed));
    double total = 0.0;
    for (double p : s.probabilities()) total += p;
    EXPECT_NEAR(total, 1.0, 1e-10);
  }
}

TEST(Simulate, NormDriftAfterTwentyCyclesOnSixteenQubits) {
  const StateVector s = simulate(generate_circuit(build_grid(4, 4), 20, {}, 8));
  EXPECT_LT(std::abs(s.norm_squared() - 1.0), 1e-9);
}

TEST(Simulate, RespectsQubitCap) {
  const Circuit c = generate_circuit(build_grid(3, 4), 1, {}, 0);
  EXPECT_THROW(simulate(c, {10}), ResourceError);
}

TEST(Simulate, SmallSquareGridApproachesExponential) {
  // 2x2 grid: 16 outcomes per circuit, pooled over many circuits.
  std::vector<double> scaled;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const StateVector s = simulate(generate_circuit(build_grid(2, 2), 12, {}, seed));
    for (double p : s.probabilities()) scaled.push_back(16.0 * p);
  }
  double mean = 0.0;
  for (double v : scaled) mean += v / scaled.size();
  EXPECT_NEAR(mean, 1.0, 1e-12);
  // Haar states in dimension d have P(d p < x) = 1 - (1 - x/d)^(d-1).
  std::size_t below = 0;
  for (double v : scaled) below += v < 1.0;
  const double frac = double(below) / scaled.size();
  EXPECT_NEAR(frac, 1.0 - std::pow(1.0 - 1.0 / 16.0, 15.0), 0.03);
}

// Porter-Thomas onset for n in {12, 16}, m >= 12: KS against Exp(1) at
// significance 0.01, with the p-value averaged over 5 circuits.
TEST(Simulate, PorterThomasOnset) {
  for (auto [r, c] : {std::pair{3u, 4u}, std::pair{4u, 4u}}) {
    double mean_p = 0.0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const StateVector s = simulate(generate_circuit(build_grid(r, c), 14, {}, 100 + seed));
      const auto probs = s.probabilities();
      mean_p += ks_pvalue(porter_thomas_ks(probs), probs.size()) / 5.0;
    }
    EXPECT_GT(mean_p, 0.01) << r << "x" << c;
  }
}

TEST(Sample, ZeroStateGivesZeros) {
  const auto xs = sample(StateVector(4), 100, 1);
  ASSERT_EQ(xs.size(), 100u);
  for (auto x : xs) EXPECT_EQ(x, 0u);
}

TEST(Sample, DeterministicForSeed) {
  const StateVector s = simulate(generate_circuit(build_grid(2, 3), 6, {}, 1));
  EXPECT_EQ(sample(s, 1000, 42), sample(s, 1000, 42));
  EXPECT_NE(sample(s, 1000, 42), sample(s, 1000, 43));
}

TEST(Sample, UniformStateFrequenciesWithinBinomialBand) {
  const std::uint32_t n = 4;
  StateVector s(n);
  for (Qubit q = 0; q < n; ++q) s.apply(Gate::single(GateKind::H, q));
  const std::size_t count = 100000;
  std::vector<std::size_t> freq(16, 0);
  for (auto x : sample(s, count, 5)) ++freq[x];
  const double p = 1.0 / 16.0;
  const double sigma = std::sqrt(count * p * (1 - p));
  for (auto f : freq) EXPECT_NEAR(double(f), count * p, 5.0 * sigma);
}

TEST(Sample, ChiSquareAgainstBornRule) {
  const StateVector s = simulate(generate_circuit(build_grid(2, 4), 10, {}, 9));
  const std::size_t count = 200000;
  std::vector<double> freq(256, 0.0);
  for (auto x : sample(s, count, 77)) freq[x] += 1.0;
  double chi2 = 0.0;
  for (std::size_t x = 0; x < 256; ++x) {
    const double e = count * s.probability(x);
    chi2 += (freq[x] - e) * (freq[x] - e) / e;
  }
  // 255 degrees of freedom: mean 255, sd ~22.6; 5 sd bound.
  EXPECT_LT(chi2, 255.0 + 5.0 * std::sqrt(2.0 * 255.0));
}

TEST(Sample, TiesBreakTowardLowerIndex) {
  // Zero-probability outcomes are never drawn, even at cdf boundaries.
  const std::vector<double> probs{0.5, 0.0, 0.5, 0.0};
  const Sampler sampler(probs);
  Rng rng(1);
  for (int k = 0; k < 1000; ++k) {
    const auto x = sampler.draw(rng);
    EXPECT_TRUE(x == 0 || x == 2);
  }
}

TEST(AmplitudeIo, RoundTrip) {
  const StateVector s = simulate(generate_circuit(build_grid(2, 3), 5, {}, 4));
  std::stringstream buf;
  write_amplitudes(buf, s);
  const StateVector back = read_amplitudes(buf);
  ASSERT_EQ(back.num_qubits(), s.num_qubits());
  for (std::uint64_t x = 0; x < s.size(); ++x) EXPECT_EQ(back.amplitude(x), s.amplitude(x));
}

TEST(AmplitudeIo, TruncatedInputThrows) {
  std::stringstream buf;
  write_amplitudes(buf, StateVector(3));
  std::string data = buf.str();
  data.resize(data.size() - 5);
  std::stringstream in(data);
  EXPECT_THROW(read_amplitudes(in), FormatError);
}

TEST(AmplitudeCounter, TracksLiveStates) {
  const std::size_t before = amplitude_counter::live();
  {
    StateVector a(6);
    EXPECT_EQ(amplitude_counter::live(), before + 64);
    StateVector b = a;
    EXPECT_EQ(amplitude_counter::live(), before + 128);
  }
  EXPECT_EQ(amplitude_counter::live(), before);
}

}  // namespace
}  // namespace rcs
