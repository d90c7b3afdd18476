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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rcs/circuit.hpp"
#include "rcs/errors.hpp"
#include "rcs/patches.hpp"
#include "rcs/random.hpp"
#include "rcs/sfa.hpp"
#include "rcs/statevec.hpp"
#include "rcs/xeb.hpp"

namespace rcs {
namespace {

std::vector<std::uint64_t> all_bitstrings(std::uint32_t n) {
  std::vector<std::uint64_t> xs(std::uint64_t{1} << n);
  std::iota(xs.begin(), xs.end(), 0);
  return xs;
}

double max_diff(const std::vector<cplx>& a, const StateVector& s, const std::vector<std::uint64_t>& xs) {
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) d = std::max(d, std::abs(a[i] - s.amplitude(xs[i])));
  return d;
}

// Amplitude of a bitstring as the product of per-patch amplitudes.
cplx product_amplitude(const PatchDecomposition& d, const PathResult& r, std::uint64_t x) {
  cplx a = r.weight;
  for (std::uint32_t k = 0; k < d.num_patches(); ++k) {
    std::uint64_t local = 0;
    const auto& qs = d.patch_qubits(k);
    for (std::size_t i = 0; i < qs.size(); ++i) local |= ((x >> qs[i]) & 1) << i;
    a *= r.patches[k].amplitude(local);
  }
  return a;
}

TEST(Paths, OrdinalRoundTrip) {
  const PatchDecomposition d = cut_circuit(generate_circuit(build_grid(2, 4), 6, {}, 1), 2);
  for (std::uint64_t o = 0; o < d.path_count(); ++o) {
    const PathIndex p = path_from_ordinal(d, o);
    EXPECT_EQ(path_ordinal(d, p), o);
    ASSERT_EQ(p.digits.size(), d.cross_gates().size());
  }
  // Cross gate 0 is the least significant digit.
  EXPECT_EQ(path_from_ordinal(d, 1).digits[0], 1u);
}

TEST(Paths, NoCrossGatesMeansIndependentPatches) {
  // A single vertical layer never crosses the column cut.
  const QubitGrid g = build_grid(2, 2);
  Cycle cyc;
  cyc.orientation = Orientation::C;
  for (Qubit q = 0; q < 4; ++q) cyc.single_layer.push_back(Gate::single(q % 2 ? GateKind::SqrtX : GateKind::SqrtW, q));
  cyc.two_qubit_layer = {Gate::pair(GateKind::CZ, 0, 2)};
  const Circuit circ(g, {cyc}, 0);
  const PatchDecomposition d = cut_circuit(circ, 2);
  ASSERT_TRUE(d.cross_gates().empty());
  EXPECT_EQ(d.path_count(), 1u);
  const PathResult r = simulate_path(d, {});
  EXPECT_DOUBLE_EQ(r.weight, 1.0);
  const StateVector full = simulate(circ);
  for (std::uint64_t x = 0; x < 16; ++x) EXPECT_NEAR(std::abs(product_amplitude(d, r, x) - full.amplitude(x)), 0.0, 1e-14);
}

TEST(Paths, OneCrossCzSumsToFullAmplitudes) {
  const QubitGrid g = build_grid(2, 2);
  Cycle cyc;
  cyc.orientation = Orientation::A;
  for (Qubit q = 0; q < 4; ++q) cyc.single_layer.push_back(Gate::single(GateKind::SqrtY, q));
  cyc.two_qubit_layer = {Gate::pair(GateKind::CZ, 0, 1)};
  Cycle second = cyc;
  second.two_qubit_layer.clear();
  const Circuit circ(g, {cyc, second}, 0);
  const PatchDecomposition d = cut_circuit(circ, 2);
  ASSERT_EQ(d.cross_gates().size(), 1u);
  ASSERT_EQ(d.path_count(), 2u);
  const PathResult r0 = simulate_path(d, path_from_ordinal(d, 0));
  const PathResult r1 = simulate_path(d, path_from_ordinal(d, 1));
  const StateVector full = simulate(circ);
  for (std::uint64_t x = 0; x < 16; ++x) {
    const cplx sum = product_amplitude(d, r0, x) + product_amplitude(d, r1, x);
    EXPECT_NEAR(std::abs(sum - full.amplitude(x)), 0.0, 1e-14);
  }
}

TEST(Sfa, AllPathsMatchStateVectorOnEightQubits) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Circuit circ = generate_circuit(build_grid(2, 4), 8, {}, seed);
    const auto xs = all_bitstrings(8);
    const auto amps = sfa_amplitudes(cut_circuit(circ, 2), xs, PathSelection::all_paths());
    EXPECT_LT(max_diff(amps, simulate(circ), xs), 1e-10);
  }
}

TEST(Sfa, IswapAndFourPatches) {
  GateSetConfig cfg;
  cfg.two_qubit = GateKind::ISwap;
  const Circuit circ = generate_circuit(build_grid(2, 4), 5, cfg, 6);
  const auto xs = all_bitstrings(8);
  const StateVector full = simulate(circ);
  for (std::uint32_t p : {2u, 4u}) {
    const auto amps = sfa_amplitudes(cut_circuit(circ, p), xs, PathSelection::all_paths());
    EXPECT_LT(max_diff(amps, full, xs), 1e-10) << "p=" << p;
  }
}

TEST(Sfa, RandomBitstringsOnSixteenQubits) {
  const Circuit circ = generate_circuit(build_grid(4, 4), 6, {}, 12);
  Rng rng(5);
  std::vector<std::uint64_t> xs(1000);
  for (auto& x : xs) x = uniform_index(rng, 1u << 16);
  const auto amps = sfa_amplitudes(cut_circuit(circ, 2), xs, PathSelection::all_paths());
  EXPECT_LT(max_diff(amps, simulate(circ), xs), 1e-10);
}

TEST(Sfa, FullFractionEqualsAllPaths) {
  const Circuit circ = generate_circuit(build_grid(3, 4), 6, {}, 2);
  const PatchDecomposition d = cut_circuit(circ, 2);
  const auto xs = all_bitstrings(12);
  const auto a = sfa_amplitudes(d, xs, PathSelection::all_paths());
  const auto b = sfa_amplitudes(d, xs, PathSelection::subset(1.0, 99));
  EXPECT_EQ(a, b);
}

TEST(Sfa, DisjointSubsetsAddUp) {
  const Circuit circ = generate_circuit(build_grid(3, 4), 6, {}, 8);
  const PatchDecomposition d = cut_circuit(circ, 2);
  const auto xs = all_bitstrings(12);
  std::vector<std::uint64_t> even, odd, all;
  for (std::uint64_t o = 0; o < d.path_count(); ++o) (o % 3 == 0 ? even : odd).push_back(o);
  const auto a = sfa_amplitudes_for_paths(d, xs, even);
  const auto b = sfa_amplitudes_for_paths(d, xs, odd);
  const auto total = sfa_amplitudes(d, xs, PathSelection::all_paths());
  for (std::size_t i = 0; i < xs.size(); ++i) EXPECT_NEAR(std::abs(a[i] + b[i] - total[i]), 0.0, 1e-12);
}

TEST(Sfa, ThreadedSumWithinReassociationTolerance) {
  const Circuit circ = generate_circuit(build_grid(3, 4), 8, {}, 4);
  const PatchDecomposition d = cut_circuit(circ, 2);
  const auto xs = all_bitstrings(12);
  const auto serial = sfa_amplitudes(d, xs, PathSelection::all_paths());
  SfaOptions opts;
  opts.threads = 4;
  const auto parallel = sfa_amplitudes(d, xs, PathSelection::all_paths(), opts);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    EXPECT_LE(std::abs(serial[i] - parallel[i]), 1e-12 * std::max(1.0, std::abs(serial[i])));
  }
  // Single-threaded runs repeat bit for bit.
  EXPECT_EQ(serial, sfa_amplitudes(d, xs, PathSelection::all_paths()));
}

TEST(Sfa, PeakPatchMemoryIsTwoPTimesPatchSize) {
  const Circuit circ = generate_circuit(build_grid(3, 4), 5, {}, 3);
  for (std::uint32_t p : {2u, 4u}) {
    const PatchDecomposition d = cut_circuit(circ, p);
    amplitude_counter::reset_peak();
    const std::size_t base = amplitude_counter::live();
    SfaStats stats;
    sfa_amplitudes(d, all_bitstrings(12), PathSelection::all_paths(), {}, &stats);
    const double bound = 2.0 * p * std::exp2(12.0 / p);
    EXPECT_LE(double(amplitude_counter::peak() - base), bound) << "p=" << p;
    EXPECT_LE(double(stats.peak_patch_amplitudes), bound);
    EXPECT_EQ(stats.paths_evaluated, d.path_count());
  }
}

TEST(Selection, SubsetSizeAndDeterminism) {
  const PatchDecomposition d = cut_circuit(generate_circuit(build_grid(3, 4), 8, {}, 3), 2);
  const auto a = select_paths(d, PathSelection::subset(0.25, 7));
  EXPECT_EQ(a.size(), static_cast<std::size_t>(std::llround(0.25 * d.path_count())));
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
  EXPECT_EQ(std::adjacent_find(a.begin(), a.end()), a.end());
  EXPECT_EQ(a, select_paths(d, PathSelection::subset(0.25, 7)));
  EXPECT_NE(a, select_paths(d, PathSelection::subset(0.25, 8)));
}

TEST(Selection, RejectsBadFractions) {
  const PatchDecomposition d = cut_circuit(generate_circuit(build_grid(2, 2), 2, {}, 3), 2);
  EXPECT_THROW(select_paths(d, PathSelection::subset(0.0, 1)), std::invalid_argument);
  EXPECT_THROW(select_paths(d, PathSelection::subset(1.5, 1)), std::invalid_argument);
  EXPECT_THROW(select_paths(d, PathSelection::subset(1e-9, 1)), std::invalid_argument);
}

TEST(Sfa, PatchCapRaisesResourceError) {
  const PatchDecomposition d = cut_circuit(generate_circuit(build_grid(2, 4), 2, {}, 3), 2);
  SfaOptions opts;
  opts.max_patch_qubits = 3;
  EXPECT_THROW(sfa_amplitudes(d, all_bitstrings(8), PathSelection::all_paths(), opts), ResourceError);
}

struct PartialSumStats {
  double fidelity = 0.0;  // |<ideal|partial>|^2 / <partial|partial>
  double xeb = 0.0;       // sampled from the renormalized partial state
};

// Sums a quarter of the paths for `seeds` random 3x4 circuits of depth m.
PartialSumStats quarter_of_paths(std::uint32_t m, int seeds) {
  const std::uint32_t n = 12;
  const auto xs = all_bitstrings(n);
  PartialSumStats out;
  for (int s = 0; s < seeds; ++s) {
    const Circuit circ = generate_circuit(build_grid(3, 4), m, {}, 500 + s);
    const StateVector ideal = simulate(circ);
    const auto amps = sfa_amplitudes(cut_circuit(circ, 2), xs, PathSelection::subset(0.25, 900 + s));
    cplx overlap = 0.0;
    double norm = 0.0;
    for (std::size_t x = 0; x < xs.size(); ++x) {
      overlap += std::conj(ideal.amplitude(x)) * amps[x];
      norm += std::norm(amps[x]);
    }
    out.fidelity += std::norm(overlap) / norm / seeds;
    StateVector partial = StateVector::from_amplitudes(amps);
    partial.normalize();
    const auto draws = sample(partial, 5000, 1300 + s);
    out.xeb += xeb_estimate(ideal_probabilities(ideal, draws), n).f_xeb / seeds;
  }
  return out;
}

TEST(PathFraction, QuarterOfPathsGivesQuarterFidelity) {
  EXPECT_NEAR(quarter_of_paths(8, 20).fidelity, 0.25, 0.05);
}

TEST(PathFraction, XebTracksFidelityAtPorterThomasDepth) {
  EXPECT_NEAR(quarter_of_paths(12, 20).xeb, 0.25, 0.1);
}

// At depth 8 the 3x4 circuits are not yet Porter-Thomas distributed and the
// paths left out differ from the ideal circuit mostly by late diagonal
// phases, so XEB overstates the fidelity (measured near 0.48).
TEST(PathFraction, XebAtDepthEight) {
  EXPECT_NEAR(quarter_of_paths(8, 20).xeb, 0.25, 0.1);
}

}  // namespace
}  // namespace rcs
