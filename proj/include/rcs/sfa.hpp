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
#include <span>
#include <vector>

#include "rcs/patches.hpp"
#include "rcs/statevec.hpp"

namespace rcs {

/// One Schmidt-term choice per cross gate; digit i < rank of cross gate i.
/// Paths are ordered by a mixed-radix ordinal with cross gate 0 as the
/// least significant digit.
struct PathIndex {
  std::vector<std::uint32_t> digits;

  friend bool operator==(const PathIndex&, const PathIndex&) = default;
};

PathIndex path_from_ordinal(const PatchDecomposition& decomp, std::uint64_t ordinal);
std::uint64_t path_ordinal(const PatchDecomposition& decomp, const PathIndex& path);

/// Per-patch states after applying the internal gates and the path-selected
/// Schmidt factors, plus the product of the selected term weights.
struct PathResult {
  std::vector<StateVector> patches;
  double weight = 1.0;
};

/// Throws ResourceError if a patch exceeds options.max_qubits.
PathResult simulate_path(const PatchDecomposition& decomp, const PathIndex& path,
                         const SimulationOptions& options = {});

/// Which paths to sum: all of them, or round(f * total) paths drawn
/// uniformly without replacement from a seeded stream.
struct PathSelection {
  double fraction = 1.0;
  std::uint64_t seed = 0;
  bool all = true;

  static PathSelection all_paths() { return {}; }
  static PathSelection subset(double fraction, std::uint64_t seed) { return {fraction, seed, false}; }
};

/// Ascending path ordinals for a selection. Throws std::invalid_argument for
/// f outside (0, 1] or an empty subset.
std::vector<std::uint64_t> select_paths(const PatchDecomposition& decomp, const PathSelection& selection);

struct SfaOptions {
  std::uint32_t max_patch_qubits = 26;
  /// Worker threads. With 1, sums run in ascending path order and are
  /// bit-reproducible; otherwise chunks are merged in chunk order.
  unsigned threads = 1;
};

struct SfaStats {
  std::uint64_t paths_evaluated = 0;
  std::size_t peak_patch_amplitudes = 0;
};

/// amplitude(x) = sum over selected paths of weight * prod_k a_k(x restricted to patch k).
std::vector<cplx> sfa_amplitudes(const PatchDecomposition& decomp, std::span<const std::uint64_t> bitstrings,
                                 const PathSelection& selection, const SfaOptions& options = {},
                                 SfaStats* stats = nullptr);

/// Same as above for an explicit list of path ordinals.
std::vector<cplx> sfa_amplitudes_for_paths(const PatchDecomposition& decomp,
                                           std::span<const std::uint64_t> bitstrings,
                                           std::span<const std::uint64_t> path_ordinals,
                                           const SfaOptions& options = {}, SfaStats* stats = nullptr);

}  // namespace rcs
