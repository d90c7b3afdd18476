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

#include "rcs/patches.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rcs {

PatchDecomposition::PatchDecomposition(Circuit circuit, std::uint32_t num_patches)
    : circuit_(std::move(circuit)), num_patches_(num_patches) {
  const QubitGrid& grid = circuit_.grid();
  if (num_patches < 2) throw std::invalid_argument("cut_circuit: need at least 2 patches");
  if (num_patches > grid.cols()) throw std::invalid_argument("cut_circuit: more patches than grid columns");

  const std::uint32_t n = grid.size();
  patch_of_.resize(n);
  local_index_.resize(n);
  patch_qubits_.resize(num_patches);
  internal_.resize(num_patches);
  for (Qubit q = 0; q < n; ++q) {
    const auto col = static_cast<std::uint64_t>(grid.col_of(q));
    const auto patch = static_cast<std::uint32_t>(col * num_patches / grid.cols());
    patch_of_[q] = patch;
    local_index_[q] = static_cast<Qubit>(patch_qubits_[patch].size());
    patch_qubits_[patch].push_back(q);
  }

  for (std::uint32_t c = 0; c < circuit_.depth(); ++c) {
    const Cycle& cyc = circuit_.cycles()[c];
    for (const Gate& g : cyc.single_layer) internal_[patch_of_[g.targets[0]]].push_back({c, g});
    for (const Gate& g : cyc.two_qubit_layer) {
      const std::uint32_t pa = patch_of_[g.targets[0]];
      const std::uint32_t pb = patch_of_[g.targets[1]];
      if (pa == pb) {
        internal_[pa].push_back({c, g});
        continue;
      }
      const bool first_left = pa < pb;
      CrossGate x{};
      x.cycle = c;
      x.gate = g;
      x.left_patch = first_left ? pa : pb;
      x.left_qubit = first_left ? g.targets[0] : g.targets[1];
      x.right_qubit = first_left ? g.targets[1] : g.targets[0];
      x.terms = schmidt_decompose(g, first_left);
      x.rank = static_cast<std::uint32_t>(x.terms.size());
      cross_.push_back(std::move(x));
    }
  }
}

std::uint64_t PatchDecomposition::path_count() const {
  std::uint64_t total = 1;
  for (const CrossGate& x : cross_) {
    if (total > std::numeric_limits<std::uint64_t>::max() / x.rank) return std::numeric_limits<std::uint64_t>::max();
    total *= x.rank;
  }
  return total;
}

double PatchDecomposition::log2_path_count() const {
  double bits = 0.0;
  for (const CrossGate& x : cross_) bits += std::log2(static_cast<double>(x.rank));
  return bits;
}

PatchDecomposition cut_circuit(const Circuit& circuit, std::uint32_t p) {
  return PatchDecomposition(circuit, p);
}

}  // namespace rcs
