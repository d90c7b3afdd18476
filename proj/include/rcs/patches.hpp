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
#include <vector>

#include "rcs/circuit.hpp"
#include "rcs/schmidt.hpp"

namespace rcs {

/// A two-qubit gate whose qubits sit in adjacent patches.
struct CrossGate {
  std::uint32_t cycle;
  Gate gate;
  std::uint32_t rank;          // Schmidt rank across the cut
  std::uint32_t left_patch;    // right patch is left_patch + 1
  Qubit left_qubit;
  Qubit right_qubit;
  std::vector<SchmidtTerm> terms;  // left factor acts on left_qubit
};

/// A gate acting entirely inside one patch (global qubit indices).
struct PatchGate {
  std::uint32_t cycle;
  Gate gate;
};

/// Circuit split into p contiguous vertical slabs of columns. Slab widths
/// differ by at most one column. Immutable after construction.
class PatchDecomposition {
 public:
  PatchDecomposition(Circuit circuit, std::uint32_t num_patches);

  const Circuit& circuit() const { return circuit_; }
  std::uint32_t num_patches() const { return num_patches_; }
  std::uint32_t patch_of(Qubit q) const { return patch_of_[q]; }
  /// Position of q among its patch's qubits (ascending global order).
  Qubit local_index(Qubit q) const { return local_index_[q]; }
  const std::vector<Qubit>& patch_qubits(std::uint32_t patch) const { return patch_qubits_[patch]; }

  const std::vector<CrossGate>& cross_gates() const { return cross_; }
  /// Single- and two-qubit gates internal to a patch, in circuit order, with
  /// global qubit targets.
  const std::vector<PatchGate>& internal_gates(std::uint32_t patch) const { return internal_[patch]; }

  /// prod of cross-gate ranks; saturates at UINT64_MAX.
  std::uint64_t path_count() const;
  double log2_path_count() const;

 private:
  Circuit circuit_;
  std::uint32_t num_patches_;
  std::vector<std::uint32_t> patch_of_;
  std::vector<Qubit> local_index_;
  std::vector<std::vector<Qubit>> patch_qubits_;
  std::vector<CrossGate> cross_;
  std::vector<std::vector<PatchGate>> internal_;
};

/// Throws std::invalid_argument unless 2 <= p <= cols.
PatchDecomposition cut_circuit(const Circuit& circuit, std::uint32_t p);

}  // namespace rcs
