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

#include <cstddef>
#include <vector>

#include "rcs/circuit.hpp"

namespace rcs {

/// One product term weight * (left ⊗ right) of an operator Schmidt
/// decomposition. `left` and `right` have unit Frobenius norm.
struct SchmidtTerm {
  Matrix2 left;
  Matrix2 right;
  double weight;
};

/// Singular values below this are treated as zero.
inline constexpr double kSchmidtCutoff = 1e-10;

bool is_unitary(const Matrix4& m, double tol = 1e-12);

/// Decomposes a two-qubit operator across the cut between its qubits. With
/// `first_target_left`, the left factor acts on the qubit that indexes the
/// high bit of the 4x4 matrix (targets[0]); otherwise on targets[1].
/// Terms come sorted by descending weight; their count is the Schmidt rank.
/// Throws std::invalid_argument for a non-unitary matrix.
std::vector<SchmidtTerm> schmidt_decompose(const Matrix4& m, bool first_target_left = true);
/// CZ and iSWAP use fixed bases in which every factor is proportional to a
/// unitary, so each SFA path is itself a scaled unitary circuit. Other kinds
/// fall back to the SVD.
std::vector<SchmidtTerm> schmidt_decompose(const Gate& gate, bool first_target_left = true);

std::size_t schmidt_rank(const Matrix4& m);

/// sum_k weight_k * left_k ⊗ right_k, in the same index convention as the
/// decomposed matrix.
Matrix4 reconstruct(const std::vector<SchmidtTerm>& terms, bool first_target_left = true);

}  // namespace rcs
