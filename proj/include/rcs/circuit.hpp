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

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rcs {

using Qubit = std::uint32_t;
using cplx = std::complex<double>;

/// Row-major 2x2 and 4x4 complex matrices.
using Matrix2 = std::array<cplx, 4>;
using Matrix4 = std::array<cplx, 16>;

/// Coupler orientation of a lattice edge. Horizontal edges are split by the
/// parity of (row + col) of their left endpoint into A/B, vertical edges by
/// the parity of their top endpoint into C/D. Each class is a matching.
enum class Orientation : std::uint8_t { A = 0, B = 1, C = 2, D = 3 };

struct Edge {
  Qubit a;  // a < b
  Qubit b;
  Orientation orientation;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Rectangular lattice with row-major qubit numbering.
class QubitGrid {
 public:
  QubitGrid(std::uint32_t rows, std::uint32_t cols);

  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  std::uint32_t size() const { return rows_ * cols_; }

  Qubit index(std::uint32_t row, std::uint32_t col) const { return row * cols_ + col; }
  std::uint32_t row_of(Qubit q) const { return q / cols_; }
  std::uint32_t col_of(Qubit q) const { return q % cols_; }

  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<Edge> edges(Orientation o) const;
  std::vector<Qubit> neighbors(Qubit q) const;
  bool are_neighbors(Qubit a, Qubit b) const;
  /// Orientation of the edge joining a and b, if they are neighbors.
  std::optional<Orientation> orientation_of(Qubit a, Qubit b) const;

  friend bool operator==(const QubitGrid& x, const QubitGrid& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_;
  }

 private:
  std::uint32_t rows_;
  std::uint32_t cols_;
  std::vector<Edge> edges_;
};

/// Throws std::invalid_argument for zero dimensions or when rows*cols does
/// not fit the qubit index type.
QubitGrid build_grid(std::uint32_t rows, std::uint32_t cols);

enum class GateKind : std::uint8_t {
  I, X, Y, Z, H, SqrtX, SqrtY, SqrtW,  // single-qubit
  CZ, ISwap,                           // two-qubit
};

int gate_arity(GateKind kind);
std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_from_name(std::string_view name);

/// sqrt(X), sqrt(Y) and sqrt(W) follow the Sycamore conventions, e.g.
/// sqrt(Y) = [[1, -1], [1, 1]] / sqrt(2).
Matrix2 single_qubit_matrix(GateKind kind);
/// Two-qubit matrices are indexed by 2 * bit(targets[0]) + bit(targets[1]).
Matrix4 two_qubit_matrix(GateKind kind);

struct Gate {
  GateKind kind;
  std::array<Qubit, 2> targets{};

  static Gate single(GateKind kind, Qubit q);
  static Gate pair(GateKind kind, Qubit a, Qubit b);

  int arity() const { return gate_arity(kind); }
  Matrix2 matrix2() const { return single_qubit_matrix(kind); }
  Matrix4 matrix4() const { return two_qubit_matrix(kind); }

  friend bool operator==(const Gate& x, const Gate& y) {
    if (x.kind != y.kind || x.targets[0] != y.targets[0]) return false;
    return x.arity() == 1 || x.targets[1] == y.targets[1];
  }
};

struct GateSetConfig {
  std::vector<GateKind> single_qubit{GateKind::SqrtX, GateKind::SqrtY, GateKind::SqrtW};
  GateKind two_qubit = GateKind::CZ;

  /// Throws std::invalid_argument on an empty set or wrong-arity kinds.
  void validate() const;
};

struct Cycle {
  std::vector<Gate> single_layer;     // one gate per qubit, ascending qubit order
  std::vector<Gate> two_qubit_layer;  // disjoint gates of one orientation
  Orientation orientation = Orientation::A;

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Immutable after construction; the constructor checks the layer invariants.
class Circuit {
 public:
  Circuit(QubitGrid grid, std::vector<Cycle> cycles, std::uint64_t seed);

  const QubitGrid& grid() const { return grid_; }
  const std::vector<Cycle>& cycles() const { return cycles_; }
  std::uint64_t seed() const { return seed_; }
  std::uint32_t num_qubits() const { return grid_.size(); }
  std::uint32_t depth() const { return static_cast<std::uint32_t>(cycles_.size()); }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  QubitGrid grid_;
  std::vector<Cycle> cycles_;
  std::uint64_t seed_;
};

/// Cycle c uses orientation c mod 4 (A, B, C, D) with every coupler of that
/// orientation; single-qubit gates are drawn uniformly from config.
Circuit generate_circuit(const QubitGrid& grid, std::uint32_t cycles,
                         const GateSetConfig& config, std::uint64_t seed);

struct GateCounts {
  std::uint64_t single = 0;
  std::uint64_t two_qubit = 0;

  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

GateCounts count_gates(const Circuit& circuit);

// Text format:
//   # grid <rows> <cols>
//   <n> <m> <seed>
//   <cycle> <qubit> <gate_name>
//   <cycle> <qubit1> <qubit2> <gate_name>
// Lines starting with '#' are comments; the grid comment is optional and
// defaults to a square grid when n is a perfect square, else 1 x n.
void write_circuit(std::ostream& out, const Circuit& circuit);
std::string circuit_to_string(const Circuit& circuit);
Circuit read_circuit(std::istream& in);
Circuit circuit_from_string(std::string_view text);

}  // namespace rcs
