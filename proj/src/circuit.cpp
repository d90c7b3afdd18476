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

#include "rcs/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rcs/errors.hpp"
#include "rcs/random.hpp"

namespace rcs {

namespace {

constexpr std::uint64_t kMaxQubits = std::numeric_limits<Qubit>::max();

Orientation horizontal_orientation(std::uint32_t row, std::uint32_t col) {
  return (row + col) % 2 == 0 ? Orientation::A : Orientation::B;
}

Orientation vertical_orientation(std::uint32_t row, std::uint32_t col) {
  return (row + col) % 2 == 0 ? Orientation::C : Orientation::D;
}

struct GateInfo {
  GateKind kind;
  std::string_view name;
  int arity;
};

constexpr std::array<GateInfo, 10> kGateTable{{
    {GateKind::I, "id", 1},
    {GateKind::X, "x", 1},
    {GateKind::Y, "y", 1},
    {GateKind::Z, "z", 1},
    {GateKind::H, "h", 1},
    {GateKind::SqrtX, "sqrt_x", 1},
    {GateKind::SqrtY, "sqrt_y", 1},
    {GateKind::SqrtW, "sqrt_w", 1},
    {GateKind::CZ, "cz", 2},
    {GateKind::ISwap, "iswap", 2},
}};

const GateInfo& info(GateKind kind) {
  return kGateTable[static_cast<std::size_t>(kind)];
}

}  // namespace

QubitGrid::QubitGrid(std::uint32_t rows, std::uint32_t cols) : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("grid dimensions must be positive");
  if (static_cast<std::uint64_t>(rows) * cols > kMaxQubits) {
    throw std::invalid_argument("grid too large for the qubit index type");
  }
  // Edges are listed in ascending (a, b) order.
  for (std::uint32_t r = 0; r < rows; ++r) {
    for (std::uint32_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges_.push_back({index(r, c), index(r, c + 1), horizontal_orientation(r, c)});
      if (r + 1 < rows) edges_.push_back({index(r, c), index(r + 1, c), vertical_orientation(r, c)});
    }
  }
}

std::vector<Edge> QubitGrid::edges(Orientation o) const {
  std::vector<Edge> out;
  for (const Edge& e : edges_) {
    if (e.orientation == o) out.push_back(e);
  }
  return out;
}

std::vector<Qubit> QubitGrid::neighbors(Qubit q) const {
  std::vector<Qubit> out;
  const std::uint32_t r = row_of(q);
  const std::uint32_t c = col_of(q);
  if (r > 0) out.push_back(index(r - 1, c));
  if (c > 0) out.push_back(index(r, c - 1));
  if (c + 1 < cols_) out.push_back(index(r, c + 1));
  if (r + 1 < rows_) out.push_back(index(r + 1, c));
  return out;
}

bool QubitGrid::are_neighbors(Qubit a, Qubit b) const {
  return orientation_of(a, b).has_value();
}

std::optional<Orientation> QubitGrid::orientation_of(Qubit a, Qubit b) const {
  if (a >= size() || b >= size()) return std::nullopt;
  if (a > b) std::swap(a, b);
  const std::uint32_t ra = row_of(a), ca = col_of(a);
  const std::uint32_t rb = row_of(b), cb = col_of(b);
  if (ra == rb && cb == ca + 1) return horizontal_orientation(ra, ca);
  if (ca == cb && rb == ra + 1) return vertical_orientation(ra, ca);
  return std::nullopt;
}

QubitGrid build_grid(std::uint32_t rows, std::uint32_t cols) { return QubitGrid(rows, cols); }

int gate_arity(GateKind kind) { return info(kind).arity; }

std::string_view gate_name(GateKind kind) { return info(kind).name; }

std::optional<GateKind> gate_from_name(std::string_view name) {
  for (const GateInfo& g : kGateTable) {
    if (g.name == name) return g.kind;
  }
  return std::nullopt;
}

Matrix2 single_qubit_matrix(GateKind kind) {
  using namespace std::complex_literals;
  const double s = std::numbers::sqrt2 / 2.0;
  switch (kind) {
    case GateKind::I: return {1.0, 0.0, 0.0, 1.0};
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Y: return {0.0, -1i, 1i, 0.0};
    case GateKind::Z: return {1.0, 0.0, 0.0, -1.0};
    case GateKind::H: return {s, s, s, -s};
    case GateKind::SqrtX: return {s, -1i * s, -1i * s, s};
    case GateKind::SqrtY: return {s, -s, s, s};
    case GateKind::SqrtW: {
      const cplx sqrt_i = std::polar(1.0, std::numbers::pi / 4);
      const cplx sqrt_minus_i = std::polar(1.0, -std::numbers::pi / 4);
      return {s, -s * sqrt_i, s * sqrt_minus_i, s};
    }
    default: break;
  }
  throw std::invalid_argument("not a single-qubit gate: " + std::string(gate_name(kind)));
}

Matrix4 two_qubit_matrix(GateKind kind) {
  using namespace std::complex_literals;
  Matrix4 m{};
  switch (kind) {
    case GateKind::CZ:
      m[0] = m[5] = m[10] = 1.0;
      m[15] = -1.0;
      return m;
    case GateKind::ISwap:
      m[0] = m[15] = 1.0;
      m[1 * 4 + 2] = 1i;
      m[2 * 4 + 1] = 1i;
      return m;
    default: break;
  }
  throw std::invalid_argument("not a two-qubit gate: " + std::string(gate_name(kind)));
}

Gate Gate::single(GateKind kind, Qubit q) {
  if (gate_arity(kind) != 1) throw std::invalid_argument("expected a single-qubit gate kind");
  return Gate{kind, {q, 0}};
}

Gate Gate::pair(GateKind kind, Qubit a, Qubit b) {
  if (gate_arity(kind) != 2) throw std::invalid_argument("expected a two-qubit gate kind");
  if (a == b) throw std::invalid_argument("two-qubit gate needs distinct targets");
  return Gate{kind, {a, b}};
}

void GateSetConfig::validate() const {
  if (single_qubit.empty()) throw std::invalid_argument("single-qubit gate set is empty");
  for (GateKind k : single_qubit) {
    if (gate_arity(k) != 1) {
      throw std::invalid_argument("gate set entry is not single-qubit: " + std::string(gate_name(k)));
    }
  }
  if (gate_arity(two_qubit) != 2) {
    throw std::invalid_argument("two-qubit gate kind expected, got " + std::string(gate_name(two_qubit)));
  }
}

Circuit::Circuit(QubitGrid grid, std::vector<Cycle> cycles, std::uint64_t seed)
    : grid_(std::move(grid)), cycles_(std::move(cycles)), seed_(seed) {
  const std::uint32_t n = grid_.size();
  std::vector<std::uint32_t> seen(n);
  for (std::size_t c = 0; c < cycles_.size(); ++c) {
    const Cycle& cyc = cycles_[c];
    const std::string where = "cycle " + std::to_string(c) + ": ";
    if (cyc.single_layer.size() != n) {
      throw std::invalid_argument(where + "single-qubit layer must cover all qubits");
    }
    for (std::uint32_t q = 0; q < n; ++q) {
      const Gate& g = cyc.single_layer[q];
      if (g.arity() != 1 || g.targets[0] != q) {
        throw std::invalid_argument(where + "single-qubit layer must list qubits in order");
      }
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (const Gate& g : cyc.two_qubit_layer) {
      if (g.arity() != 2) throw std::invalid_argument(where + "two-qubit layer holds a single-qubit gate");
      auto o = grid_.orientation_of(g.targets[0], g.targets[1]);
      if (!o) throw std::invalid_argument(where + "two-qubit gate on non-neighboring qubits");
      if (*o != cyc.orientation) throw std::invalid_argument(where + "gate orientation differs from the cycle's");
      if (seen[g.targets[0]]++ || seen[g.targets[1]]++) {
        throw std::invalid_argument(where + "two-qubit gates overlap");
      }
    }
  }
}

Circuit generate_circuit(const QubitGrid& grid, std::uint32_t cycles,
                         const GateSetConfig& config, std::uint64_t seed) {
  if (cycles == 0) throw std::invalid_argument("circuit needs at least one cycle");
  config.validate();
  Rng rng(seed);
  std::vector<Cycle> out(cycles);
  for (std::uint32_t c = 0; c < cycles; ++c) {
    Cycle& cyc = out[c];
    cyc.orientation = static_cast<Orientation>(c % 4);
    cyc.single_layer.reserve(grid.size());
    for (Qubit q = 0; q < grid.size(); ++q) {
      const auto pick = uniform_index(rng, config.single_qubit.size());
      cyc.single_layer.push_back(Gate::single(config.single_qubit[pick], q));
    }
    for (const Edge& e : grid.edges(cyc.orientation)) {
      cyc.two_qubit_layer.push_back(Gate::pair(config.two_qubit, e.a, e.b));
    }
  }
  return Circuit(grid, std::move(out), seed);
}

GateCounts count_gates(const Circuit& circuit) {
  GateCounts counts;
  for (const Cycle& cyc : circuit.cycles()) {
    counts.single += cyc.single_layer.size();
    counts.two_qubit += cyc.two_qubit_layer.size();
  }
  return counts;
}

void write_circuit(std::ostream& out, const Circuit& circuit) {
  out << "# grid " << circuit.grid().rows() << ' ' << circuit.grid().cols() << '\n';
  out << circuit.num_qubits() << ' ' << circuit.depth() << ' ' << circuit.seed() << '\n';
  for (std::size_t c = 0; c < circuit.cycles().size(); ++c) {
    const Cycle& cyc = circuit.cycles()[c];
    for (const Gate& g : cyc.single_layer) {
      out << c << ' ' << g.targets[0] << ' ' << gate_name(g.kind) << '\n';
    }
    for (const Gate& g : cyc.two_qubit_layer) {
      out << c << ' ' << g.targets[0] << ' ' << g.targets[1] << ' ' << gate_name(g.kind) << '\n';
    }
  }
}

std::string circuit_to_string(const Circuit& circuit) {
  std::ostringstream out;
  write_circuit(out, circuit);
  return out.str();
}

namespace {

std::uint64_t parse_uint(const std::string& token, std::size_t line_no) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    throw FormatError("line " + std::to_string(line_no) + ": expected an unsigned integer, got '" + token + "'");
  }
  try {
    return std::stoull(token);
  } catch (const std::out_of_range&) {
    throw FormatError("line " + std::to_string(line_no) + ": integer out of range");
  }
}

}  // namespace

Circuit read_circuit(std::istream& in) {
  std::optional<std::pair<std::uint32_t, std::uint32_t>> shape;
  std::optional<std::uint64_t> n, m, seed;
  std::vector<Cycle> cycles;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0][0] == '#') {
      if (tok.size() == 4 && tok[0] == "#" && tok[1] == "grid" && !n) {
        shape = {static_cast<std::uint32_t>(parse_uint(tok[2], line_no)),
                 static_cast<std::uint32_t>(parse_uint(tok[3], line_no))};
      }
      continue;
    }
    if (!n) {
      if (tok.size() != 3) throw FormatError("line " + std::to_string(line_no) + ": header must be 'n m seed'");
      n = parse_uint(tok[0], line_no);
      m = parse_uint(tok[1], line_no);
      seed = parse_uint(tok[2], line_no);
      cycles.resize(*m);
      continue;
    }
    if (tok.size() != 3 && tok.size() != 4) {
      throw FormatError("line " + std::to_string(line_no) + ": expected 'cycle qubit [qubit] gate'");
    }
    const auto c = parse_uint(tok[0], line_no);
    if (c >= *m) throw FormatError("line " + std::to_string(line_no) + ": cycle index out of range");
    const auto kind = gate_from_name(tok.back());
    if (!kind) throw FormatError("line " + std::to_string(line_no) + ": unknown gate '" + tok.back() + "'");
    const auto q1 = parse_uint(tok[1], line_no);
    if (q1 >= *n) throw FormatError("line " + std::to_string(line_no) + ": qubit out of range");
    if (tok.size() == 3) {
      if (gate_arity(*kind) != 1) throw FormatError("line " + std::to_string(line_no) + ": gate needs two targets");
      cycles[c].single_layer.push_back(Gate::single(*kind, static_cast<Qubit>(q1)));
    } else {
      const auto q2 = parse_uint(tok[2], line_no);
      if (q2 >= *n || q2 == q1) throw FormatError("line " + std::to_string(line_no) + ": bad second qubit");
      if (gate_arity(*kind) != 2) throw FormatError("line " + std::to_string(line_no) + ": gate takes one target");
      cycles[c].two_qubit_layer.push_back(Gate::pair(*kind, static_cast<Qubit>(q1), static_cast<Qubit>(q2)));
    }
  }
  if (!n) throw FormatError("missing 'n m seed' header");
  if (!shape) {
    const auto side = static_cast<std::uint32_t>(std::llround(std::sqrt(static_cast<double>(*n))));
    shape = (static_cast<std::uint64_t>(side) * side == *n) ? std::pair{side, side}
                                                             : std::pair{std::uint32_t{1}, static_cast<std::uint32_t>(*n)};
  }
  QubitGrid grid(shape->first, shape->second);
  if (grid.size() != *n) throw FormatError("grid shape does not match qubit count");
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    Cycle& cyc = cycles[c];
    std::stable_sort(cyc.single_layer.begin(), cyc.single_layer.end(),
                     [](const Gate& a, const Gate& b) { return a.targets[0] < b.targets[0]; });
    cyc.orientation = static_cast<Orientation>(c % 4);
    if (!cyc.two_qubit_layer.empty()) {
      const Gate& g = cyc.two_qubit_layer.front();
      auto o = grid.orientation_of(g.targets[0], g.targets[1]);
      if (!o) throw FormatError("cycle " + std::to_string(c) + ": two-qubit gate on non-neighbors");
      cyc.orientation = *o;
    }
  }
  try {
    return Circuit(std::move(grid), std::move(cycles), *seed);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Circuit circuit_from_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_circuit(in);
}

}  // namespace rcs
