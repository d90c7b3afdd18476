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

#include "rcs/contour.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace rcs {

namespace {

using Key = std::uint64_t;

// Collects deduplicated segments between edge keys and chains them.
class SegmentGraph {
 public:
  void add(Key a, Key b) {
    if (a == b) return;
    const auto k = std::minmax(a, b);
    if (!seen_.insert({k.first, k.second}).second) return;
    segments_.push_back({a, b});
    adjacency_[a].push_back(segments_.size() - 1);
    adjacency_[b].push_back(segments_.size() - 1);
  }

  template <typename Position>
  std::vector<Polyline> chain(Position position) const {
    std::vector<Polyline> out;
    std::vector<bool> used(segments_.size(), false);
    auto degree = [&](Key v) { return adjacency_.at(v).size(); };
    auto walk = [&](Key start, std::size_t first) {
      Polyline line;
      line.points.push_back(position(start));
      Key at = start;
      std::size_t seg = first;
      while (true) {
        used[seg] = true;
        const Key next = segments_[seg].first == at ? segments_[seg].second : segments_[seg].first;
        line.points.push_back(position(next));
        at = next;
        if (at == start) {
          line.closed = true;
          break;
        }
        if (degree(at) != 2) break;
        const auto& adj = adjacency_.at(at);
        const std::size_t cand = adj[0] == seg ? adj[1] : adj[0];
        if (used[cand]) break;
        seg = cand;
      }
      out.push_back(std::move(line));
      return start;
    };
    // Open chains start at endpoints and junctions.
    for (const auto& [v, adj] : adjacency_) {
      if (adj.size() == 2) continue;
      for (std::size_t s : adj) {
        if (!used[s]) walk(v, s);
      }
    }
    // What is left forms closed loops.
    for (std::size_t s = 0; s < segments_.size(); ++s) {
      if (!used[s]) walk(segments_[s].first, s);
    }
    return out;
  }

  const std::vector<std::pair<Key, Key>>& segments() const { return segments_; }

 private:
  std::set<std::pair<Key, Key>> seen_;
  std::vector<std::pair<Key, Key>> segments_;
  std::map<Key, std::vector<std::size_t>> adjacency_;
};

struct Square {
  std::size_t nx;
  std::size_t i;
  std::size_t j;

  // Corner sample indices c0..c3 counter-clockwise from (i, j).
  std::array<std::size_t, 4> corners() const {
    return {j * nx + i, j * nx + i + 1, (j + 1) * nx + i + 1, (j + 1) * nx + i};
  }
  // Edge keys e0 (bottom), e1 (right), e2 (top), e3 (left).
  std::array<Key, 4> edges() const {
    return {Key((j * nx + i) * 2), Key((j * nx + i + 1) * 2 + 1), Key(((j + 1) * nx + i) * 2),
            Key((j * nx + i) * 2 + 1)};
  }
};

// Endpoints (sample indices) of an edge key.
std::pair<std::size_t, std::size_t> edge_ends(Key key, std::size_t nx) {
  const std::size_t point = key / 2;
  return key % 2 == 0 ? std::pair{point, point + 1} : std::pair{point, point + nx};
}

// Emits segments for one square given inside flags. In the saddle case,
// `cut_even` selects cutting off corners c0 and c2 (else c1 and c3).
void emit(SegmentGraph& graph, const std::array<bool, 4>& in, const std::array<Key, 4>& e, bool cut_even) {
  std::vector<int> crossing;
  for (int k = 0; k < 4; ++k) {
    if (in[k] != in[(k + 1) % 4]) crossing.push_back(k);
  }
  if (crossing.size() == 2) {
    graph.add(e[crossing[0]], e[crossing[1]]);
  } else if (crossing.size() == 4) {
    // Corner c_k sits between edges e_(k-1) and e_k.
    if (cut_even) {
      graph.add(e[3], e[0]);
      graph.add(e[1], e[2]);
    } else {
      graph.add(e[0], e[1]);
      graph.add(e[2], e[3]);
    }
  }
}

void check_shape(std::size_t values, std::size_t nx, std::size_t ny) {
  if (values != nx * ny) throw std::invalid_argument("contour: value count does not match the axes");
}

}  // namespace

std::vector<Polyline> label_boundaries(std::span<const int> labels, std::span<const double> xs,
                                       std::span<const double> ys) {
  const std::size_t nx = xs.size(), ny = ys.size();
  check_shape(labels.size(), nx, ny);
  SegmentGraph graph;
  for (std::size_t j = 0; j + 1 < ny; ++j) {
    for (std::size_t i = 0; i + 1 < nx; ++i) {
      const Square sq{nx, i, j};
      const auto c = sq.corners();
      const std::array<int, 4> lab{labels[c[0]], labels[c[1]], labels[c[2]], labels[c[3]]};
      // Saddles keep the diagonal with the smaller minimum label connected,
      // a rule that does not depend on which indicator is being traced.
      const int key_even = std::min(lab[0], lab[2]);
      const int key_odd = std::min(lab[1], lab[3]);
      std::set<int> present(lab.begin(), lab.end());
      for (int l : present) {
        const std::array<bool, 4> in{lab[0] == l, lab[1] == l, lab[2] == l, lab[3] == l};
        emit(graph, in, sq.edges(), key_even > key_odd);
      }
    }
  }
  auto position = [&](Key key) {
    const auto [a, b] = edge_ends(key, nx);
    return std::array<double, 2>{(xs[a % nx] + xs[b % nx]) / 2.0, (ys[a / nx] + ys[b / nx]) / 2.0};
  };
  auto lines = graph.chain(position);
  // Recover the side labels from the first segment's start edge.
  for (Polyline& line : lines) {
    for (const auto& [a, b] : graph.segments()) {
      const auto pa = position(a);
      if (pa == line.points.front()) {
        const auto [s, t] = edge_ends(a, nx);
        line.labels = {std::min(labels[s], labels[t]), std::max(labels[s], labels[t])};
        break;
      }
      const auto pb = position(b);
      if (pb == line.points.front()) {
        const auto [s, t] = edge_ends(b, nx);
        line.labels = {std::min(labels[s], labels[t]), std::max(labels[s], labels[t])};
        break;
      }
    }
  }
  return lines;
}

std::vector<Polyline> iso_contours(std::span<const double> values, std::span<const double> xs,
                                   std::span<const double> ys, double level) {
  const std::size_t nx = xs.size(), ny = ys.size();
  check_shape(values.size(), nx, ny);
  SegmentGraph graph;
  for (std::size_t j = 0; j + 1 < ny; ++j) {
    for (std::size_t i = 0; i + 1 < nx; ++i) {
      const Square sq{nx, i, j};
      const auto c = sq.corners();
      const std::array<bool, 4> in{values[c[0]] > level, values[c[1]] > level, values[c[2]] > level,
                                   values[c[3]] > level};
      const double center = (values[c[0]] + values[c[1]] + values[c[2]] + values[c[3]]) / 4.0;
      // Saddle: if the center is inside, the inside diagonal stays joined,
      // so the outside corners get cut off.
      const bool cut_even = (center > level) != in[0];
      emit(graph, in, sq.edges(), cut_even);
    }
  }
  auto position = [&](Key key) {
    const auto [a, b] = edge_ends(key, nx);
    const double va = values[a], vb = values[b];
    const double t = (va == vb) ? 0.5 : std::clamp((level - va) / (vb - va), 0.0, 1.0);
    const double xa = xs[a % nx], xb = xs[b % nx], ya = ys[a / nx], yb = ys[b / nx];
    return std::array<double, 2>{xa + t * (xb - xa), ya + t * (yb - ya)};
  };
  return graph.chain(position);
}

}  // namespace rcs
