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
#include <span>
#include <vector>

namespace rcs {

struct Polyline {
  std::vector<std::array<double, 2>> points;
  bool closed = false;
  /// For label boundaries: the two labels on either side where the line
  /// starts (smaller first). Unused for iso-contours.
  std::array<int, 2> labels{-1, -1};
};

/// Boundaries between differently labelled cells of a grid sampled at
/// (xs[i], ys[j]), value index j * xs.size() + i. Marching squares on every
/// label's indicator field; shared segments are emitted once and chained
/// into polylines that break at junctions. Vertices sit halfway between
/// neighboring samples.
std::vector<Polyline> label_boundaries(std::span<const int> labels, std::span<const double> xs,
                                       std::span<const double> ys);

/// Marching-squares iso-lines of a scalar field at `level`, with linear
/// interpolation along cell edges.
std::vector<Polyline> iso_contours(std::span<const double> values, std::span<const double> xs,
                                   std::span<const double> ys, double level);

}  // namespace rcs
