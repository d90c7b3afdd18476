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
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcs/contour.hpp"
#include "rcs/cost_model.hpp"
#include "rcs/fidelity_model.hpp"
#include "rcs/hardware_profile.hpp"

namespace rcs {

enum class RegionLabel : std::uint8_t {
  QuantumAdvantage,
  ClassicalSa,
  ClassicalSfa,
  ClassicalTn,
  QuantumInfeasible,
  BelowMinDepth,
};

std::string_view region_label_name(RegionLabel label);
std::optional<RegionLabel> region_label_from_name(std::string_view name);

struct FrontierConfig {
  SfaCostConfig sfa;
  double min_depth = 5.0;  // cells with m <= min_depth are not classified
  bool include_sa = true;
  bool include_sfa = true;
  bool include_tn = true;
};

struct CellRecord {
  double n = 0.0;
  double m = 0.0;
  RegionLabel label = RegionLabel::BelowMinDepth;
  double log2_rq_seconds = 0.0;
  // Fastest classical runtime that fits in memory, +inf when none does.
  double log2_rc_seconds = std::numeric_limits<double>::infinity();
  std::optional<Algorithm> best_classical;
  // NaN where T_Q <= 1 leaves alpha undefined.
  double alpha_sa = 0.0;
  double alpha_sfa = 0.0;
};

/// Classical algorithms count when they fit the memory budget and finish
/// within the cutoff. Labels, in order of precedence:
///   BELOW_MIN_DEPTH     m <= min_depth
///   CLASSICAL_*         the fastest such algorithm is no slower than R_Q
///   QUANTUM_INFEASIBLE  R_Q above the cutoff
///   QUANTUM_ADVANTAGE   otherwise
/// alpha values depend on (n, m, params) only, never on the profile.
CellRecord classify_cell(double n, double m, const FidelityParams& params, const HardwareProfile& profile,
                         const FrontierConfig& config = {});

/// Cells are stored with n varying fastest: cell(i, j) = cells[j * n.size() + i].
struct RegionMap {
  std::vector<double> n_axis;
  std::vector<double> m_axis;
  std::vector<CellRecord> cells;

  const CellRecord& cell(std::size_t i_n, std::size_t j_m) const { return cells[j_m * n_axis.size() + i_n]; }
};

/// Throws std::invalid_argument unless both axes are nonempty and strictly
/// increasing.
RegionMap compute_map(const std::vector<double>& n_axis, const std::vector<double>& m_axis,
                      const FidelityParams& params, const HardwareProfile& profile, const FrontierConfig& config = {});

/// Distinct integers round(lo * ratio^k) up to hi.
std::vector<double> geometric_axis(double lo = 10.0, double hi = 1e4, double ratio = 1.05);
std::vector<double> linear_axis(double lo = 6.0, double hi = 1000.0, double step = 1.0);

struct Bisection {
  enum class Status { Crossing, NoCrossing };
  Status status = Status::NoCrossing;
  double m = std::numeric_limits<double>::quiet_NaN();

  bool found() const { return status == Status::Crossing; }
};

/// Locates the single flip of `predicate` on [lo, hi] to within `resolution`
/// (the midpoint of the final bracket is returned).
Bisection boundary_bisect(const std::function<bool(double)>& predicate, double lo, double hi,
                          double resolution = 0.5);

/// Depth above which T_SA < T_Q at width n, by bisection.
Bisection sa_threshold_bisect(double n, const FidelityParams& params, double lo = 1.0, double hi = 1e4);

struct SqrtDepthRow {
  double epsilon = 1.0;
  double n = 0.0;
  double m = 0.0;
  double seconds = 0.0;
  double log2_seconds = 0.0;
};

/// R_Q along m = ceil(sqrt n) for each error scaling; epsilon = 0 is a
/// noiseless device.
std::vector<SqrtDepthRow> sqrt_depth_curve(const std::vector<double>& n_values, const std::vector<double>& epsilons,
                                           const FidelityParams& params, const HardwareProfile& profile);

/// Error scaling at which R_Q(n, m) equals `seconds`; +inf when the fidelity
/// does not depend on epsilon.
double epsilon_for_quantum_runtime(double n, double m, const FidelityParams& params, const HardwareProfile& profile,
                                   double seconds);

struct RuntimeLevel {
  std::string name;
  double seconds = 0.0;
};

/// 1 day, 1 year and the profile cutoff.
std::vector<RuntimeLevel> default_runtime_levels(const HardwareProfile& profile);

/// Label boundaries of the map, vertices in (n, m).
std::vector<Polyline> map_boundaries(const RegionMap& map);

// CSV: one row per cell, columns
//   n,m,label,log2_rq_seconds,log2_rc_seconds,best_classical,alpha_sa,alpha_sfa
// with best_classical "none" when no classical algorithm fits.
void write_map_csv(std::ostream& out, const RegionMap& map);
RegionMap read_map_csv(std::istream& in);

/// JSON with the axes, label boundary polylines and R_Q iso-contours.
std::string map_contour_json(const RegionMap& map, const std::vector<RuntimeLevel>& levels = {});

enum class MapFormat : std::uint8_t { Csv, ContourJson };

/// Throws std::runtime_error when the destination cannot be written.
void export_map(const RegionMap& map, const std::filesystem::path& path, MapFormat format,
                const std::vector<RuntimeLevel>& levels = {});

}  // namespace rcs
