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

#include "rcs/frontier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rcs/csv.hpp"
#include "rcs/errors.hpp"
#include "rcs/logmath.hpp"

namespace rcs {

namespace {

constexpr std::array<std::string_view, 6> kLabelNames = {
    "QUANTUM_ADVANTAGE", "CLASSICAL_SA", "CLASSICAL_SFA", "CLASSICAL_TN", "QUANTUM_INFEASIBLE", "BELOW_MIN_DEPTH",
};

RegionLabel classical_label(Algorithm a) {
  switch (a) {
    case Algorithm::SA: return RegionLabel::ClassicalSa;
    case Algorithm::SFA: return RegionLabel::ClassicalSfa;
    case Algorithm::TN: return RegionLabel::ClassicalTn;
    case Algorithm::Q: break;
  }
  throw std::logic_error("quantum is not a classical algorithm");
}

double safe_alpha(double log2_tc, double log2_tq) {
  if (!(log2_tq > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return alpha(log2_tc, log2_tq);
}

// log2 seconds of the TN anchor at (n, m) for ceil(F^-2) samples, if defined.
std::optional<double> tn_log2_seconds(const TnAnchor& tn, double n, double m, double log2_f) {
  if (!tn.enabled) return std::nullopt;
  if (!(n == tn.n && m == tn.m) && !tn.extrapolate) return std::nullopt;
  const double inv_f2 = -2.0 * log2_f;
  double log2_samples;
  if (inv_f2 < 60.0) {
    const double samples = std::max(1.0, std::ceil(std::exp2(inv_f2) * (1.0 - 1e-12)));
    log2_samples = std::log2(samples);
  } else {
    log2_samples = inv_f2;
  }
  return std::log2(tn_runtime_at(tn, n, m, 1.0)) + log2_samples;
}

void check_axis(const std::vector<double>& axis, const char* name) {
  if (axis.empty()) throw std::invalid_argument(std::string(name) + " axis is empty");
  for (std::size_t i = 1; i < axis.size(); ++i) {
    if (!(axis[i] > axis[i - 1])) throw std::invalid_argument(std::string(name) + " axis must be strictly increasing");
  }
}

std::vector<int> label_grid(const RegionMap& map) {
  std::vector<int> labels;
  labels.reserve(map.cells.size());
  for (const CellRecord& c : map.cells) labels.push_back(static_cast<int>(c.label));
  return labels;
}

}  // namespace

std::string_view region_label_name(RegionLabel label) { return kLabelNames[static_cast<std::size_t>(label)]; }

std::optional<RegionLabel> region_label_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kLabelNames.size(); ++i) {
    if (kLabelNames[i] == name) return static_cast<RegionLabel>(i);
  }
  return std::nullopt;
}

CellRecord classify_cell(double n, double m, const FidelityParams& params, const HardwareProfile& profile,
                         const FrontierConfig& config) {
  CellRecord cell;
  cell.n = n;
  cell.m = m;
  const RuntimeEstimate tq = t_quantum(n, m, params);
  cell.log2_rq_seconds = runtime(profile, tq).log2_seconds;

  const RuntimeEstimate tsa = t_sa(n, m);
  cell.alpha_sa = safe_alpha(tsa.log2_t, tq.log2_t);
  cell.alpha_sfa = safe_alpha(optimal_sfa_unconstrained(n, m, config.sfa).log2_t, tq.log2_t);

  const double log2_memory = std::log2(profile.memory_bytes.value);
  const double log2_cutoff = std::log2(profile.cutoff_seconds.value);
  std::optional<Algorithm> best_feasible;
  double best_feasible_log2 = std::numeric_limits<double>::infinity();
  auto consider = [&](Algorithm a, double log2_seconds) {
    if (log2_seconds < cell.log2_rc_seconds) {
      cell.log2_rc_seconds = log2_seconds;
      cell.best_classical = a;
    }
    if (log2_seconds <= log2_cutoff && log2_seconds < best_feasible_log2) {
      best_feasible_log2 = log2_seconds;
      best_feasible = a;
    }
  };
  if (config.include_sa && tsa.log2_memory_bytes <= log2_memory) {
    consider(Algorithm::SA, runtime(profile, tsa).log2_seconds);
  }
  if (config.include_sfa) {
    const SfaChoice choice = optimal_sfa(n, m, config.sfa, profile.memory_bytes.value);
    if (choice.feasible()) consider(Algorithm::SFA, runtime(profile, choice.estimate).log2_seconds);
  }
  if (config.include_tn) {
    if (auto tn = tn_log2_seconds(profile.tn, n, m, tq.log2_fidelity)) consider(Algorithm::TN, *tn);
  }

  if (m <= config.min_depth) {
    cell.label = RegionLabel::BelowMinDepth;
  } else if (best_feasible && best_feasible_log2 <= cell.log2_rq_seconds) {
    cell.label = classical_label(*best_feasible);
  } else if (cell.log2_rq_seconds > log2_cutoff) {
    cell.label = RegionLabel::QuantumInfeasible;
  } else {
    cell.label = RegionLabel::QuantumAdvantage;
  }
  return cell;
}

RegionMap compute_map(const std::vector<double>& n_axis, const std::vector<double>& m_axis,
                      const FidelityParams& params, const HardwareProfile& profile, const FrontierConfig& config) {
  check_axis(n_axis, "n");
  check_axis(m_axis, "m");
  profile.validate();
  RegionMap map{n_axis, m_axis, {}};
  map.cells.reserve(n_axis.size() * m_axis.size());
  for (double m : m_axis) {
    for (double n : n_axis) map.cells.push_back(classify_cell(n, m, params, profile, config));
  }
  return map;
}

std::vector<double> geometric_axis(double lo, double hi, double ratio) {
  if (!(lo > 0.0) || !(hi >= lo) || !(ratio > 1.0)) throw std::invalid_argument("geometric axis needs 0 < lo <= hi, ratio > 1");
  std::vector<double> axis;
  for (double x = lo; x <= hi * (1.0 + 1e-12); x *= ratio) {
    const double r = std::round(x);
    if (axis.empty() || r > axis.back()) axis.push_back(r);
  }
  return axis;
}

std::vector<double> linear_axis(double lo, double hi, double step) {
  if (!(hi >= lo) || !(step > 0.0)) throw std::invalid_argument("linear axis needs lo <= hi, step > 0");
  std::vector<double> axis;
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  for (std::size_t k = 0; k < count; ++k) axis.push_back(lo + static_cast<double>(k) * step);
  return axis;
}

Bisection boundary_bisect(const std::function<bool(double)>& predicate, double lo, double hi, double resolution) {
  if (!(hi > lo) || !(resolution > 0.0)) throw std::invalid_argument("bisection needs lo < hi and resolution > 0");
  const bool at_lo = predicate(lo);
  if (predicate(hi) == at_lo) return {};
  while (hi - lo > resolution) {
    const double mid = 0.5 * (lo + hi);
    (predicate(mid) == at_lo ? lo : hi) = mid;
  }
  return {Bisection::Status::Crossing, 0.5 * (lo + hi)};
}

Bisection sa_threshold_bisect(double n, const FidelityParams& params, double lo, double hi) {
  return boundary_bisect(
      [&](double m) { return t_sa(n, m).log2_t < t_quantum(n, m, params).log2_t; }, lo, hi);
}

std::vector<SqrtDepthRow> sqrt_depth_curve(const std::vector<double>& n_values, const std::vector<double>& epsilons,
                                           const FidelityParams& params, const HardwareProfile& profile) {
  std::vector<SqrtDepthRow> rows;
  for (double eps : epsilons) {
    if (!(eps >= 0.0)) throw std::invalid_argument("error scale must be non-negative");
    const FidelityParams scaled = eps == 0.0 ? FidelityParams{} : scale_error(params, eps);
    for (double n : n_values) {
      SqrtDepthRow row;
      row.epsilon = eps;
      row.n = n;
      row.m = std::ceil(std::sqrt(n));
      const Runtime r = runtime(profile, t_quantum(n, row.m, scaled));
      row.seconds = r.seconds;
      row.log2_seconds = r.log2_seconds;
      rows.push_back(row);
    }
  }
  return rows;
}

double epsilon_for_quantum_runtime(double n, double m, const FidelityParams& params, const HardwareProfile& profile,
                                   double seconds) {
  // log2 R_Q = log2 tau + log2 m + 2 eps * fidelity_bits
  const double bits = 2.0 * fidelity_bits(params, n, m);
  const double budget = std::log2(seconds) - std::log2(profile.tau_q_seconds.value) - std::log2(m);
  if (bits == 0.0) return std::numeric_limits<double>::infinity();
  return budget / bits;
}

std::vector<RuntimeLevel> default_runtime_levels(const HardwareProfile& profile) {
  return {{"1 day", 86400.0}, {"1 year", kSecondsPerYear}, {"cutoff", profile.cutoff_seconds.value}};
}

std::vector<Polyline> map_boundaries(const RegionMap& map) {
  const std::vector<int> labels = label_grid(map);
  return label_boundaries(labels, map.n_axis, map.m_axis);
}

void write_map_csv(std::ostream& out, const RegionMap& map) {
  out << "n,m,label,log2_rq_seconds,log2_rc_seconds,best_classical,alpha_sa,alpha_sfa\n";
  for (const CellRecord& c : map.cells) {
    out << format_double(c.n) << ',' << format_double(c.m) << ',' << region_label_name(c.label) << ','
        << format_double(c.log2_rq_seconds) << ',' << format_double(c.log2_rc_seconds) << ','
        << (c.best_classical ? algorithm_name(*c.best_classical) : std::string_view("none")) << ','
        << format_double(c.alpha_sa) << ',' << format_double(c.alpha_sfa) << '\n';
  }
}

RegionMap read_map_csv(std::istream& in) {
  const CsvTable table = read_csv(in);
  static const std::array<std::string_view, 8> columns = {
      "n", "m", "label", "log2_rq_seconds", "log2_rc_seconds", "best_classical", "alpha_sa", "alpha_sfa"};
  std::array<int, 8> idx{};
  for (std::size_t k = 0; k < columns.size(); ++k) {
    idx[k] = table.column(columns[k]);
    if (idx[k] < 0) throw FormatError("map CSV is missing column '" + std::string(columns[k]) + "'");
  }
  std::vector<double> ns, ms;
  std::vector<CellRecord> cells;
  for (const auto& row : table.rows) {
    CellRecord c;
    c.n = parse_double(row[idx[0]]);
    c.m = parse_double(row[idx[1]]);
    const auto label = region_label_from_name(row[idx[2]]);
    if (!label) throw FormatError("unknown region label '" + row[idx[2]] + "'");
    c.label = *label;
    c.log2_rq_seconds = parse_double(row[idx[3]]);
    c.log2_rc_seconds = parse_double(row[idx[4]]);
    if (row[idx[5]] != "none") {
      const auto a = algorithm_from_name(row[idx[5]]);
      if (!a || *a == Algorithm::Q) throw FormatError("unknown classical algorithm '" + row[idx[5]] + "'");
      c.best_classical = *a;
    }
    c.alpha_sa = parse_double(row[idx[6]]);
    c.alpha_sfa = parse_double(row[idx[7]]);
    if (std::find(ns.begin(), ns.end(), c.n) == ns.end()) ns.push_back(c.n);
    if (std::find(ms.begin(), ms.end(), c.m) == ms.end()) ms.push_back(c.m);
    cells.push_back(c);
  }
  std::sort(ns.begin(), ns.end());
  std::sort(ms.begin(), ms.end());
  if (ns.empty() || cells.size() != ns.size() * ms.size()) throw FormatError("map CSV does not form a complete grid");
  RegionMap map{ns, ms, std::vector<CellRecord>(cells.size())};
  std::vector<bool> filled(cells.size(), false);
  for (const CellRecord& c : cells) {
    const auto i = static_cast<std::size_t>(std::lower_bound(ns.begin(), ns.end(), c.n) - ns.begin());
    const auto j = static_cast<std::size_t>(std::lower_bound(ms.begin(), ms.end(), c.m) - ms.begin());
    const std::size_t k = j * ns.size() + i;
    if (filled[k]) throw FormatError("map CSV repeats a cell");
    filled[k] = true;
    map.cells[k] = c;
  }
  return map;
}

std::string map_contour_json(const RegionMap& map, const std::vector<RuntimeLevel>& levels) {
  using ojson = nlohmann::ordered_json;
  auto points = [](const Polyline& line) {
    ojson pts = ojson::array();
    for (const auto& p : line.points) pts.push_back({p[0], p[1]});
    return pts;
  };
  ojson j;
  j["n_axis"] = map.n_axis;
  j["m_axis"] = map.m_axis;
  ojson boundaries = ojson::array();
  for (const Polyline& line : map_boundaries(map)) {
    boundaries.push_back({{"labels",
                           {region_label_name(static_cast<RegionLabel>(line.labels[0])),
                            region_label_name(static_cast<RegionLabel>(line.labels[1]))}},
                          {"closed", line.closed},
                          {"points", points(line)}});
  }
  j["boundaries"] = boundaries;
  std::vector<double> rq;
  rq.reserve(map.cells.size());
  for (const CellRecord& c : map.cells) rq.push_back(c.log2_rq_seconds);
  ojson contours = ojson::array();
  for (const RuntimeLevel& level : levels) {
    ojson lines = ojson::array();
    for (const Polyline& line : iso_contours(rq, map.n_axis, map.m_axis, std::log2(level.seconds))) {
      lines.push_back({{"closed", line.closed}, {"points", points(line)}});
    }
    contours.push_back({{"name", level.name}, {"seconds", level.seconds}, {"polylines", lines}});
  }
  j["runtime_contours"] = contours;
  return j.dump();
}

void export_map(const RegionMap& map, const std::filesystem::path& path, MapFormat format,
                const std::vector<RuntimeLevel>& levels) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  if (format == MapFormat::Csv) {
    write_map_csv(out, map);
  } else {
    out << map_contour_json(map, levels) << '\n';
  }
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace rcs
