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

// Command-line driver: fits fidelity data, validates simulators with XEB,
// maps advantage regions and writes circuits and amplitudes.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcs/circuit.hpp"
#include "rcs/cost_model.hpp"
#include "rcs/csv.hpp"
#include "rcs/errors.hpp"
#include "rcs/fidelity_model.hpp"
#include "rcs/frontier.hpp"
#include "rcs/hardware_profile.hpp"
#include "rcs/patches.hpp"
#include "rcs/random.hpp"
#include "rcs/sfa.hpp"
#include "rcs/statevec.hpp"
#include "rcs/xeb.hpp"

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kExitConfig = 2;
constexpr int kExitResource = 3;
constexpr int kExitNumeric = 4;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ifstream open_in(const std::string& path, std::ios::openmode mode = std::ios::in) {
  std::ifstream in(path, mode);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  return in;
}

std::ofstream open_out(const std::string& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  return out;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(rcs::parse_double(item));
    } catch (const rcs::FormatError&) {
      throw ConfigError("bad number '" + item + "' in list '" + text + "'");
    }
  }
  if (out.empty()) throw ConfigError("empty list");
  return out;
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

rcs::GateKind gate_kind(const std::string& name) {
  const auto kind = rcs::gate_from_name(name);
  if (!kind) throw ConfigError("unknown gate '" + name + "'");
  return *kind;
}

rcs::HardwareProfile load_profile(const std::string& path) {
  if (path.empty()) return rcs::HardwareProfile::defaults();
  auto in = open_in(path);
  return rcs::read_profile_json(in);
}

// Near-square grid for n qubits: rows is the largest divisor <= sqrt(n).
std::pair<std::uint32_t, std::uint32_t> grid_shape(std::uint32_t n) {
  std::uint32_t rows = 1;
  for (std::uint32_t r = 1; r * r <= n; ++r) {
    if (n % r == 0) rows = r;
  }
  return {rows, n / rows};
}

void print_summary(const ojson& summary) { std::cout << summary.dump() << '\n'; }

// ---- fit

struct FitArgs {
  std::string data;
  std::string out;
};

int run_fit(const FitArgs& a) {
  auto in = open_in(a.data);
  const rcs::FidelityDataset dataset = rcs::read_fidelity_csv(in);
  const rcs::FitReport report = rcs::fit(dataset);
  auto out = open_out(a.out);
  out << rcs::fit_report_json(report) << '\n';
  print_summary({{"command", "fit"},
                 {"lambda", report.params.lambda},
                 {"gamma", report.params.gamma},
                 {"records", report.records},
                 {"out", a.out}});
  return 0;
}

// ---- validate

struct ValidateArgs {
  std::uint32_t n = 12;
  std::uint32_t m = 14;
  std::uint32_t rows = 0;
  std::uint32_t seeds = 5;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  std::string fidelities = "1";
  std::uint32_t patches = 2;
  bool skip_sfa = false;
  std::string out;
};

int run_validate(const ValidateArgs& a) {
  std::uint32_t rows = a.rows, cols = 0;
  if (rows == 0) {
    std::tie(rows, cols) = grid_shape(a.n);
  } else {
    if (a.n % rows != 0) throw ConfigError("--rows must divide --n");
    cols = a.n / rows;
  }
  const std::vector<double> fidelities = parse_list(a.fidelities);
  for (double f : fidelities) {
    if (!(f >= 0.0 && f <= 1.0)) throw ConfigError("fidelities must lie in [0, 1]");
  }
  if (a.seeds == 0 || a.samples == 0) throw ConfigError("--seeds and --samples must be positive");
  const rcs::QubitGrid grid = rcs::build_grid(rows, cols);
  const rcs::GateSetConfig gates;

  std::vector<rcs::XebRunRecord> records;
  std::vector<double> mean_f(fidelities.size(), 0.0);
  double sfa_max_diff = 0.0;
  for (std::uint32_t s = 0; s < a.seeds; ++s) {
    const std::uint64_t circuit_seed = rcs::derive_seed(a.seed, 2 * s);
    const std::uint64_t sample_seed = rcs::derive_seed(a.seed, 2 * s + 1);
    const rcs::Circuit circuit = rcs::generate_circuit(grid, a.m, gates, circuit_seed);
    const rcs::StateVector state = rcs::simulate(circuit);
    if (!a.skip_sfa) {
      const rcs::PatchDecomposition decomp = rcs::cut_circuit(circuit, a.patches);
      std::vector<std::uint64_t> all(state.size());
      for (std::uint64_t x = 0; x < all.size(); ++x) all[x] = x;
      const auto amps = rcs::sfa_amplitudes(decomp, all, rcs::PathSelection::all_paths());
      for (std::uint64_t x = 0; x < all.size(); ++x) {
        sfa_max_diff = std::max(sfa_max_diff, std::abs(amps[x] - state.amplitude(x)));
      }
    }
    for (std::size_t k = 0; k < fidelities.size(); ++k) {
      const auto draws = rcs::depolarized_sample(state, fidelities[k], a.samples, rcs::derive_seed(sample_seed, k));
      const auto probs = rcs::ideal_probabilities(state, draws);
      const rcs::XebResult r = rcs::xeb_estimate(probs, a.n);
      records.push_back({a.n, a.m, circuit_seed, fidelities[k], r.n_samples, r.f_xeb, r.std_err});
      mean_f[k] += r.f_xeb / a.seeds;
    }
  }
  auto out = open_out(a.out);
  rcs::write_xeb_csv(out, records);

  ojson means = ojson::array();
  for (std::size_t k = 0; k < fidelities.size(); ++k) {
    means.push_back({{"f", fidelities[k]}, {"mean_f_xeb", mean_f[k]}});
  }
  ojson summary = {{"command", "validate"}, {"n", a.n}, {"m", a.m}, {"rows", rows}, {"cols", cols},
                   {"seeds", a.seeds},      {"samples", a.samples}, {"xeb", means}};
  if (!a.skip_sfa) summary["sfa_max_diff"] = sfa_max_diff;
  summary["out"] = a.out;
  print_summary(summary);
  return 0;
}

// ---- frontier

struct FrontierArgs {
  std::string profile;
  double epsilon = 1.0;
  double lambda = rcs::kSycamoreLambda;
  double gamma = rcs::kSycamoreGamma;
  double n_min = 10, n_max = 1e4, n_ratio = 1.05;
  double m_min = 6, m_max = 1000, m_step = 1;
  double min_depth = 5;
  double cut_constant = 0.24;
  bool no_tn = false;
  std::string out;
  std::string contours;
  std::string sqrt_depth;
  std::string sqrt_epsilons = "2.8,1,0.28";
};

int run_frontier(const FrontierArgs& a) {
  if (!(a.epsilon >= 0.0)) throw ConfigError("--epsilon must be non-negative");
  const rcs::HardwareProfile profile = load_profile(a.profile);
  const rcs::FidelityParams base{a.lambda, a.gamma, {}};
  const rcs::FidelityParams params = rcs::scale_error(base, a.epsilon);
  rcs::FrontierConfig config;
  config.min_depth = a.min_depth;
  config.sfa.cut_constant = a.cut_constant;
  config.include_tn = !a.no_tn;
  std::vector<double> n_axis, m_axis;
  try {
    n_axis = rcs::geometric_axis(a.n_min, a.n_max, a.n_ratio);
    m_axis = rcs::linear_axis(a.m_min, a.m_max, a.m_step);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const rcs::RegionMap map = rcs::compute_map(n_axis, m_axis, params, profile, config);
  rcs::export_map(map, a.out, rcs::MapFormat::Csv);
  if (!a.contours.empty()) {
    rcs::export_map(map, a.contours, rcs::MapFormat::ContourJson, rcs::default_runtime_levels(profile));
  }
  if (!a.sqrt_depth.empty()) {
    const auto rows = rcs::sqrt_depth_curve(n_axis, parse_list(a.sqrt_epsilons), base, profile);
    auto out = open_out(a.sqrt_depth);
    out << "epsilon,n,m,seconds,log2_seconds\n";
    for (const auto& r : rows) {
      out << rcs::format_double(r.epsilon) << ',' << rcs::format_double(r.n) << ',' << rcs::format_double(r.m)
          << ',' << rcs::format_double(r.seconds) << ',' << rcs::format_double(r.log2_seconds) << '\n';
    }
  }
  std::map<std::string, std::size_t> counts;
  for (const auto& c : map.cells) ++counts[std::string(rcs::region_label_name(c.label))];
  ojson label_counts = ojson::object();
  for (const auto& [k, v] : counts) label_counts[k] = v;
  print_summary({{"command", "frontier"},
                 {"epsilon", a.epsilon},
                 {"lambda", params.lambda},
                 {"gamma", params.gamma},
                 {"n_values", n_axis.size()},
                 {"m_values", m_axis.size()},
                 {"labels", label_counts},
                 {"out", a.out}});
  return 0;
}

// ---- extrapolate

struct ExtrapolateArgs {
  std::string trend;
  double year = 2030;
  double reference_year = 2019;
  double lambda = rcs::kSycamoreLambda;
  double gamma = rcs::kSycamoreGamma;
  std::string out;
};

int run_extrapolate(const ExtrapolateArgs& a) {
  auto in = open_in(a.trend);
  rcs::ErrorTrend trend = rcs::read_trend_csv(in);
  trend.reference_year = a.reference_year;
  const rcs::TrendFit fit = rcs::extrapolate_error(trend, a.year);
  const rcs::ErrorProfile scaled = rcs::error_profile({a.lambda, a.gamma, {}}, fit.epsilon);
  ojson j = {{"decay_factor", fit.decay_factor},
             {"reference_year", fit.reference_year},
             {"target_year", fit.target_year},
             {"epsilon", fit.epsilon},
             {"lambda", scaled.params.lambda},
             {"gamma", scaled.params.gamma},
             {"two_qubit_error", scaled.two_qubit_error}};
  auto out = open_out(a.out);
  out << j.dump(2) << '\n';
  j["command"] = "extrapolate";
  j["out"] = a.out;
  print_summary(j);
  return 0;
}

// ---- circuit-gen

struct CircuitGenArgs {
  std::uint32_t rows = 3;
  std::uint32_t cols = 4;
  std::uint32_t m = 14;
  std::uint64_t seed = 0;
  std::string gates = "sqrt_x,sqrt_y,sqrt_w";
  std::string two_qubit = "cz";
  std::string out;
};

int run_circuit_gen(const CircuitGenArgs& a) {
  rcs::GateSetConfig config;
  config.single_qubit.clear();
  for (const auto& name : split_names(a.gates)) config.single_qubit.push_back(gate_kind(name));
  config.two_qubit = gate_kind(a.two_qubit);
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const rcs::Circuit circuit = rcs::generate_circuit(rcs::build_grid(a.rows, a.cols), a.m, config, a.seed);
  auto out = open_out(a.out);
  rcs::write_circuit(out, circuit);
  const rcs::GateCounts counts = rcs::count_gates(circuit);
  print_summary({{"command", "circuit-gen"},
                 {"n", circuit.num_qubits()},
                 {"m", circuit.depth()},
                 {"single_qubit_gates", counts.single},
                 {"two_qubit_gates", counts.two_qubit},
                 {"out", a.out}});
  return 0;
}

// ---- simulate

struct SimulateArgs {
  std::string circuit;
  std::string method = "sa";
  std::uint32_t patches = 2;
  double path_fraction = 1.0;
  std::optional<std::uint64_t> seed;
  std::uint64_t samples = 0;
  std::string samples_out;
  std::uint32_t max_qubits = 26;
  unsigned threads = 1;
  std::string out;
};

int run_simulate(const SimulateArgs& a) {
  auto in = open_in(a.circuit);
  const rcs::Circuit circuit = rcs::read_circuit(in);
  if (a.method != "sa" && a.method != "sfa") throw ConfigError("--method must be sa or sfa");
  const bool randomized = a.samples > 0 || (a.method == "sfa" && a.path_fraction < 1.0);
  if (randomized && !a.seed) throw ConfigError("--seed is required for sampling or path subsets");
  if (a.samples > 0 && a.samples_out.empty()) throw ConfigError("--samples-out is required with --samples");
  if (circuit.num_qubits() > a.max_qubits) {
    throw rcs::ResourceError("state vector of " + std::to_string(circuit.num_qubits()) +
                             " qubits exceeds the limit of " + std::to_string(a.max_qubits));
  }

  ojson summary = {{"command", "simulate"}, {"method", a.method}, {"n", circuit.num_qubits()}, {"m", circuit.depth()}};
  std::optional<rcs::StateVector> state;
  if (a.method == "sa") {
    state.emplace(rcs::simulate(circuit, {a.max_qubits}));
  } else {
    const rcs::PatchDecomposition decomp = rcs::cut_circuit(circuit, a.patches);
    const rcs::PathSelection selection = a.path_fraction < 1.0 ? rcs::PathSelection::subset(a.path_fraction, *a.seed)
                                                               : rcs::PathSelection::all_paths();
    std::vector<std::uint64_t> all(std::uint64_t{1} << circuit.num_qubits());
    for (std::uint64_t x = 0; x < all.size(); ++x) all[x] = x;
    rcs::SfaOptions options;
    options.threads = a.threads;
    rcs::SfaStats stats;
    auto amps = rcs::sfa_amplitudes(decomp, all, selection, options, &stats);
    state.emplace(rcs::StateVector::from_amplitudes(std::move(amps)));
    summary["patches"] = a.patches;
    summary["paths_evaluated"] = stats.paths_evaluated;
    summary["log2_total_paths"] = decomp.log2_path_count();
  }
  summary["norm_squared"] = state->norm_squared();

  auto out = open_out(a.out, std::ios::binary);
  rcs::write_amplitudes(out, *state);
  if (a.samples > 0) {
    rcs::StateVector normalized = *state;
    normalized.normalize();
    const auto draws = rcs::sample(normalized, a.samples, *a.seed);
    auto sout = open_out(a.samples_out);
    for (std::uint64_t x : draws) sout << x << '\n';
    summary["samples"] = a.samples;
  }
  summary["out"] = a.out;
  print_summary(summary);
  return 0;
}

// Expands a JSON config object into "--key value" tokens.
std::vector<std::string> config_tokens(const std::string& path) {
  auto in = open_in(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config is not valid JSON: " + std::string(e.what()));
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  std::vector<std::string> tokens;
  auto scalar = [](const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
    if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
    if (v.is_number_float()) return rcs::format_double(v.get<double>());
    if (v.is_boolean()) return std::string(v.get<bool>() ? "true" : "false");
    throw ConfigError("config values must be scalars or arrays of scalars");
  };
  for (const auto& [key, value] : j.items()) {
    if (key == "command") continue;
    tokens.push_back("--" + key);
    if (value.is_array()) {
      std::string joined;
      for (const auto& v : value) joined += (joined.empty() ? "" : ",") + scalar(v);
      tokens.push_back(joined);
    } else if (value.is_boolean()) {
      tokens.back() += "=" + scalar(value);
    } else {
      tokens.push_back(scalar(value));
    }
  }
  return tokens;
}

// Splices config tokens in right after the subcommand so explicit flags,
// which come later, take precedence.
std::vector<std::string> expand_args(int argc, char** argv, const std::vector<std::string>& commands) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string config;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw ConfigError("--config needs a path");
      config = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (config.empty()) return rest;
  std::vector<std::string> tokens = config_tokens(config);
  std::size_t at = 0;
  while (at < rest.size() && std::find(commands.begin(), commands.end(), rest[at]) == commands.end()) ++at;
  if (at == rest.size()) {
    // No subcommand on the command line; the config may name one.
    auto in = open_in(config);
    const auto j = nlohmann::json::parse(in);
    if (!j.contains("command") || !j.at("command").is_string()) throw ConfigError("no command given");
    rest.insert(rest.begin(), j.at("command").get<std::string>());
    at = 0;
  }
  rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(at) + 1, tokens.begin(), tokens.end());
  return rest;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Runtime bounds for random circuit sampling: simulators, XEB and advantage maps"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  std::string unused_config;
  app.add_option("--config", unused_config, "JSON object whose keys are option names of the chosen command");

  FitArgs fit_args;
  auto* fit = app.add_subcommand("fit", "Fit lambda and gamma to an XEB fidelity dataset");
  fit->add_option("--data", fit_args.data, "CSV with columns n,m,f_xeb[,weight]")->required();
  fit->add_option("--out", fit_args.out, "Fit report JSON")->required();

  ValidateArgs val;
  auto* validate = app.add_subcommand("validate", "Simulate random circuits, check SFA against SA, run XEB");
  validate->add_option("--n", val.n, "Qubits")->capture_default_str();
  validate->add_option("--m", val.m, "Cycles")->capture_default_str();
  validate->add_option("--rows", val.rows, "Grid rows (default: near-square)");
  validate->add_option("--seeds", val.seeds, "Number of circuits")->capture_default_str();
  validate->add_option("--samples", val.samples, "Samples per circuit and fidelity")->capture_default_str();
  validate->add_option("--seed", val.seed, "Master seed")->required();
  validate->add_option("--fidelities", val.fidelities, "Comma-separated sampler fidelities")->capture_default_str();
  validate->add_option("--patches", val.patches, "SFA patches")->capture_default_str();
  validate->add_flag("--skip-sfa", val.skip_sfa, "Skip the SFA comparison");
  validate->add_option("--out", val.out, "XEB CSV")->required();

  FrontierArgs fr;
  auto* frontier = app.add_subcommand("frontier", "Classify the (n, m) plane into advantage regions");
  frontier->add_option("--profile", fr.profile, "Hardware profile JSON (default profile if omitted)");
  frontier->add_option("--epsilon", fr.epsilon, "Error scaling applied to lambda and gamma")->capture_default_str();
  frontier->add_option("--lambda", fr.lambda, "Base lambda")->capture_default_str();
  frontier->add_option("--gamma", fr.gamma, "Base gamma")->capture_default_str();
  frontier->add_option("--n-min", fr.n_min, "Smallest n")->capture_default_str();
  frontier->add_option("--n-max", fr.n_max, "Largest n")->capture_default_str();
  frontier->add_option("--n-ratio", fr.n_ratio, "Geometric step of the n axis")->capture_default_str();
  frontier->add_option("--m-min", fr.m_min, "Smallest m")->capture_default_str();
  frontier->add_option("--m-max", fr.m_max, "Largest m")->capture_default_str();
  frontier->add_option("--m-step", fr.m_step, "Step of the m axis")->capture_default_str();
  frontier->add_option("--min-depth", fr.min_depth, "Depths at or below this are not classified")->capture_default_str();
  frontier->add_option("--cut-constant", fr.cut_constant, "SFA cut constant B")->capture_default_str();
  frontier->add_flag("--no-tn", fr.no_tn, "Ignore the tensor-network anchor");
  frontier->add_option("--out", fr.out, "Map CSV")->required();
  frontier->add_option("--contours", fr.contours, "Contour JSON (optional)");
  frontier->add_option("--sqrt-depth", fr.sqrt_depth, "CSV of R_Q along m = ceil(sqrt n) (optional)");
  frontier->add_option("--sqrt-epsilons", fr.sqrt_epsilons, "Error scalings for --sqrt-depth")->capture_default_str();

  ExtrapolateArgs ex;
  auto* extrapolate = app.add_subcommand("extrapolate", "Extrapolate a two-qubit error trend to a target year");
  extrapolate->add_option("--trend", ex.trend, "CSV with columns year,two_qubit_error")->required();
  extrapolate->add_option("--year", ex.year, "Target year")->required();
  extrapolate->add_option("--reference-year", ex.reference_year, "Year at which epsilon = 1")->capture_default_str();
  extrapolate->add_option("--lambda", ex.lambda, "Base lambda")->capture_default_str();
  extrapolate->add_option("--gamma", ex.gamma, "Base gamma")->capture_default_str();
  extrapolate->add_option("--out", ex.out, "Result JSON")->required();

  CircuitGenArgs cg;
  auto* circuit_gen = app.add_subcommand("circuit-gen", "Generate a random grid circuit");
  circuit_gen->add_option("--rows", cg.rows, "Grid rows")->capture_default_str();
  circuit_gen->add_option("--cols", cg.cols, "Grid columns")->capture_default_str();
  circuit_gen->add_option("--m", cg.m, "Cycles")->capture_default_str();
  circuit_gen->add_option("--seed", cg.seed, "Seed")->required();
  circuit_gen->add_option("--gates", cg.gates, "Comma-separated single-qubit gate names")->capture_default_str();
  circuit_gen->add_option("--two-qubit", cg.two_qubit, "Two-qubit gate name")->capture_default_str();
  circuit_gen->add_option("--out", cg.out, "Circuit file")->required();

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Compute all amplitudes of a circuit file");
  simulate->add_option("--circuit", sim.circuit, "Circuit file")->required();
  simulate->add_option("--method", sim.method, "sa or sfa")->capture_default_str();
  simulate->add_option("--patches", sim.patches, "SFA patches")->capture_default_str();
  simulate->add_option("--path-fraction", sim.path_fraction, "Fraction of SFA paths to sum")->capture_default_str();
  simulate->add_option("--seed", sim.seed, "Seed for sampling and path subsets");
  simulate->add_option("--samples", sim.samples, "Bitstrings to sample")->capture_default_str();
  simulate->add_option("--samples-out", sim.samples_out, "File for sampled bitstrings, one per line");
  simulate->add_option("--max-qubits", sim.max_qubits, "Largest state vector allowed")->capture_default_str();
  simulate->add_option("--threads", sim.threads, "SFA worker threads")->capture_default_str();
  simulate->add_option("--out", sim.out, "Binary amplitude file")->required();

  try {
    std::vector<std::string> args =
        expand_args(argc, argv, {"fit", "validate", "frontier", "extrapolate", "circuit-gen", "simulate"});
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (*fit) return run_fit(fit_args);
    if (*validate) return run_validate(val);
    if (*frontier) return run_frontier(fr);
    if (*extrapolate) return run_extrapolate(ex);
    if (*circuit_gen) return run_circuit_gen(cg);
    if (*simulate) return run_simulate(sim);
  } catch (const rcs::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return kExitResource;
  } catch (const rcs::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
