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

#include "rcs/hardware_profile.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <json.hpp>
#include <stdexcept>
#include <vector>

#include "rcs/csv.hpp"
#include "rcs/errors.hpp"
#include "rcs/logmath.hpp"

namespace rcs {

std::string_view provenance_name(Provenance p) { return p == Provenance::Measured ? "MEASURED" : "ASSUMED"; }

double tn_runtime(const TnAnchor& anchor, double samples) {
  if (!anchor.enabled) throw std::logic_error("tensor-network anchor is disabled");
  if (!(samples > 0.0)) throw std::invalid_argument("sample count must be positive");
  return anchor.anchor_seconds * samples / anchor.anchor_samples;
}

double tn_runtime_at(const TnAnchor& anchor, double n, double m, double samples) {
  const double at_anchor = tn_runtime(anchor, samples);
  if (n == anchor.n && m == anchor.m) return at_anchor;
  if (!anchor.extrapolate) throw std::domain_error("tensor-network runtime is only known at the anchor point");
  const double shift = anchor.exponent_c * (m * std::sqrt(n) - anchor.m * std::sqrt(anchor.n));
  return at_anchor * exp2_saturating(shift);
}

HardwareProfile HardwareProfile::defaults() { return from_flops(1e15); }

HardwareProfile HardwareProfile::from_flops(double flops, double flops_per_unit) {
  HardwareProfile p;
  p.tau_q_seconds = {2e-4, Provenance::Assumed, "order of magnitude of superconducting sampling rates"};
  const double tau_c = flops_per_unit / flops;
  const std::string note = format_double(flops_per_unit) + " flop per unit at " + format_double(flops) + " FLOPS";
  p.tau_sa_seconds = {tau_c, Provenance::Assumed, note};
  p.tau_sfa_seconds = {tau_c, Provenance::Assumed, note};
  p.memory_bytes = {2.5e17, Provenance::Assumed, "secondary-storage-backed supercomputer"};
  p.cutoff_seconds = {100.0 * kSecondsPerYear, Provenance::Assumed, "100 years"};
  return p;
}

void HardwareProfile::validate() const {
  for (const ProfileConstant* c : {&tau_q_seconds, &tau_sa_seconds, &tau_sfa_seconds, &memory_bytes, &cutoff_seconds}) {
    if (!(c->value > 0.0) || !std::isfinite(c->value)) throw std::invalid_argument("profile constants must be positive");
  }
  if (tn.enabled && !(tn.anchor_seconds > 0.0 && tn.anchor_samples > 0.0)) {
    throw std::invalid_argument("tensor-network anchor needs positive seconds and samples");
  }
}

double HardwareProfile::tau(Algorithm a) const {
  switch (a) {
    case Algorithm::Q: return tau_q_seconds.value;
    case Algorithm::SA: return tau_sa_seconds.value;
    case Algorithm::SFA: return tau_sfa_seconds.value;
    case Algorithm::TN: return 1.0;
  }
  return 1.0;
}

Runtime runtime(const HardwareProfile& profile, const RuntimeEstimate& estimate) {
  Runtime r;
  r.log2_seconds = std::log2(profile.tau(estimate.algorithm)) + estimate.log2_t;
  r.seconds = exp2_saturating(r.log2_seconds);
  return r;
}

namespace {

using nlohmann::json;

ProfileConstant constant_from_json(const json& j, const std::string& key) {
  if (!j.contains(key)) throw FormatError("profile is missing '" + key + "'");
  const json& c = j.at(key);
  if (!c.is_object() || !c.contains("value") || !c.contains("provenance")) {
    throw FormatError("profile field '" + key + "' must be {value, provenance}");
  }
  for (const auto& [k, v] : c.items()) {
    if (k != "value" && k != "provenance" && k != "note") throw FormatError("unknown key '" + k + "' in " + key);
  }
  ProfileConstant out;
  out.value = c.at("value").get<double>();
  const auto prov = c.at("provenance").get<std::string>();
  if (prov == "MEASURED") {
    out.provenance = Provenance::Measured;
  } else if (prov == "ASSUMED") {
    out.provenance = Provenance::Assumed;
  } else {
    throw FormatError("provenance must be MEASURED or ASSUMED, got '" + prov + "'");
  }
  if (c.contains("note")) out.note = c.at("note").get<std::string>();
  return out;
}

nlohmann::ordered_json constant_to_json(const ProfileConstant& c) {
  nlohmann::ordered_json j = {{"value", c.value}, {"provenance", std::string(provenance_name(c.provenance))}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

}  // namespace

HardwareProfile read_profile_json(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(std::string("profile is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("profile must be a JSON object");
  static const std::vector<std::string> known = {"label",          "tau_q_seconds", "tau_sa_seconds", "tau_sfa_seconds",
                                                 "memory_bytes",   "cutoff_seconds", "tn_anchor"};
  for (const auto& [k, v] : j.items()) {
    if (std::find(known.begin(), known.end(), k) == known.end()) throw FormatError("unknown profile key '" + k + "'");
  }
  HardwareProfile p;
  try {
    if (j.contains("label")) p.label = j.at("label").get<std::string>();
    p.tau_q_seconds = constant_from_json(j, "tau_q_seconds");
    p.tau_sa_seconds = constant_from_json(j, "tau_sa_seconds");
    p.tau_sfa_seconds = constant_from_json(j, "tau_sfa_seconds");
    p.memory_bytes = constant_from_json(j, "memory_bytes");
    p.cutoff_seconds = constant_from_json(j, "cutoff_seconds");
    if (j.contains("tn_anchor")) {
      const json& t = j.at("tn_anchor");
      static const std::vector<std::string> tn_keys = {"enabled", "n", "m", "anchor_seconds", "anchor_samples",
                                                       "extrapolate", "exponent_c"};
      for (const auto& [k, v] : t.items()) {
        if (std::find(tn_keys.begin(), tn_keys.end(), k) == tn_keys.end()) {
          throw FormatError("unknown tn_anchor key '" + k + "'");
        }
      }
      p.tn.enabled = t.value("enabled", p.tn.enabled);
      p.tn.n = t.value("n", p.tn.n);
      p.tn.m = t.value("m", p.tn.m);
      p.tn.anchor_seconds = t.value("anchor_seconds", p.tn.anchor_seconds);
      p.tn.anchor_samples = t.value("anchor_samples", p.tn.anchor_samples);
      p.tn.extrapolate = t.value("extrapolate", p.tn.extrapolate);
      p.tn.exponent_c = t.value("exponent_c", p.tn.exponent_c);
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("profile field has the wrong type: ") + e.what());
  }
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return p;
}

std::string profile_to_json(const HardwareProfile& profile) {
  nlohmann::ordered_json j;
  j["label"] = profile.label;
  j["tau_q_seconds"] = constant_to_json(profile.tau_q_seconds);
  j["tau_sa_seconds"] = constant_to_json(profile.tau_sa_seconds);
  j["tau_sfa_seconds"] = constant_to_json(profile.tau_sfa_seconds);
  j["memory_bytes"] = constant_to_json(profile.memory_bytes);
  j["cutoff_seconds"] = constant_to_json(profile.cutoff_seconds);
  j["tn_anchor"] = {{"enabled", profile.tn.enabled},
                    {"n", profile.tn.n},
                    {"m", profile.tn.m},
                    {"anchor_seconds", profile.tn.anchor_seconds},
                    {"anchor_samples", profile.tn.anchor_samples},
                    {"extrapolate", profile.tn.extrapolate},
                    {"exponent_c", profile.tn.exponent_c}};
  return j.dump(2);
}

}  // namespace rcs
