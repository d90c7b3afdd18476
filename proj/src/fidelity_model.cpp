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

#include "rcs/fidelity_model.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <istream>
#include <json.hpp>
#include <stdexcept>

#include "rcs/csv.hpp"
#include "rcs/errors.hpp"

namespace rcs {

namespace {

double cycle_volume(double n, double m) { return m * (3.0 * n - std::sqrt(n)) / 2.0; }

}  // namespace

double fidelity_bits(const FidelityParams& params, double n, double m) {
  return params.lambda * cycle_volume(n, m) + params.gamma * n;
}

double log2_fidelity(const FidelityParams& params, double n, double m) { return -fidelity_bits(params, n, m); }

double predict_fidelity(const FidelityParams& params, double n, double m) {
  return std::exp2(log2_fidelity(params, n, m));
}

double predict_fidelity_gatewise(const GateLevelErrors& errors, const GateCounts& counts, std::uint32_t n) {
  for (double e : {errors.single_qubit, errors.two_qubit, errors.qubit}) {
    if (!(e >= 0.0 && e < 1.0)) throw std::invalid_argument("error rates must lie in [0, 1)");
  }
  // Sum logs so that large counts do not underflow intermediate products.
  const double log_f = static_cast<double>(counts.single) * std::log1p(-errors.single_qubit) +
                       static_cast<double>(counts.two_qubit) * std::log1p(-errors.two_qubit) +
                       static_cast<double>(n) * std::log1p(-errors.qubit);
  return std::exp(log_f);
}

FitReport fit(const FidelityDataset& dataset) {
  if (dataset.size() < 2) {
    throw NumericError("rank-deficient design matrix: need at least 2 records with distinct (m(3n-sqrt n)/2, n) rows");
  }
  const auto rows = static_cast<Eigen::Index>(dataset.size());
  Eigen::MatrixXd x(rows, 2);
  Eigen::VectorXd y(rows);
  Eigen::VectorXd w(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const FidelityRecord& r = dataset[static_cast<std::size_t>(i)];
    if (!(r.n >= 1.0) || !(r.m >= 0.0)) throw std::invalid_argument("fit: need n >= 1 and m >= 0");
    if (!(r.f_xeb > 0.0)) throw std::invalid_argument("fit: f_xeb must be positive");
    if (!(r.weight > 0.0)) throw std::invalid_argument("fit: weights must be positive");
    x(i, 0) = cycle_volume(r.n, r.m);
    x(i, 1) = r.n;
    y(i) = -std::log2(r.f_xeb);
    w(i) = r.weight;
  }
  const Eigen::VectorXd sw = w.array().sqrt();
  const Eigen::MatrixXd xw = sw.asDiagonal() * x;
  const Eigen::VectorXd yw = sw.asDiagonal() * y;

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(xw);
  qr.setThreshold(1e-10);
  if (qr.rank() < 2) {
    throw NumericError("rank-deficient design matrix: need at least 2 records with distinct (m(3n-sqrt n)/2, n) rows");
  }
  const Eigen::Vector2d beta = qr.solve(yw);

  FitReport report;
  report.records = dataset.size();
  report.params.lambda = beta(0);
  report.params.gamma = beta(1);
  const Eigen::VectorXd resid = y - x * beta;
  report.residuals.assign(resid.data(), resid.data() + resid.size());
  report.residual_rms = std::sqrt(resid.squaredNorm() / static_cast<double>(rows));
  if (rows > 2) {
    const double s2 = (sw.asDiagonal() * resid).squaredNorm() / static_cast<double>(rows - 2);
    const Eigen::Matrix2d cov = s2 * (xw.transpose() * xw).inverse();
    report.params.covariance = {cov(0, 0), cov(0, 1), cov(1, 0), cov(1, 1)};
  }
  return report;
}

FidelityParams scale_error(const FidelityParams& params, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("error scale must be positive");
  FidelityParams out = params;
  out.lambda *= epsilon;
  out.gamma *= epsilon;
  for (double& c : out.covariance) c *= epsilon * epsilon;
  return out;
}

ErrorProfile error_profile(const FidelityParams& base, double epsilon, double reference_two_qubit_error) {
  return {epsilon, scale_error(base, epsilon), reference_two_qubit_error * epsilon};
}

TrendFit extrapolate_error(const ErrorTrend& trend, double target_year) {
  const auto& recs = trend.records;
  if (recs.size() < 2) throw std::invalid_argument("error trend needs at least two records");
  double mean_t = 0.0, mean_y = 0.0;
  for (const TrendRecord& r : recs) {
    if (!(r.two_qubit_error > 0.0)) throw std::invalid_argument("error rates must be positive");
    mean_t += r.year;
    mean_y += std::log(r.two_qubit_error);
  }
  const double count = static_cast<double>(recs.size());
  mean_t /= count;
  mean_y /= count;
  double stt = 0.0, sty = 0.0;
  for (const TrendRecord& r : recs) {
    const double dt = r.year - mean_t;
    stt += dt * dt;
    sty += dt * (std::log(r.two_qubit_error) - mean_y);
  }
  if (!(stt > 0.0)) throw std::invalid_argument("error trend needs at least two distinct years");
  const double slope = sty / stt;
  TrendFit out;
  out.decay_factor = std::exp(slope);
  out.log_intercept = mean_y - slope * mean_t;
  out.reference_year = trend.reference_year;
  out.target_year = target_year;
  out.epsilon = std::exp(slope * (target_year - trend.reference_year));
  return out;
}

FidelityDataset read_fidelity_csv(std::istream& in) {
  const CsvTable table = read_csv(in);
  const int cn = table.column("n"), cm = table.column("m"), cf = table.column("f_xeb"), cw = table.column("weight");
  const bool header_ok = cn == 0 && cm == 1 && cf == 2 &&
                         (table.header.size() == 3 || (table.header.size() == 4 && cw == 3));
  if (!header_ok) throw FormatError("fidelity CSV header must be n,m,f_xeb[,weight]");
  FidelityDataset out;
  for (const auto& row : table.rows) {
    FidelityRecord r;
    r.n = parse_double(row[0]);
    r.m = parse_double(row[1]);
    r.f_xeb = parse_double(row[2]);
    if (cw == 3) r.weight = parse_double(row[3]);
    out.push_back(r);
  }
  return out;
}

ErrorTrend read_trend_csv(std::istream& in) {
  const CsvTable table = read_csv(in);
  if (table.header != std::vector<std::string>{"year", "two_qubit_error"}) {
    throw FormatError("error-trend CSV header must be year,two_qubit_error");
  }
  ErrorTrend out;
  for (const auto& row : table.rows) out.records.push_back({parse_double(row[0]), parse_double(row[1])});
  return out;
}

std::string fit_report_json(const FitReport& report) {
  const auto& c = report.params.covariance;
  nlohmann::ordered_json j;
  j["lambda"] = report.params.lambda;
  j["gamma"] = report.params.gamma;
  j["covariance"] = {{c[0], c[1]}, {c[2], c[3]}};
  j["residual_rms"] = report.residual_rms;
  j["records"] = report.records;
  j["residuals"] = report.residuals;
  return j.dump(2);
}

}  // namespace rcs
