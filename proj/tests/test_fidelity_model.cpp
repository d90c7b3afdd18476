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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <json.hpp>

#include "rcs/errors.hpp"
#include "rcs/fidelity_model.hpp"

namespace rcs {
namespace {

double exponent(double lambda, double gamma, double n, double m) {
  return lambda * m * (3.0 * n - std::sqrt(n)) / 2.0 + gamma * n;
}

TEST(Predict, ZeroDepthNoQubitTermIsOne) {
  const FidelityParams p{0.01, 0.0, {}};
  for (double n : {1.0, 7.0, 53.0, 1e4}) EXPECT_EQ(predict_fidelity(p, n, 0.0), 1.0);
}

TEST(Predict, SycamoreDepthTwenty) {
  EXPECT_NEAR(log2_fidelity(sycamore_params(), 53, 20), -8.75, 0.01);
  EXPECT_NEAR(predict_fidelity(sycamore_params(), 53, 20), 2.3e-3, 0.05e-3);
}

TEST(Predict, SycamoreDepthFourteen) {
  EXPECT_NEAR(log2_fidelity(sycamore_params(), 53, 14), -6.79, 0.01);
  EXPECT_NEAR(predict_fidelity(sycamore_params(), 53, 14), 9.0e-3, 0.1e-3);
}

TEST(Predict, MatchesDirectFormula) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const FidelityParams p{0.01 * u(rng), 0.1 * u(rng), {}};
    const double n = 1.0 + 100.0 * u(rng), m = 50.0 * u(rng);
    EXPECT_NEAR(fidelity_bits(p, n, m), exponent(p.lambda, p.gamma, n, m), 1e-12);
  }
}

TEST(Predict, StrictlyDecreasingInWidthAndDepth) {
  const FidelityParams p = sycamore_params();
  for (double n = 1.0; n < 200.0; n += 1.0) {
    EXPECT_GT(predict_fidelity(p, n, 10), predict_fidelity(p, n + 1.0, 10));
    EXPECT_GT(predict_fidelity(p, 53, n), predict_fidelity(p, 53, n + 1.0));
  }
}

TEST(Gatewise, NoErrorsGivesOne) {
  EXPECT_EQ(predict_fidelity_gatewise({}, {100, 50}, 10), 1.0);
}

TEST(Gatewise, ProductOfTwoHalves) {
  EXPECT_NEAR(predict_fidelity_gatewise({0.5, 0.0, 0.0}, {2, 0}, 0), 0.25, 1e-15);
}

TEST(Gatewise, SycamoreTwoQubitRate) {
  const double f = predict_fidelity_gatewise({0.0, kSycamoreTwoQubitError, 0.0}, {0, 430}, 53);
  EXPECT_NEAR(f, std::pow(1.0 - 0.0036, 430), 1e-14);
}

TEST(Gatewise, FirstOrderMatchesSumOfRates) {
  const GateLevelErrors e{0.001, 0.005, 0.003};
  const GateCounts c{1000, 400};
  const double n = 53.0;
  const double first_order = (1000 * 0.001 + 400 * 0.005 + n * 0.003) / std::log(2.0);
  const double bits = -std::log2(predict_fidelity_gatewise(e, c, 53));
  EXPECT_NEAR(bits / first_order, 1.0, 0.05);
}

TEST(Gatewise, RejectsRateOfOne) {
  EXPECT_THROW(predict_fidelity_gatewise({0.0, 1.0, 0.0}, {0, 1}, 1), std::invalid_argument);
  EXPECT_THROW(predict_fidelity_gatewise({-0.1, 0.0, 0.0}, {1, 0}, 1), std::invalid_argument);
}

FidelityDataset synthetic(double lambda, double gamma) {
  FidelityDataset d;
  for (double n : {12.0, 20.0, 30.0, 42.0, 53.0}) {
    for (double m : {12.0, 14.0, 16.0, 18.0, 20.0}) {
      d.push_back({n, m, std::exp2(-exponent(lambda, gamma, n, m)), 1.0});
    }
  }
  return d;
}

TEST(Fit, NoiselessRecoveryIsExact) {
  for (auto [lambda, gamma] : {std::pair{0.004, 0.04}, std::pair{0.0043, 0.042}, std::pair{0.02, 0.001}}) {
    const FitReport r = fit(synthetic(lambda, gamma));
    EXPECT_NEAR(r.params.lambda, lambda, 1e-12);
    EXPECT_NEAR(r.params.gamma, gamma, 1e-12);
    EXPECT_LT(r.residual_rms, 1e-12);
    EXPECT_EQ(r.records, 25u);
  }
}

TEST(Fit, WeightsDoNotMoveAnExactFit) {
  FidelityDataset d = synthetic(0.004, 0.04);
  for (std::size_t i = 0; i < d.size(); ++i) d[i].weight = 1.0 + double(i);
  const FitReport r = fit(d);
  EXPECT_NEAR(r.params.lambda, 0.004, 1e-12);
  EXPECT_NEAR(r.params.gamma, 0.04, 1e-12);
}

TEST(Fit, WeightsPullTowardHeavyRecords) {
  // Two consistent points plus one outlier; a tiny weight on the outlier
  // leaves the fit near the consistent pair.
  FidelityDataset d{{12, 12, std::exp2(-exponent(0.004, 0.04, 12, 12)), 1.0},
                    {53, 20, std::exp2(-exponent(0.004, 0.04, 53, 20)), 1.0},
                    {30, 16, 0.5 * std::exp2(-exponent(0.004, 0.04, 30, 16)), 1e-9}};
  const FitReport r = fit(d);
  EXPECT_NEAR(r.params.lambda, 0.004, 1e-6);
  EXPECT_NEAR(r.params.gamma, 0.04, 1e-5);
}

TEST(Fit, NoisyRecoveryWithinTwoPercentMedian) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> noise(0.0, 0.05);
  const double lambda = 0.0043, gamma = 0.042;
  std::vector<double> err_l, err_g;
  for (int trial = 0; trial < 100; ++trial) {
    FidelityDataset d;
    auto add = [&](double n, double m, int count) {
      for (int k = 0; k < count; ++k) {
        d.push_back({n, m, std::exp2(-exponent(lambda, gamma, n, m)) * std::exp(noise(rng)), 1.0});
      }
    };
    add(12, 12, 5);
    add(12, 20, 5);
    add(53, 12, 20);
    add(53, 20, 20);
    const FitReport r = fit(d);
    err_l.push_back(std::abs(r.params.lambda / lambda - 1.0));
    err_g.push_back(std::abs(r.params.gamma / gamma - 1.0));
  }
  std::nth_element(err_l.begin(), err_l.begin() + 50, err_l.end());
  std::nth_element(err_g.begin(), err_g.begin() + 50, err_g.end());
  EXPECT_LT(err_l[50], 0.02);
  EXPECT_LT(err_g[50], 0.02);
}

TEST(Fit, CovarianceMatchesNormalEquations) {
  FidelityDataset d = synthetic(0.004, 0.04);
  d[3].f_xeb *= 1.1;
  d[17].f_xeb *= 0.9;
  const FitReport r = fit(d);
  // Independent normal equations.
  double a = 0, b = 0, c = 0, rss = 0;
  for (const auto& rec : d) {
    const double x1 = rec.m * (3 * rec.n - std::sqrt(rec.n)) / 2, x2 = rec.n;
    a += x1 * x1;
    b += x1 * x2;
    c += x2 * x2;
    const double res = -std::log2(rec.f_xeb) - r.params.lambda * x1 - r.params.gamma * x2;
    rss += res * res;
  }
  const double s2 = rss / double(d.size() - 2), det = a * c - b * b;
  EXPECT_NEAR(r.params.covariance[0], s2 * c / det, 1e-12 * std::abs(s2 * c / det) + 1e-20);
  EXPECT_NEAR(r.params.covariance[3], s2 * a / det, 1e-9 * std::abs(s2 * a / det));
  EXPECT_NEAR(r.params.covariance[1], -s2 * b / det, 1e-9 * std::abs(s2 * b / det));
}

TEST(Fit, RankDeficientThrows) {
  EXPECT_THROW(fit({{53, 20, 0.002, 1.0}}), NumericError);
  // Proportional design rows.
  EXPECT_THROW(fit({{53, 20, 0.002, 1.0}, {53, 20, 0.003, 1.0}}), NumericError);
  try {
    fit({{53, 20, 0.002, 1.0}});
  } catch (const NumericError& e) {
    EXPECT_NE(std::string(e.what()).find("rank"), std::string::npos);
  }
}

TEST(Fit, RejectsNonPositiveFidelity) {
  EXPECT_THROW(fit({{53, 20, 0.0, 1.0}, {12, 14, 0.3, 1.0}}), std::invalid_argument);
}

TEST(Scale, IdentityAtOne) {
  const FidelityParams p{0.0043, 0.042, {1e-8, 2e-8, 2e-8, 3e-8}};
  const FidelityParams q = scale_error(p, 1.0);
  EXPECT_EQ(q.lambda, p.lambda);
  EXPECT_EQ(q.gamma, p.gamma);
  EXPECT_EQ(q.covariance, p.covariance);
}

TEST(Scale, LinearInParamsQuadraticInCovariance) {
  const FidelityParams q = scale_error({0.0043, 0.042, {1.0, 2.0, 2.0, 3.0}}, 2.8);
  EXPECT_NEAR(q.lambda, 0.01204, 1e-15);
  EXPECT_NEAR(q.gamma, 0.1176, 1e-15);
  EXPECT_NEAR(q.covariance[3], 3.0 * 2.8 * 2.8, 1e-12);
}

TEST(Scale, Composes) {
  const FidelityParams a = scale_error(scale_error(sycamore_params(), 0.5), 0.56);
  const FidelityParams b = scale_error(sycamore_params(), 0.28);
  EXPECT_NEAR(a.lambda, b.lambda, 1e-16);
  EXPECT_NEAR(a.gamma, b.gamma, 1e-16);
}

TEST(Scale, ProfilesCarryTwoQubitError) {
  EXPECT_NEAR(error_profile(sycamore_params(), 2.8).two_qubit_error, 0.01, 0.0005);
  EXPECT_NEAR(error_profile(sycamore_params(), 1.0).two_qubit_error, 0.0036, 1e-15);
  EXPECT_NEAR(error_profile(sycamore_params(), 0.28).two_qubit_error, 0.001, 0.00005);
  EXPECT_THROW(scale_error(sycamore_params(), 0.0), std::invalid_argument);
}

TEST(Trend, TwoPointHalving) {
  ErrorTrend t{{{2019, 0.004}, {2020, 0.002}}, 2019};
  const TrendFit f = extrapolate_error(t, 2021);
  EXPECT_NEAR(f.decay_factor, 0.5, 1e-14);
  EXPECT_NEAR(f.epsilon, 0.25, 1e-14);
}

TEST(Trend, RecoversDecayFromNoisyPoints) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> noise(0.0, 0.05);
  ErrorTrend t;
  for (int y = 2010; y <= 2020; ++y) t.records.push_back({double(y), 0.05 * std::pow(0.77, y - 2010) * std::exp(noise(rng))});
  EXPECT_NEAR(extrapolate_error(t, 2025).decay_factor, 0.77, 0.01);
}

TEST(Trend, FiveYearsAhead) {
  ErrorTrend t;
  for (int y = 2015; y <= 2019; ++y) t.records.push_back({double(y), 0.0036 * std::pow(0.77, y - 2019)});
  const TrendFit f = extrapolate_error(t, 2024);
  EXPECT_NEAR(f.epsilon, std::pow(0.77, 5), 1e-12);
  EXPECT_NEAR(f.epsilon, 0.27, 0.005);
}

TEST(Trend, Rejects) {
  EXPECT_THROW(extrapolate_error({{{2019, 0.01}}, 2019}, 2020), std::invalid_argument);
  EXPECT_THROW(extrapolate_error({{{2019, 0.01}, {2019, 0.02}}, 2019}, 2020), std::invalid_argument);
  EXPECT_THROW(extrapolate_error({{{2019, 0.01}, {2020, 0.0}}, 2019}, 2020), std::invalid_argument);
}

TEST(Io, FidelityCsvWithAndWithoutWeights) {
  std::istringstream a("n,m,f_xeb\n53,20,0.0023\n12,14,0.4\n");
  const FidelityDataset d = read_fidelity_csv(a);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[1].n, 12);
  EXPECT_EQ(d[1].weight, 1.0);
  std::istringstream b("n,m,f_xeb,weight\n53,20,0.0023,4\n");
  EXPECT_EQ(read_fidelity_csv(b)[0].weight, 4.0);
  std::istringstream bad("m,n,f_xeb\n1,2,0.5\n");
  EXPECT_THROW(read_fidelity_csv(bad), FormatError);
}

TEST(Io, TrendCsv) {
  std::istringstream a("year,two_qubit_error\n2019,0.0036\n2020,0.0028\n");
  const ErrorTrend t = read_trend_csv(a);
  ASSERT_EQ(t.records.size(), 2u);
  EXPECT_EQ(t.records[1].year, 2020);
  std::istringstream bad("year,error\n2019,0.1\n");
  EXPECT_THROW(read_trend_csv(bad), FormatError);
}

TEST(Io, FitReportJson) {
  const FitReport r = fit(synthetic(0.004, 0.04));
  const auto j = nlohmann::json::parse(fit_report_json(r));
  EXPECT_NEAR(j.at("lambda").get<double>(), 0.004, 1e-12);
  EXPECT_NEAR(j.at("gamma").get<double>(), 0.04, 1e-12);
  EXPECT_EQ(j.at("covariance").size(), 2u);
  EXPECT_TRUE(j.contains("residual_rms"));
  EXPECT_EQ(j.at("residuals").size(), 25u);
}

}  // namespace
}  // namespace rcs
