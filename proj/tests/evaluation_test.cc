/*
 * Copyright 2026 The A2D2E Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "a2d2e/core/errors.h"
#include "a2d2e/core/random.h"
#include "a2d2e/estimators/estimators.h"
#include "a2d2e/evaluation/benchmark_suite.h"
#include "a2d2e/evaluation/metrics.h"
#include "a2d2e/evaluation/variance_experiments.h"
#include "gtest/gtest.h"

namespace a2d2e {
namespace {

EffectCurve Curve(std::size_t variable, std::vector<double> grid,
                  std::vector<double> values) {
  EffectCurve c;
  c.variable = variable;
  c.grid = std::move(grid);
  c.values = std::move(values);
  return c;
}

TEST(OrmseTest, Examples) {
  const std::vector<EffectCurve> a = {Curve(0, {0, 1}, {1, 2})};
  const std::vector<EffectCurve> b = {Curve(0, {0, 1}, {1, 1})};
  EXPECT_EQ(Ormse(a, a).ormse, 0.0);
  EXPECT_NEAR(Ormse(a, b).ormse, std::sqrt(0.5), 1e-15);

  const std::vector<EffectCurve> est = {Curve(0, {0, 1}, {0.1, -0.1}),
                                        Curve(1, {0, 1}, {0.3, 0.3})};
  const std::vector<EffectCurve> truth = {Curve(0, {0, 1}, {0, 0}),
                                          Curve(1, {0, 1}, {0, 0})};
  const OrmseReport r = Ormse(est, truth);
  ASSERT_EQ(r.per_variable_rmse.size(), 2u);
  EXPECT_NEAR(r.per_variable_rmse[0], 0.1, 1e-15);
  EXPECT_NEAR(r.per_variable_rmse[1], 0.3, 1e-15);
  EXPECT_NEAR(r.ormse, 0.2, 1e-15);
}

TEST(OrmseTest, Mismatches) {
  const std::vector<EffectCurve> a = {Curve(0, {0, 1}, {1, 2})};
  const std::vector<EffectCurve> grid = {Curve(0, {0, 0.5}, {1, 2})};
  const std::vector<EffectCurve> var = {Curve(1, {0, 1}, {1, 2})};
  const std::vector<EffectCurve> two = {Curve(0, {0, 1}, {1, 2}),
                                        Curve(1, {0, 1}, {1, 2})};
  EXPECT_THROW(Ormse(a, grid), InvalidArgumentError);
  EXPECT_THROW(Ormse(a, var), InvalidArgumentError);
  EXPECT_THROW(Ormse(a, two), InvalidArgumentError);
  EXPECT_THROW(Ormse(std::vector<EffectCurve>{}, std::vector<EffectCurve>{}),
               InvalidArgumentError);
}

TEST(OrmseTest, TranslationInvariantAfterCentering) {
  const auto grid = Linspace(0, 1, 50);
  std::vector<double> est, truth;
  for (double x : grid) {
    est.push_back(std::sin(4 * x));
    truth.push_back(x * x);
  }
  const std::vector<EffectCurve> t = {CenterCurve(Curve(0, grid, truth))};
  const double base =
      Ormse(std::vector<EffectCurve>{CenterCurve(Curve(0, grid, est))}, t)
          .ormse;
  for (const double shift : {-100.0, -1.0, 0.5, 37.0}) {
    std::vector<double> moved = est;
    for (double& v : moved) v += shift;
    const double s =
        Ormse(std::vector<EffectCurve>{CenterCurve(Curve(0, grid, moved))}, t)
            .ormse;
    EXPECT_NEAR(s, base, 1e-12);
  }
}

TEST(SummaryTest, HandComputed) {
  const std::vector<double> v = {3, 1, 2};
  const Summary s = Summarize(v);
  EXPECT_EQ(s.count, 3u);
  EXPECT_EQ(s.mean, 2.0);
  EXPECT_NEAR(s.se, 1 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(s.lower, 2 - 1.96 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(s.upper, 2 + 1.96 / std::sqrt(3.0), 1e-15);

  const std::vector<double> reversed = {2, 1, 3};
  const Summary r = Summarize(reversed);
  EXPECT_EQ(r.mean, s.mean);
  EXPECT_EQ(r.se, s.se);

  const std::vector<double> one = {4};
  const Summary o = Summarize(one);
  EXPECT_EQ(o.mean, 4.0);
  EXPECT_TRUE(std::isnan(o.se));
  EXPECT_TRUE(ToJson(o)["se"].is_null());
  EXPECT_THROW(Summarize(std::vector<double>{}), InvalidArgumentError);
}

TEST(SummaryTest, Median) {
  EXPECT_EQ(Median(std::vector<double>{3, 1, 2}), 2.0);
  EXPECT_EQ(Median(std::vector<double>{4, 1, 3, 2}), 2.5);
  EXPECT_THROW(Median(std::vector<double>{}), InvalidArgumentError);
}

TEST(VarianceExperimentTest, AleMatchesFormula) {
  const VarianceReport r =
      RunVarianceExperiment(Method::kAle, 2, 0.1, 50, 0.05, 0.01, 2000, 1);
  EXPECT_EQ(r.theoretical_variance,
            BinIncrementVariance(Method::kAle, 0.1, 50, 0.05, 0.01, 2));
  EXPECT_NEAR(r.theoretical_variance, 4e-4, 1e-18);
  EXPECT_LT(r.relative_error, 0.10);
  EXPECT_NEAR(r.relative_error,
              std::abs(r.empirical_variance - r.theoretical_variance) /
                  r.theoretical_variance,
              1e-15);
  // Unbiased: mean within 4 standard errors of the true increment.
  EXPECT_NEAR(r.mean_increment, r.true_increment,
              4 * std::sqrt(r.theoretical_variance / 2000));
}

TEST(VarianceExperimentTest, A2D2EHalfWidthDelta) {
  const VarianceReport r =
      RunVarianceExperiment(Method::kA2D2E, 4, 0.1, 50, 0.05, 0.025, 2000, 2);
  EXPECT_NEAR(r.theoretical_variance, 2e-4, 1e-18);
  EXPECT_LT(r.relative_error, 0.10);
  for (std::size_t dims : {2u, 3u}) {
    const VarianceReport q = RunVarianceExperiment(Method::kA2D2E, dims, 0.1,
                                                   50, 0.05, 0.01, 2000, 3);
    EXPECT_LT(q.relative_error, 0.10) << dims;
  }
}

TEST(VarianceExperimentTest, ZeroNoiseGivesZeroVariance) {
  for (const Method m : {Method::kAle, Method::kA2D2E}) {
    const VarianceReport r =
        RunVarianceExperiment(m, 3, 0.0, 20, 0.05, 0.01, 500, 4);
    EXPECT_EQ(r.empirical_variance, 0.0);
    EXPECT_EQ(r.theoretical_variance, 0.0);
    EXPECT_EQ(r.relative_error, 0.0);
  }
}

TEST(VarianceExperimentTest, Rejections) {
  EXPECT_THROW(
      RunVarianceExperiment(Method::kAle, 2, 0.1, 50, 0.05, 0.01, 499, 1),
      InvalidArgumentError);
  EXPECT_THROW(
      RunVarianceExperiment(Method::kPd, 2, 0.1, 50, 0.05, 0.01, 500, 1),
      InvalidArgumentError);
  EXPECT_THROW(
      RunVarianceExperiment(Method::kA2D2E, 17, 0.1, 5, 0.05, 0.01, 500, 1),
      InvalidArgumentError);
  EXPECT_THROW(
      RunVarianceExperiment(Method::kA2D2E, 2, -0.1, 5, 0.05, 0.01, 500, 1),
      InvalidArgumentError);
}

TEST(VarianceExperimentTest, JsonFields) {
  const auto j = ToJson(
      RunVarianceExperiment(Method::kAle, 2, 0.1, 10, 0.05, 0.01, 500, 5));
  for (const char* key : {"kind", "dims", "sigma", "count", "width", "delta",
                          "replicates", "seed", "empirical_variance",
                          "theoretical_variance", "relative_error"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(ConsistencyTest, StdShrinksWithSquareRootOfCount) {
  const std::vector<std::size_t> counts = {25, 100, 400};
  const ConsistencyReport r = RunConsistencyExperiment(counts, 1000, 7);
  ASSERT_EQ(r.rows.size(), 3u);
  ASSERT_EQ(r.ratios.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    ASSERT_TRUE(r.ratios[i].has_value());
    EXPECT_GE(*r.ratios[i], 1.6);
    EXPECT_LE(*r.ratios[i], 2.4);
    EXPECT_NEAR(*r.ratios[i], r.rows[i].std_dev / r.rows[i + 1].std_dev, 1e-15);
  }
}

TEST(ConsistencyTest, DegenerateCases) {
  const std::vector<std::size_t> counts = {10, 40};
  ConsistencyOptions quiet;
  quiet.sigma = 0.0;
  const ConsistencyReport zero = RunConsistencyExperiment(counts, 50, 1, quiet);
  for (const auto& row : zero.rows) {
    EXPECT_FALSE(row.error.has_value());
    EXPECT_EQ(row.std_dev, 0.0);
  }
  EXPECT_FALSE(zero.ratios[0].has_value());

  const ConsistencyReport single = RunConsistencyExperiment(counts, 1, 1);
  for (const auto& row : single.rows) EXPECT_TRUE(row.error.has_value());
  EXPECT_FALSE(single.ratios[0].has_value());
  const auto j = ToJson(single);
  EXPECT_TRUE(j["rows"][0].contains("error"));

  const std::vector<std::size_t> unordered = {40, 10};
  EXPECT_THROW(RunConsistencyExperiment(unordered, 10, 1),
               InvalidArgumentError);
  const std::vector<std::size_t> with_zero = {0, 10};
  EXPECT_THROW(RunConsistencyExperiment(with_zero, 10, 1),
               InvalidArgumentError);
}

ExperimentConfig SmallConfig(std::size_t reps) {
  ExperimentConfig c;
  c.function_name = "simple-1";
  c.repetitions = reps;
  c.seed = 42;
  return c;
}

SuiteOptions FastTruth() {
  SuiteOptions o;
  o.truth_samples = 20000;
  return o;
}

const std::vector<Method> kAllMethods = {Method::kPd, Method::kAle,
                                         Method::kA2D2E};

TEST(BenchmarkSuiteTest, ZeroRepetitionsIsEmpty) {
  const SuiteResult r =
      RunBenchmarkSuite(SmallConfig(0), kAllMethods, FastTruth());
  EXPECT_TRUE(r.reports.empty());
  EXPECT_TRUE(r.failures.empty());
  const auto j = ToJson(r);
  EXPECT_TRUE(j["reports"].empty());
  EXPECT_EQ(ToCsv(r),
            "function,dependence,method,rep,seed,ormse,queries,wall_ms\n");
}

TEST(BenchmarkSuiteTest, OracleWithinErrorBudget) {
  const SuiteResult r =
      RunBenchmarkSuite(SmallConfig(2), kAllMethods, FastTruth());
  ASSERT_EQ(r.reports.size(), 6u);
  for (const OrmseReport& rep : r.reports) {
    EXPECT_LT(rep.ormse, 5e-3) << MethodName(rep.method);
    EXPECT_EQ(rep.function, "simple-1");
    EXPECT_EQ(rep.seed, DeriveSeed(42, rep.rep));
    EXPECT_EQ(rep.per_variable_rmse.size(), 2u);
  }
  // N = 200 for D = 2; one design of 2^D vertices per sample.
  EXPECT_EQ(r.reports[2].method, Method::kA2D2E);
  EXPECT_EQ(r.reports[2].queries, 200u * 4u);
  EXPECT_EQ(r.OrmseValues(Method::kAle).size(), 2u);
}

TEST(BenchmarkSuiteTest, ReproducibleAndSerializable) {
  ExperimentConfig config = SmallConfig(1);
  config.dependence_level = DependenceLevel::kHigh;
  const SuiteResult a = RunBenchmarkSuite(config, kAllMethods, FastTruth());
  const SuiteResult b = RunBenchmarkSuite(config, kAllMethods, FastTruth());
  EXPECT_EQ(ToJson(a, false).dump(), ToJson(b, false).dump());

  const auto j = ToJson(a);
  EXPECT_EQ(ExperimentConfigFromJson(j["config"]), config);
  EXPECT_EQ(j["predictor"], "oracle");
  EXPECT_TRUE(j["reports"][0].contains("wall_ms"));
  EXPECT_FALSE(ToJson(a, false)["reports"][0].contains("wall_ms"));
  EXPECT_TRUE(j["summary"]["a2d2e"].contains("median"));

  std::istringstream csv(ToCsv(a));
  std::string line;
  std::size_t rows = 0;
  while (std::getline(csv, line)) {
    if (rows++ == 0) continue;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 7) << line;
    EXPECT_EQ(line.rfind("simple-1,high,", 0), 0u) << line;
  }
  EXPECT_EQ(rows, 4u);
}

TEST(BenchmarkSuiteTest, PredictorKindNames) {
  EXPECT_EQ(PredictorKindName(PredictorKind::kOracle), "oracle");
  EXPECT_EQ(PredictorKindName(PredictorKind::kTinyNN), "nn");
  EXPECT_EQ(ParsePredictorKind("nn"), PredictorKind::kTinyNN);
  EXPECT_THROW(ParsePredictorKind("gp"), InvalidArgumentError);
}

TEST(BenchmarkSuiteTest, RejectsBadInputs) {
  ExperimentConfig bad = SmallConfig(1);
  bad.function_name = "nope";
  EXPECT_THROW(RunBenchmarkSuite(bad, kAllMethods), InvalidArgumentError);
  const std::vector<Method> truth = {Method::kTruth};
  EXPECT_THROW(RunBenchmarkSuite(SmallConfig(1), truth), InvalidArgumentError);
}

}  // namespace
}  // namespace a2d2e
