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

#include "a2d2e/estimators/estimators.h"

#include <cmath>
#include <memory>
#include <random>
#include <vector>

#include "a2d2e/binning/binning.h"
#include "a2d2e/core/errors.h"
#include "gtest/gtest.h"

namespace a2d2e {
namespace {

Dataset UniformData(std::size_t n, std::size_t dims, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0, 1);
  Matrix m(n, dims);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < dims; ++j) m(i, j) = u(rng);
  }
  return Dataset(std::move(m), std::vector<double>(n, 0.0));
}

// Correlated inputs so that the estimators see off-diagonal structure.
Dataset CorrelatedData(std::size_t n, std::size_t dims, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0, 1);
  std::normal_distribution<double> z(0, 0.05);
  Matrix m(n, dims);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, 0) = u(rng);
    for (std::size_t j = 1; j < dims; ++j) m(i, j) = m(i, 0) + z(rng);
  }
  return Dataset(std::move(m), std::vector<double>(n, 0.0));
}

std::shared_ptr<CountingPredictor> Counted(std::size_t dims,
                                           FunctionPredictor::Function f) {
  return std::make_shared<CountingPredictor>(
      std::make_shared<FunctionPredictor>(dims, std::move(f)));
}

std::vector<double> Centered(const std::vector<double>& grid,
                             double (*g)(double)) {
  std::vector<double> v(grid.size());
  double mean = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    v[i] = g(grid[i]);
    mean += v[i];
  }
  mean /= static_cast<double>(grid.size());
  for (double& x : v) x -= mean;
  return v;
}

double MaxAbsDiff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

const std::vector<double> kBeta = {0.3, 2.0, -1.5, 0.75};

double Additive(std::span<const double> x) {
  double v = 1.25;
  for (std::size_t j = 0; j < x.size(); ++j) v += kBeta[j] * x[j];
  return v;
}

TEST(EstimatorsTest, AdditiveModelCurvesCoincide) {
  for (const Dataset& data :
       {UniformData(300, 4, 1), CorrelatedData(300, 4, 2)}) {
    FunctionPredictor f(4, Additive);
    EstimatorOptions options;
    const LocalSlopeField field = ComputeLocalSlopes(data, f, options.delta);
    for (std::size_t n = 0; n < data.size(); ++n) {
      for (std::size_t j = 0; j < 4; ++j) {
        EXPECT_NEAR(field.slopes(n, j), kBeta[j], 1e-12);
      }
    }
    for (std::size_t d = 0; d < 4; ++d) {
      const Partition p = QuantilePartition(data, d, options.bins);
      const BinIndexSets bins = AssignBins(data, p);
      const auto ale = AleIncrements(data, f, p, bins);
      for (std::size_t k = 0; k < p.bins(); ++k) {
        EXPECT_NEAR(ale[k].increment, kBeta[d] * p.width(k), 1e-12);
      }
      const EffectCurve pd = EstimatePd(data, f, d, options);
      const EffectCurve al = EstimateAle(data, f, d, options);
      const EffectCurve a2 = EstimateA2D2E(data, f, d, options);
      EXPECT_TRUE(pd.centered && al.centered && a2.centered);
      EXPECT_EQ(pd.grid, a2.grid);
      EXPECT_LE(MaxAbsDiff(pd.values, al.values), 1e-10);
      EXPECT_LE(MaxAbsDiff(pd.values, a2.values), 1e-10);
      EXPECT_LE(MaxAbsDiff(al.values, a2.values), 1e-10);
      // Against the centered line itself.
      std::vector<double> line(pd.grid.size());
      double mean = 0;
      for (std::size_t i = 0; i < line.size(); ++i) {
        line[i] = kBeta[d] * pd.grid[i];
        mean += line[i];
      }
      for (double& v : line) v -= mean / static_cast<double>(line.size());
      EXPECT_LE(MaxAbsDiff(a2.values, line), 1e-10);
    }
  }
}

double Simple1(std::span<const double> x) { return x[0] * x[0] + x[1]; }

TEST(EstimatorsTest, Simple1SecondVariableIsIdentity) {
  const Dataset data = UniformData(200, 2, 3);
  FunctionPredictor f(2, Simple1);
  const EffectCurve c = EstimateA2D2E(data, f, 1, EstimatorOptions{});
  EXPECT_LE(MaxAbsDiff(c.values, Centered(c.grid, [](double x) { return x; })),
            1e-10);
}

TEST(EstimatorsTest, Simple1FirstVariableIsQuadratic) {
  FunctionPredictor f(2, Simple1);
  const auto square = [](double x) { return x * x; };
  const Dataset dense = UniformData(4000, 2, 4);
  const EffectCurve a2 = EstimateA2D2E(dense, f, 0, EstimatorOptions{});
  EXPECT_LT(MaxAbsDiff(a2.values, Centered(a2.grid, square)), 1e-3);
  const Dataset small = UniformData(200, 2, 5);
  const EffectCurve ale = EstimateAle(small, f, 0, EstimatorOptions{});
  EXPECT_LT(MaxAbsDiff(ale.values, Centered(ale.grid, square)), 1e-3);
}

TEST(EstimatorsTest, AleSingleBinIdentity) {
  Dataset data = UniformData(50, 2, 6);
  Matrix m = data.inputs();
  m(0, 0) = 0.0;
  m(1, 0) = 1.0;
  data = Dataset(m, data.responses());
  FunctionPredictor f(2, [](std::span<const double> x) { return x[0]; });
  const Partition p = QuantilePartition(data, 0, 1);
  const auto inc = AleIncrements(data, f, p, AssignBins(data, p));
  ASSERT_EQ(inc.size(), 1u);
  EXPECT_EQ(inc[0].increment, 1.0);
  EXPECT_EQ(inc[0].width, 1.0);
  EstimatorOptions options;
  options.bins = 1;
  const EffectCurve c = EstimateAle(data, f, 0, options);
  EXPECT_LE(MaxAbsDiff(c.values, Centered(c.grid, [](double x) { return x; })),
            1e-12);
}

TEST(EstimatorsTest, PdOfProductHasSlopeOfMean) {
  const Dataset data = UniformData(100, 2, 7);
  double m = 0;
  for (std::size_t n = 0; n < data.size(); ++n) m += data.value(n, 1);
  m /= 100.0;
  FunctionPredictor f(2, [](std::span<const double> x) { return x[0] * x[1]; });
  const EffectCurve c = EstimatePd(data, f, 0, EstimatorOptions{});
  for (std::size_t i = 1; i < c.grid.size(); ++i) {
    EXPECT_NEAR((c.values[i] - c.values[i - 1]) / (c.grid[i] - c.grid[i - 1]),
                m, 1e-9);
  }
}

TEST(EstimatorsTest, PdWithSingleRowPinsOtherCoordinates) {
  const Dataset one(Matrix::FromRows({{0.2, 0.7}}), {0.0});
  FunctionPredictor f(2, Simple1);
  const std::vector<double> grid = {0.0, 0.5, 1.0};
  const EffectCurve c = EstimatePd(one, f, 0, grid);
  const std::vector<double> raw = {0.7, 0.95, 1.7};
  const double mean = (raw[0] + raw[1] + raw[2]) / 3;
  for (std::size_t i = 0; i < 3; ++i)
    EXPECT_NEAR(c.values[i], raw[i] - mean, 1e-15);
}

TEST(EstimatorsTest, QueryAccounting) {
  const std::size_t n = 120;
  const std::size_t dims = 3;
  const Dataset data = UniformData(n, dims, 8);
  auto f = Counted(dims, Additive);
  EstimatorOptions options;
  options.grid_size = 50;

  const auto a2d2e = EstimateAllVariables(data, *f, Method::kA2D2E, options);
  EXPECT_EQ(a2d2e.size(), dims);
  EXPECT_EQ(f->points(), n * (std::size_t{1} << dims));

  f->Reset();
  EstimateAle(data, *f, 0, options);
  EXPECT_EQ(f->points(), 2 * n);
  EXPECT_LE(f->points(), 2 * n * options.bins);

  f->Reset();
  EstimatePd(data, *f, 0, options);
  EXPECT_EQ(f->points(), n * options.grid_size);
}

TEST(EstimatorsTest, SharedFieldMatchesPerVariableEstimates) {
  const Dataset data = CorrelatedData(150, 3, 9);
  FunctionPredictor f(3, [](std::span<const double> x) {
    return std::sin(3 * x[0]) * x[1] + x[2] * x[2];
  });
  const EstimatorOptions options;
  const auto all = EstimateAllVariables(data, f, Method::kA2D2E, options);
  for (std::size_t d = 0; d < 3; ++d) {
    EXPECT_EQ(all[d].values, EstimateA2D2E(data, f, d, options).values);
  }
}

TEST(EstimatorsTest, CurveIsPiecewiseLinearWithBinMeanSlope) {
  const Dataset data = UniformData(200, 2, 10);
  FunctionPredictor f(
      2, [](std::span<const double> x) { return std::exp(x[0]) * (1 + x[1]); });
  EstimatorOptions options;
  options.bins = 8;
  const Partition p = QuantilePartition(data, 0, options.bins);
  const LocalSlopeField field = ComputeLocalSlopes(data, f, options.delta);
  const auto inc = A2D2EIncrements(p, AssignBins(data, p), field);
  const std::vector<double> grid =
      Linspace(p.endpoints.front(), p.endpoints.back(), 2001);
  const EffectCurve c = EstimateA2D2E(data, f, 0, options, grid);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const std::size_t k = Locate(grid[i], p).bin;
    if (Locate(grid[i - 1], p).bin != k || grid[i - 1] < p.lower(k)) continue;
    const double slope =
        (c.values[i] - c.values[i - 1]) / (grid[i] - grid[i - 1]);
    EXPECT_NEAR(slope, inc[k].mean_slope, 1e-7 * (1 + std::abs(slope)));
  }
  for (const BinIncrement& b : inc) {
    EXPECT_EQ(b.increment, b.width * b.mean_slope);
    EXPECT_GE(b.count, 1u);
  }
}

TEST(EstimatorsTest, AccumulateClampsOutsideRange) {
  Partition p;
  p.endpoints = {0, 1, 2};
  std::vector<BinIncrement> inc(2);
  inc[0].increment = 1;
  inc[1].increment = 3;
  const auto v = AccumulateIncrements(
      p, inc, std::vector<double>{-1, 0, 0.5, 1, 1.5, 2, 5});
  EXPECT_EQ(v, std::vector<double>({0, 0, 0.5, 1, 2.5, 4, 4}));
}

TEST(EstimatorsTest, MemoizationDoesNotChangeResults) {
  const Dataset data = CorrelatedData(100, 2, 11);
  auto f = std::make_shared<FunctionPredictor>(2, Simple1);
  MemoizingPredictor memo(f);
  const EstimatorOptions options;
  for (const Method m : {Method::kPd, Method::kAle, Method::kA2D2E}) {
    const auto a = EstimateAllVariables(data, *f, m, options);
    const auto b = EstimateAllVariables(data, memo, m, options);
    for (std::size_t d = 0; d < 2; ++d) EXPECT_EQ(a[d].values, b[d].values);
  }
  EXPECT_THROW(EstimateAllVariables(data, *f, Method::kTruth, options),
               InvalidArgumentError);
}

TEST(EstimatorsTest, DesignCapIsEnforced) {
  const Dataset data = UniformData(5, 17, 12);
  auto f = Counted(17, [](std::span<const double> x) { return x[0]; });
  EXPECT_THROW(ComputeLocalSlopes(data, *f, 0.01), InvalidArgumentError);
  EXPECT_EQ(f->points(), 0u);
}

TEST(EstimatorsTest, RejectsMismatchedPredictor) {
  const Dataset data = UniformData(20, 2, 13);
  FunctionPredictor f(3, [](std::span<const double> x) { return x[0]; });
  EXPECT_THROW(EstimatePd(data, f, 0, EstimatorOptions{}),
               InvalidArgumentError);
  FunctionPredictor g(2, Simple1);
  EXPECT_THROW(EstimateAle(data, g, 2, EstimatorOptions{}),
               InvalidArgumentError);
}

TEST(BinIncrementVarianceTest, Formulas) {
  EXPECT_NEAR(BinIncrementVariance(Method::kAle, 0.1, 50, 0.05, 0.01, 2), 4e-4,
              1e-18);
  EXPECT_NEAR(BinIncrementVariance(Method::kA2D2E, 0.1, 50, 0.025, 0.01, 2),
              1.25e-3, 1e-15);
  EXPECT_NEAR(BinIncrementVariance(Method::kA2D2E, 0.1, 50, 0.05, 0.025, 4),
              2e-4, 1e-18);
  for (std::size_t dims = 1; dims <= 8; ++dims) {
    const double w = 0.04;
    EXPECT_NEAR(BinIncrementVariance(Method::kA2D2E, 0.2, 30, w, w / 2, dims),
                0.04 / (30 * std::ldexp(1.0, static_cast<int>(dims) - 4)),
                1e-15);
  }
  EXPECT_THROW(BinIncrementVariance(Method::kPd, 0.1, 50, 0.05, 0.01, 2),
               InvalidArgumentError);
  EXPECT_THROW(BinIncrementVariance(Method::kAle, 0.1, 0, 0.05, 0.01, 2),
               InvalidArgumentError);
}

}  // namespace
}  // namespace a2d2e
