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

#include "a2d2e/estimators/local_design.h"

#include <cmath>
#include <random>
#include <vector>

#include "a2d2e/core/errors.h"
#include "gtest/gtest.h"

namespace a2d2e {
namespace {

std::vector<double> Evaluate(const LocalDesign& design,
                             double (*f)(std::span<const double>)) {
  const Matrix v = design.Vertices();
  std::vector<double> y(v.rows());
  for (std::size_t i = 0; i < v.rows(); ++i) y[i] = f(v.row(i));
  return y;
}

TEST(LocalDesignTest, OneDimensionalStencil) {
  const LocalDesign d(std::vector<double>{0.5}, 0.2);
  const Matrix v = d.Vertices();
  ASSERT_EQ(v.rows(), 2u);
  EXPECT_DOUBLE_EQ(v(0, 0), 0.4);
  EXPECT_DOUBLE_EQ(v(1, 0), 0.6);
}

TEST(LocalDesignTest, SquareCornersInLexicographicOrder) {
  const LocalDesign d(std::vector<double>{0, 0}, 2);
  EXPECT_EQ(d.Vertices(),
            Matrix::FromRows({{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}));
}

TEST(LocalDesignTest, CenteredGramIsScaledIdentity) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0, 1);
  for (std::size_t dims = 1; dims <= 8; ++dims) {
    std::vector<double> center(dims);
    for (double& c : center) c = u(rng);
    const double delta = 0.01;
    const LocalDesign d(center, delta);
    const Matrix vt = d.CenteredVertices();
    ASSERT_EQ(vt.rows(), std::size_t{1} << dims);
    const double expected =
        std::ldexp(1.0, static_cast<int>(dims) - 2) * delta * delta;
    for (std::size_t a = 0; a < dims; ++a) {
      for (std::size_t b = 0; b < dims; ++b) {
        double g = 0;
        for (std::size_t r = 0; r < vt.rows(); ++r) g += vt(r, a) * vt(r, b);
        EXPECT_NEAR(g, a == b ? expected : 0.0, 1e-10);
      }
    }
    const Matrix v = d.Vertices();
    for (std::size_t j = 0; j < dims; ++j) {
      double mean = 0;
      for (std::size_t r = 0; r < v.rows(); ++r) mean += v(r, j);
      EXPECT_NEAR(mean / static_cast<double>(v.rows()), center[j], 1e-12);
    }
  }
}

TEST(LocalDesignTest, ThreeDimensionalGramValue) {
  const LocalDesign d(std::vector<double>{0.3, 0.1, 0.9}, 0.01);
  const Matrix vt = d.CenteredVertices();
  for (std::size_t a = 0; a < 3; ++a) {
    double g = 0;
    for (std::size_t r = 0; r < vt.rows(); ++r) g += vt(r, a) * vt(r, a);
    EXPECT_NEAR(g, 2e-4, 1e-16);
  }
}

TEST(LocalDesignTest, Rejections) {
  EXPECT_THROW(LocalDesign(std::vector<double>{0.5}, 0.0),
               InvalidArgumentError);
  EXPECT_THROW(LocalDesign(std::vector<double>{}, 0.1), InvalidArgumentError);
  EXPECT_THROW(LocalDesign(std::vector<double>(17, 0.5), 0.1),
               InvalidArgumentError);
  EXPECT_THROW(LocalDesign(std::vector<double>(5, 0.5), 0.1, 4),
               InvalidArgumentError);
  EXPECT_NO_THROW(LocalDesign(std::vector<double>(16, 0.5), 0.1));
}

double Linear(std::span<const double> x) { return 3 * x[0] - 2 * x[1] + 0.7; }
double Square(std::span<const double> x) { return x[0] * x[0]; }
double Constant(std::span<const double>) { return 4.25; }
double Product(std::span<const double> x) { return x[0] * x[1]; }

TEST(LocalSlopesTest, LinearRecoveredExactly) {
  const LocalDesign d(std::vector<double>{0.4, 0.8}, 0.01);
  const auto y = Evaluate(d, Linear);
  for (const SlopeVector& s : {LocalSlopesFast(d, y), LocalSlopesOls(d, y)}) {
    EXPECT_NEAR(s.slopes[0], 3.0, 1e-10);
    EXPECT_NEAR(s.slopes[1], -2.0, 1e-10);
    EXPECT_NEAR(s.intercept, Linear(d.center()), 1e-12);
  }
  const SlopeVector fast = LocalSlopesFast(d, y);
  EXPECT_NEAR(fast.slopes[0], 3.0, 1e-12);
  EXPECT_NEAR(fast.slopes[1], -2.0, 1e-12);
}

TEST(LocalSlopesTest, SquareCentralDifferenceIdentity) {
  for (const double delta : {1e-3, 0.01, 0.1, 0.5, 1.0}) {
    const LocalDesign d(std::vector<double>{0.5}, delta);
    const auto y = Evaluate(d, Square);
    EXPECT_NEAR(LocalSlopesFast(d, y).slopes[0], 1.0, 1e-12) << delta;
    EXPECT_NEAR(LocalSlopesOls(d, y).slopes[0], 1.0, 1e-10) << delta;
  }
}

TEST(LocalSlopesTest, ConstantGivesZeroSlopes) {
  const LocalDesign d(std::vector<double>{0.1, 0.2, 0.3}, 0.05);
  const auto y = Evaluate(d, Constant);
  for (const SlopeVector& s : {LocalSlopesFast(d, y), LocalSlopesOls(d, y)}) {
    for (const double b : s.slopes) EXPECT_NEAR(b, 0.0, 1e-10);
    EXPECT_NEAR(s.intercept, 4.25, 1e-10);
  }
}

TEST(LocalSlopesTest, ProductAtOriginCancels) {
  const LocalDesign d(std::vector<double>{0, 0}, 0.3);
  const auto y = Evaluate(d, Product);
  const SlopeVector s = LocalSlopesOls(d, y);
  EXPECT_NEAR(s.slopes[0], 0.0, 1e-10);
  EXPECT_NEAR(s.slopes[1], 0.0, 1e-10);
}

TEST(LocalSlopesTest, RiseOverRun) {
  const LocalDesign d(std::vector<double>{0.5}, 0.2);
  const std::vector<double> y = {0, 1};
  EXPECT_NEAR(LocalSlopesOls(d, y).slopes[0], 5.0, 1e-10);
  EXPECT_NEAR(LocalSlopesFast(d, y).slopes[0], 5.0, 1e-12);
}

TEST(LocalSlopesTest, LengthMismatch) {
  const LocalDesign d(std::vector<double>{0.5, 0.5}, 0.2);
  EXPECT_THROW(LocalSlopesFast(d, std::vector<double>(3)),
               InvalidArgumentError);
  EXPECT_THROW(LocalSlopesOls(d, std::vector<double>(5)), InvalidArgumentError);
}

TEST(LocalSlopesTest, FastMatchesOlsOnRandomSmoothFunctions) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t dims = dim(rng);
    std::vector<double> center(dims);
    std::vector<double> a(dims);
    for (std::size_t j = 0; j < dims; ++j) {
      center[j] = u(rng);
      a[j] = 4 * u(rng) - 2;
    }
    const double delta = std::pow(10.0, -3.0 + 2.7 * u(rng));
    const LocalDesign d(center, delta);
    const Matrix v = d.Vertices();
    std::vector<double> y(v.rows());
    for (std::size_t r = 0; r < v.rows(); ++r) {
      double s = 0;
      double q = 0;
      for (std::size_t j = 0; j < dims; ++j) {
        s += a[j] * v(r, j);
        q += v(r, j) * v(r, j);
      }
      y[r] = std::sin(s) + std::exp(-q) + s * s * s;
    }
    const SlopeVector fast = LocalSlopesFast(d, y);
    const SlopeVector ols = LocalSlopesOls(d, y);
    for (std::size_t j = 0; j < dims; ++j) {
      EXPECT_LE(std::abs(fast.slopes[j] - ols.slopes[j]), 1e-8)
          << "trial " << trial << " D=" << dims << " delta=" << delta;
    }
    EXPECT_NEAR(fast.intercept, ols.intercept, 1e-8);
  }
}

}  // namespace
}  // namespace a2d2e
