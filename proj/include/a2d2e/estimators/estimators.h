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

// Main-effect estimators: partial dependence (PD), accumulated local effects
// (ALE), and the aggregated local D-optimal design estimator (A2D2E).
//
// ALE and A2D2E both accumulate one increment per quantile bin. For a grid
// location x in bin J the curve value is
//
//   sum_{k < J} increment_k + (x - z_J) / (z_{J+1} - z_J) * increment_J,
//
// i.e. the accumulated curve is continuous and piecewise linear, reaching the
// full sum over bins 0..J at the bin's upper endpoint. For A2D2E the last
// term equals (x - z_J) times the bin's mean slope.
//
// All returned curves are centered over their grid.

#ifndef A2D2E_ESTIMATORS_ESTIMATORS_H_
#define A2D2E_ESTIMATORS_ESTIMATORS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "a2d2e/core/dataset.h"
#include "a2d2e/core/effect_curve.h"
#include "a2d2e/core/matrix.h"
#include "a2d2e/core/partition.h"
#include "a2d2e/estimators/local_design.h"
#include "a2d2e/predictors/predictor.h"

namespace a2d2e {

struct EstimatorOptions {
  std::size_t bins = 40;
  double delta = 0.01;
  std::size_t grid_size = 100;
  std::size_t max_design_dims = kMaxDesignDims;
};

// Contribution of one bin to an accumulated curve; increment equals
// width * mean_slope. For ALE the increment is the mean endpoint difference.
struct BinIncrement {
  std::size_t bin = 0;
  std::size_t variable = 0;
  double width = 0.0;
  double mean_slope = 0.0;
  double increment = 0.0;
  std::size_t count = 0;
};

// Local slopes at every training point. Each point's 2^D design is evaluated
// once and all D slope components come from that single batch, so one field
// serves the curves of every variable.
struct LocalSlopeField {
  double delta = 0.0;
  Matrix slopes;                   // N x D
  std::vector<double> intercepts;  // N
};

// Issues exactly N * 2^D point queries.
LocalSlopeField ComputeLocalSlopes(
    const Dataset& dataset, Predictor& predictor, double delta,
    std::size_t max_design_dims = kMaxDesignDims);

std::vector<BinIncrement> A2D2EIncrements(const Partition& partition,
                                          const BinIndexSets& bins,
                                          const LocalSlopeField& field);

// Queries the predictor at both bin endpoints with the other coordinates of
// every member row (2N queries).
std::vector<BinIncrement> AleIncrements(const Dataset& dataset,
                                        Predictor& predictor,
                                        const Partition& partition,
                                        const BinIndexSets& bins);

// Uncentered accumulated curve values on `grid`. Grid points outside the
// partition range are clamped to its terminal bins.
std::vector<double> AccumulateIncrements(
    const Partition& partition, std::span<const BinIncrement> increments,
    std::span<const double> grid);

EffectCurve EstimateA2D2E(const Dataset& dataset, Predictor& predictor,
                          std::size_t d, const EstimatorOptions& options,
                          std::span<const double> grid);
EffectCurve EstimateA2D2E(const Dataset& dataset, Predictor& predictor,
                          std::size_t d, const EstimatorOptions& options);

EffectCurve EstimateAle(const Dataset& dataset, Predictor& predictor,
                        std::size_t d, const EstimatorOptions& options,
                        std::span<const double> grid);
EffectCurve EstimateAle(const Dataset& dataset, Predictor& predictor,
                        std::size_t d, const EstimatorOptions& options);

// (1/N) sum_n f(x, x_{n,\d}) at every grid location: N * |grid| queries.
EffectCurve EstimatePd(const Dataset& dataset, Predictor& predictor,
                       std::size_t d, std::span<const double> grid);
EffectCurve EstimatePd(const Dataset& dataset, Predictor& predictor,
                       std::size_t d, const EstimatorOptions& options);

// Curves for every variable on the default grids. For A2D2E the slope field is
// computed once and shared across variables.
std::vector<EffectCurve> EstimateAllVariables(const Dataset& dataset,
                                              Predictor& predictor,
                                              Method method,
                                              const EstimatorOptions& options);

// Sampling variance of one bin increment under additive N(0, sigma^2) model
// noise:
//   ALE:   2 sigma^2 / count
//   A2D2E: width^2 sigma^2 / (count * 2^(D-2) * delta^2)
// Throws InvalidArgumentError for other methods or non-positive inputs.
double BinIncrementVariance(Method kind, double sigma, std::size_t count,
                            double width, double delta, std::size_t dims);

}  // namespace a2d2e

#endif  // A2D2E_ESTIMATORS_ESTIMATORS_H_
