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

#include <algorithm>
#include <cmath>
#include <string>

#include "a2d2e/binning/binning.h"
#include "a2d2e/core/errors.h"

namespace a2d2e {
namespace {

// Upper bound on rows per predictor batch for large designs and grids.
constexpr std::size_t kMaxBatchRows = std::size_t{1} << 16;

void CheckVariable(const Dataset& dataset, std::size_t d) {
  if (d >= dataset.dims()) {
    throw InvalidArgumentError("variable index " + std::to_string(d) +
                               " out of range for " +
                               std::to_string(dataset.dims()) + " inputs");
  }
}

void CheckPredictor(const Dataset& dataset, const Predictor& predictor) {
  if (predictor.dims() != dataset.dims()) {
    throw InvalidArgumentError(
        "predictor dimension " + std::to_string(predictor.dims()) +
        " does not match dataset dimension " + std::to_string(dataset.dims()));
  }
}

EffectCurve FinishCurve(std::size_t d, std::span<const double> grid,
                        std::vector<double> values, Method method) {
  EffectCurve curve;
  curve.variable = d;
  curve.grid.assign(grid.begin(), grid.end());
  curve.values = std::move(values);
  curve.method = method;
  ValidateCurve(curve);
  return CenterCurve(std::move(curve));
}

EffectCurve A2D2EFromField(const Dataset& dataset, const LocalSlopeField& field,
                           std::size_t d, const EstimatorOptions& options,
                           std::span<const double> grid) {
  const Partition partition = QuantilePartition(dataset, d, options.bins);
  const BinIndexSets bins = AssignBins(dataset, partition);
  const auto increments = A2D2EIncrements(partition, bins, field);
  return FinishCurve(d, grid, AccumulateIncrements(partition, increments, grid),
                     Method::kA2D2E);
}

}  // namespace

LocalSlopeField ComputeLocalSlopes(const Dataset& dataset, Predictor& predictor,
                                   double delta, std::size_t max_design_dims) {
  CheckPredictor(dataset, predictor);
  const std::size_t dims = dataset.dims();
  const std::size_t n = dataset.size();
  // Validates delta and the dimension cap before any query is issued.
  const LocalDesign probe(dataset.point(0), delta, max_design_dims);
  const std::size_t vertices = probe.vertex_count();

  LocalSlopeField field;
  field.delta = delta;
  field.slopes = Matrix(n, dims);
  field.intercepts.resize(n);

  const std::size_t points_per_batch =
      std::max<std::size_t>(1, kMaxBatchRows / vertices);
  for (std::size_t start = 0; start < n; start += points_per_batch) {
    const std::size_t stop = std::min(n, start + points_per_batch);
    Matrix batch((stop - start) * vertices, dims);
    std::vector<LocalDesign> designs;
    designs.reserve(stop - start);
    for (std::size_t i = start; i < stop; ++i) {
      designs.emplace_back(dataset.point(i), delta, max_design_dims);
      for (std::size_t v = 0; v < vertices; ++v) {
        designs.back().Vertex(v, batch.row((i - start) * vertices + v));
      }
    }
    const std::vector<double> values = predictor.PredictBatch(batch);
    for (std::size_t i = start; i < stop; ++i) {
      const SlopeVector fit = LocalSlopesFast(
          designs[i - start], std::span<const double>(values).subspan(
                                  (i - start) * vertices, vertices));
      std::copy(fit.slopes.begin(), fit.slopes.end(),
                field.slopes.row(i).begin());
      field.intercepts[i] = fit.intercept;
    }
  }
  return field;
}

std::vector<BinIncrement> A2D2EIncrements(const Partition& partition,
                                          const BinIndexSets& bins,
                                          const LocalSlopeField& field) {
  if (bins.bins() != partition.bins()) {
    throw InvalidArgumentError("bin sets do not match the partition");
  }
  const std::size_t d = partition.variable;
  std::vector<BinIncrement> out(partition.bins());
  for (std::size_t k = 0; k < partition.bins(); ++k) {
    const auto& members = bins.members[k];
    if (members.empty()) {
      throw InvalidArgumentError("bin " + std::to_string(k) + " is empty");
    }
    double sum = 0.0;
    for (const std::size_t n : members) sum += field.slopes(n, d);
    BinIncrement& inc = out[k];
    inc.bin = k;
    inc.variable = d;
    inc.width = partition.width(k);
    inc.count = members.size();
    inc.mean_slope = sum / static_cast<double>(members.size());
    inc.increment = inc.width * inc.mean_slope;
  }
  return out;
}

std::vector<BinIncrement> AleIncrements(const Dataset& dataset,
                                        Predictor& predictor,
                                        const Partition& partition,
                                        const BinIndexSets& bins) {
  CheckPredictor(dataset, predictor);
  if (bins.bins() != partition.bins()) {
    throw InvalidArgumentError("bin sets do not match the partition");
  }
  const std::size_t d = partition.variable;
  // Rows 2i and 2i+1 hold the lower/upper endpoint copies of the i-th
  // (bin, member) pair in bin order.
  Matrix queries(0, dataset.dims());
  queries.Reserve(2 * dataset.size());
  for (std::size_t k = 0; k < partition.bins(); ++k) {
    for (const std::size_t n : bins.members[k]) {
      std::vector<double> point(dataset.point(n).begin(),
                                dataset.point(n).end());
      point[d] = partition.lower(k);
      queries.AppendRow(point);
      point[d] = partition.upper(k);
      queries.AppendRow(point);
    }
  }
  const std::vector<double> values = predictor.PredictBatch(queries);

  std::vector<BinIncrement> out(partition.bins());
  std::size_t row = 0;
  for (std::size_t k = 0; k < partition.bins(); ++k) {
    const auto& members = bins.members[k];
    if (members.empty()) {
      throw InvalidArgumentError("bin " + std::to_string(k) + " is empty");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < members.size(); ++i, row += 2) {
      sum += values[row + 1] - values[row];
    }
    BinIncrement& inc = out[k];
    inc.bin = k;
    inc.variable = d;
    inc.width = partition.width(k);
    inc.count = members.size();
    inc.increment = sum / static_cast<double>(members.size());
    inc.mean_slope = inc.increment / inc.width;
  }
  return out;
}

std::vector<double> AccumulateIncrements(
    const Partition& partition, std::span<const BinIncrement> increments,
    std::span<const double> grid) {
  if (increments.size() != partition.bins()) {
    throw InvalidArgumentError("one increment per bin is required");
  }
  std::vector<double> before(partition.bins(), 0.0);
  for (std::size_t k = 1; k < partition.bins(); ++k) {
    before[k] = before[k - 1] + increments[k - 1].increment;
  }
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = std::clamp(grid[i], partition.endpoints.front(),
                                partition.endpoints.back());
    const std::size_t k = Locate(x, partition).bin;
    const double fraction = (x - partition.lower(k)) / partition.width(k);
    values[i] = before[k] + fraction * increments[k].increment;
  }
  return values;
}

EffectCurve EstimateA2D2E(const Dataset& dataset, Predictor& predictor,
                          std::size_t d, const EstimatorOptions& options,
                          std::span<const double> grid) {
  CheckVariable(dataset, d);
  const LocalSlopeField field = ComputeLocalSlopes(
      dataset, predictor, options.delta, options.max_design_dims);
  return A2D2EFromField(dataset, field, d, options, grid);
}

EffectCurve EstimateA2D2E(const Dataset& dataset, Predictor& predictor,
                          std::size_t d, const EstimatorOptions& options) {
  CheckVariable(dataset, d);
  const auto grid = EvaluationGrid(dataset, d, options.grid_size);
  return EstimateA2D2E(dataset, predictor, d, options, grid);
}

EffectCurve EstimateAle(const Dataset& dataset, Predictor& predictor,
                        std::size_t d, const EstimatorOptions& options,
                        std::span<const double> grid) {
  CheckVariable(dataset, d);
  const Partition partition = QuantilePartition(dataset, d, options.bins);
  const BinIndexSets bins = AssignBins(dataset, partition);
  const auto increments = AleIncrements(dataset, predictor, partition, bins);
  return FinishCurve(d, grid, AccumulateIncrements(partition, increments, grid),
                     Method::kAle);
}

EffectCurve EstimateAle(const Dataset& dataset, Predictor& predictor,
                        std::size_t d, const EstimatorOptions& options) {
  CheckVariable(dataset, d);
  const auto grid = EvaluationGrid(dataset, d, options.grid_size);
  return EstimateAle(dataset, predictor, d, options, grid);
}

EffectCurve EstimatePd(const Dataset& dataset, Predictor& predictor,
                       std::size_t d, std::span<const double> grid) {
  CheckVariable(dataset, d);
  CheckPredictor(dataset, predictor);
  const std::size_t n = dataset.size();
  std::vector<double> values(grid.size(), 0.0);
  const std::size_t grid_per_batch =
      std::max<std::size_t>(1, kMaxBatchRows / n);
  for (std::size_t start = 0; start < grid.size(); start += grid_per_batch) {
    const std::size_t stop = std::min(grid.size(), start + grid_per_batch);
    Matrix batch((stop - start) * n, dataset.dims());
    for (std::size_t g = start; g < stop; ++g) {
      for (std::size_t i = 0; i < n; ++i) {
        auto row = batch.row((g - start) * n + i);
        std::copy(dataset.point(i).begin(), dataset.point(i).end(),
                  row.begin());
        row[d] = grid[g];
      }
    }
    const std::vector<double> predictions = predictor.PredictBatch(batch);
    for (std::size_t g = start; g < stop; ++g) {
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        sum += predictions[(g - start) * n + i];
      values[g] = sum / static_cast<double>(n);
    }
  }
  return FinishCurve(d, grid, std::move(values), Method::kPd);
}

EffectCurve EstimatePd(const Dataset& dataset, Predictor& predictor,
                       std::size_t d, const EstimatorOptions& options) {
  CheckVariable(dataset, d);
  const auto grid = EvaluationGrid(dataset, d, options.grid_size);
  return EstimatePd(dataset, predictor, d, grid);
}

std::vector<EffectCurve> EstimateAllVariables(const Dataset& dataset,
                                              Predictor& predictor,
                                              Method method,
                                              const EstimatorOptions& options) {
  std::vector<EffectCurve> curves;
  curves.reserve(dataset.dims());
  switch (method) {
    case Method::kA2D2E: {
      const LocalSlopeField field = ComputeLocalSlopes(
          dataset, predictor, options.delta, options.max_design_dims);
      for (std::size_t d = 0; d < dataset.dims(); ++d) {
        const auto grid = EvaluationGrid(dataset, d, options.grid_size);
        curves.push_back(A2D2EFromField(dataset, field, d, options, grid));
      }
      break;
    }
    case Method::kAle:
      for (std::size_t d = 0; d < dataset.dims(); ++d) {
        curves.push_back(EstimateAle(dataset, predictor, d, options));
      }
      break;
    case Method::kPd:
      for (std::size_t d = 0; d < dataset.dims(); ++d) {
        curves.push_back(EstimatePd(dataset, predictor, d, options));
      }
      break;
    case Method::kTruth:
      throw InvalidArgumentError("truth is not an estimator");
  }
  return curves;
}

double BinIncrementVariance(Method kind, double sigma, std::size_t count,
                            double width, double delta, std::size_t dims) {
  if (!(sigma >= 0.0) || count == 0) {
    throw InvalidArgumentError("sigma must be >= 0 and count positive");
  }
  const double s2 = sigma * sigma;
  const auto c = static_cast<double>(count);
  switch (kind) {
    case Method::kAle:
      return 2.0 * s2 / c;
    case Method::kA2D2E: {
      if (!(width > 0.0) || !(delta > 0.0) || dims == 0) {
        throw InvalidArgumentError("width, delta and dims must be positive");
      }
      const double design = std::ldexp(1.0, static_cast<int>(dims) - 2);
      return width * width * s2 / (c * design * delta * delta);
    }
    default:
      throw InvalidArgumentError(
          "increment variance is defined for ALE and "
          "A2D2E only");
  }
}

}  // namespace a2d2e
