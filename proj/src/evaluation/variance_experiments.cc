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

#include "a2d2e/evaluation/variance_experiments.h"

#include <cmath>
#include <memory>
#include <random>
#include <string>

#include "a2d2e/binning/binning.h"
#include "a2d2e/core/dataset.h"
#include "a2d2e/core/errors.h"
#include "a2d2e/core/random.h"
#include "a2d2e/estimators/estimators.h"
#include "a2d2e/predictors/noisy_predictor.h"

namespace a2d2e {
namespace {

// Coefficient of variable j in the linear test model.
double Beta(std::size_t j) { return 1.0 + 0.5 * static_cast<double>(j); }

struct Moments {
  double mean = 0.0;
  double variance = 0.0;  // unbiased
};

// Welford; identical inputs give exactly zero variance.
Moments ComputeMoments(std::span<const double> values) {
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t n = 0;
  for (const double v : values) {
    ++n;
    const double delta = v - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (v - mean);
  }
  return {mean, n > 1 ? m2 / static_cast<double>(n - 1) : 0.0};
}

// Increment estimates of one bin over independent noise draws.
std::vector<double> SampleIncrements(Method kind, std::size_t dims,
                                     double sigma, std::size_t count,
                                     double width, double delta,
                                     std::size_t replicates,
                                     std::uint64_t seed) {
  if (kind != Method::kAle && kind != Method::kA2D2E) {
    throw InvalidArgumentError("variance experiments support ALE and A2D2E");
  }
  if (dims == 0 || count == 0 || !(width > 0.0) || !std::isfinite(width) ||
      !(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw InvalidArgumentError(
        "variance experiment needs dims, count, width > 0 and sigma >= 0");
  }
  if (kind == Method::kA2D2E) {
    // Validates delta and the dimension cap up front.
    const std::vector<double> probe(dims, 0.5);
    LocalDesign(probe, delta);
  }

  Engine engine = MakeEngine(DeriveSeed(seed, "points"));
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  Matrix inputs(count, dims);
  for (std::size_t i = 0; i < count; ++i) {
    inputs(i, 0) = width * uniform(engine);
    for (std::size_t j = 1; j < dims; ++j) inputs(i, j) = uniform(engine);
  }
  const Dataset dataset(std::move(inputs), std::vector<double>(count, 0.0));

  Partition partition;
  partition.variable = 0;
  partition.endpoints = {0.0, width};
  partition.requested_bins = 1;
  const BinIndexSets bins = AssignBins(dataset, partition);

  auto linear =
      std::make_shared<FunctionPredictor>(dims, [](std::span<const double> x) {
        double v = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) v += Beta(j) * x[j];
        return v;
      });
  auto noisy = WrapWithNoise(linear, sigma, DeriveSeed(seed, "noise"));

  std::vector<double> out;
  out.reserve(replicates);
  for (std::size_t r = 0; r < replicates; ++r) {
    if (kind == Method::kAle) {
      out.push_back(
          AleIncrements(dataset, *noisy, partition, bins)[0].increment);
    } else {
      const LocalSlopeField field = ComputeLocalSlopes(dataset, *noisy, delta);
      out.push_back(A2D2EIncrements(partition, bins, field)[0].increment);
    }
  }
  return out;
}

}  // namespace

VarianceReport RunVarianceExperiment(Method kind, std::size_t dims,
                                     double sigma, std::size_t count,
                                     double width, double delta,
                                     std::size_t replicates,
                                     std::uint64_t seed) {
  if (replicates < kMinVarianceReplicates) {
    throw InvalidArgumentError("variance experiments need at least " +
                               std::to_string(kMinVarianceReplicates) +
                               " replicates");
  }
  const std::vector<double> increments = SampleIncrements(
      kind, dims, sigma, count, width, delta, replicates, seed);
  const Moments moments = ComputeMoments(increments);

  VarianceReport report;
  report.kind = kind;
  report.dims = dims;
  report.sigma = sigma;
  report.count = count;
  report.width = width;
  report.delta = delta;
  report.replicates = replicates;
  report.seed = seed;
  report.mean_increment = moments.mean;
  report.true_increment = Beta(0) * width;
  report.empirical_variance = moments.variance;
  report.theoretical_variance =
      BinIncrementVariance(kind, sigma, count, width, delta, dims);
  const double gap =
      std::abs(report.empirical_variance - report.theoretical_variance);
  report.relative_error = gap == 0.0 ? 0.0 : gap / report.theoretical_variance;
  return report;
}

nlohmann::ordered_json ToJson(const VarianceReport& report) {
  nlohmann::ordered_json j;
  j["kind"] = MethodName(report.kind);
  j["dims"] = report.dims;
  j["sigma"] = report.sigma;
  j["count"] = report.count;
  j["width"] = report.width;
  j["delta"] = report.delta;
  j["replicates"] = report.replicates;
  j["seed"] = report.seed;
  j["mean_increment"] = report.mean_increment;
  j["true_increment"] = report.true_increment;
  j["empirical_variance"] = report.empirical_variance;
  j["theoretical_variance"] = report.theoretical_variance;
  j["relative_error"] = std::isfinite(report.relative_error)
                            ? nlohmann::ordered_json(report.relative_error)
                            : nlohmann::ordered_json(nullptr);
  return j;
}

ConsistencyReport RunConsistencyExperiment(std::span<const std::size_t> counts,
                                           std::size_t replicates,
                                           std::uint64_t seed,
                                           const ConsistencyOptions& options) {
  if (counts.empty()) throw InvalidArgumentError("no counts given");
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0 || (i > 0 && counts[i] <= counts[i - 1])) {
      throw InvalidArgumentError(
          "counts must be positive and strictly increasing");
    }
  }
  ConsistencyReport report;
  report.options = options;
  report.replicates = replicates;
  report.seed = seed;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    ConsistencyRow row;
    row.count = counts[i];
    if (replicates < 2) {
      row.error = "standard deviation undefined for fewer than 2 replicates";
    } else {
      const auto increments = SampleIncrements(
          Method::kA2D2E, options.dims, options.sigma, counts[i], options.width,
          options.delta, replicates, DeriveSeed(seed, i));
      row.std_dev = std::sqrt(ComputeMoments(increments).variance);
    }
    report.rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i + 1 < report.rows.size(); ++i) {
    const ConsistencyRow& a = report.rows[i];
    const ConsistencyRow& b = report.rows[i + 1];
    if (a.error || b.error || b.std_dev == 0.0) {
      report.ratios.emplace_back();
    } else {
      report.ratios.emplace_back(a.std_dev / b.std_dev);
    }
  }
  return report;
}

nlohmann::ordered_json ToJson(const ConsistencyReport& report) {
  nlohmann::ordered_json j;
  j["dims"] = report.options.dims;
  j["sigma"] = report.options.sigma;
  j["width"] = report.options.width;
  j["delta"] = report.options.delta;
  j["replicates"] = report.replicates;
  j["seed"] = report.seed;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json r;
    r["count"] = row.count;
    if (row.error) {
      r["error"] = *row.error;
    } else {
      r["std"] = row.std_dev;
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  nlohmann::ordered_json ratios = nlohmann::ordered_json::array();
  for (const auto& ratio : report.ratios) {
    ratios.push_back(ratio ? nlohmann::ordered_json(*ratio)
                           : nlohmann::ordered_json(nullptr));
  }
  j["ratios"] = std::move(ratios);
  return j;
}

}  // namespace a2d2e
