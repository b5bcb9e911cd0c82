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

#include "a2d2e/evaluation/benchmark_suite.h"

#include <chrono>
#include <memory>
#include <ostream>
#include <random>
#include <sstream>

#include "a2d2e/benchmarks/functions.h"
#include "a2d2e/benchmarks/ground_truth.h"
#include "a2d2e/core/dataset.h"
#include "a2d2e/core/errors.h"
#include "a2d2e/core/format.h"
#include "a2d2e/core/normalizer.h"
#include "a2d2e/core/random.h"
#include "a2d2e/estimators/estimators.h"

namespace a2d2e {
namespace {

std::vector<EffectCurve> TruthCurves(const UnitFunction& function,
                                     const Dataset& dataset,
                                     const Normalizer& normalizer,
                                     const ExperimentConfig& config,
                                     const SuiteOptions& options,
                                     std::uint64_t seed) {
  const DependenceSpec spec(config.dependence_level);
  std::vector<EffectCurve> out;
  for (std::size_t d = 0; d < dataset.dims(); ++d) {
    const std::vector<double> grid =
        EvaluationGrid(dataset, d, config.grid_size);
    std::vector<double> unit_grid(grid.size());
    for (std::size_t g = 0; g < grid.size(); ++g) {
      unit_grid[g] = normalizer.Inverse(d, grid[g]);
    }
    GroundTruthOptions truth;
    truth.samples = options.truth_samples;
    truth.seed = DeriveSeed(seed, d);
    truth.pd_proxy = options.truth_pd_proxy;
    EffectCurve curve =
        GroundTruthMainEffect(function, d, unit_grid, spec, truth);
    // Score on the normalized grid the estimators use.
    curve.grid = grid;
    out.push_back(std::move(curve));
  }
  return out;
}

void RunRepetition(const ExperimentConfig& config,
                   std::span<const Method> methods, const SuiteOptions& options,
                   std::size_t rep, std::uint64_t seed,
                   const UnitFunction& function,
                   std::vector<OrmseReport>* reports) {
  const std::size_t dims = function.dims();
  const std::size_t n = config.ResolvedSampleCount(dims);
  const Matrix raw =
      SampleInputs(dims, n, DependenceSpec(config.dependence_level),
                   DeriveSeed(seed, "inputs"));

  std::vector<double> responses(n);
  for (std::size_t i = 0; i < n; ++i) responses[i] = function.Value(raw.row(i));
  const double noise_sigma =
      CalibrateNoiseSigma(responses, config.noise_fraction);
  Engine noise = MakeEngine(DeriveSeed(seed, "response-noise"));
  std::normal_distribution<double> normal(0.0, 1.0);
  for (double& y : responses) y += noise_sigma * normal(noise);

  const Normalizer normalizer = Normalizer::Fit(raw);
  const Dataset dataset(normalizer.Transform(raw), std::move(responses));

  std::shared_ptr<Predictor> model;
  if (options.predictor == PredictorKind::kOracle) {
    model = std::make_shared<NormalizedInputPredictor>(
        MakeUnitFunctionPredictor(function), normalizer);
  } else {
    TinyNNConfig nn = options.nn;
    nn.seed = DeriveSeed(seed, "nn");
    model = std::make_shared<TinyNN>(TinyNN::Train(dataset, nn));
  }
  auto memo = std::make_shared<MemoizingPredictor>(model);
  CountingPredictor counter(memo);

  const std::vector<EffectCurve> truth =
      TruthCurves(function, dataset, normalizer, config, options,
                  DeriveSeed(seed, "truth"));

  EstimatorOptions estimator;
  estimator.bins = config.k;
  estimator.delta = config.delta;
  estimator.grid_size = config.grid_size;
  for (const Method method : methods) {
    counter.Reset();
    const auto start = std::chrono::steady_clock::now();
    const std::vector<EffectCurve> curves =
        EstimateAllVariables(dataset, counter, method, estimator);
    const auto stop = std::chrono::steady_clock::now();
    OrmseReport report = Ormse(curves, truth);
    report.function = config.function_name;
    report.dependence = config.dependence_level;
    report.method = method;
    report.rep = rep;
    report.seed = seed;
    report.queries = counter.points();
    report.wall_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    reports->push_back(std::move(report));
  }
}

}  // namespace

std::string PredictorKindName(PredictorKind kind) {
  return kind == PredictorKind::kOracle ? "oracle" : "nn";
}

PredictorKind ParsePredictorKind(std::string_view name) {
  if (name == "oracle") return PredictorKind::kOracle;
  if (name == "nn") return PredictorKind::kTinyNN;
  throw InvalidArgumentError("unknown predictor kind '" + std::string(name) +
                             "'");
}

std::vector<double> SuiteResult::OrmseValues(Method method) const {
  std::vector<double> out;
  for (const auto& r : reports) {
    if (r.method == method) out.push_back(r.ormse);
  }
  return out;
}

SuiteResult RunBenchmarkSuite(const ExperimentConfig& config,
                              std::span<const Method> methods,
                              const SuiteOptions& options) {
  config.Validate();
  for (const Method m : methods) {
    if (m == Method::kTruth) {
      throw InvalidArgumentError("methods must be PD, ALE or A2D2E");
    }
  }
  const UnitFunction function(config.function_name);
  SuiteResult result;
  result.config = config;
  result.predictor = options.predictor;
  result.methods.assign(methods.begin(), methods.end());
  for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
    const std::uint64_t seed = DeriveSeed(config.seed, rep);
    std::vector<OrmseReport> reports;
    try {
      RunRepetition(config, methods, options, rep, seed, function, &reports);
    } catch (const PredictorError& e) {
      result.failures.push_back({rep, seed, e.what()});
    } catch (const NumericalError& e) {
      result.failures.push_back({rep, seed, e.what()});
    }
    if (!result.failures.empty() && result.failures.back().rep == rep) {
      if (options.log != nullptr) {
        *options.log << "repetition " << rep << " (seed " << seed
                     << ") skipped: " << result.failures.back().cause << "\n";
      }
      continue;
    }
    for (auto& r : reports) result.reports.push_back(std::move(r));
  }
  return result;
}

nlohmann::ordered_json ToJson(const SuiteResult& result, bool include_timing) {
  nlohmann::ordered_json j;
  j["config"] = ToJson(result.config);
  j["predictor"] = PredictorKindName(result.predictor);
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  for (const auto& r : result.reports) {
    nlohmann::ordered_json row;
    row["function"] = r.function;
    row["dependence"] = DependenceName(r.dependence);
    row["method"] = MethodName(r.method);
    row["rep"] = r.rep;
    row["seed"] = r.seed;
    row["per_variable_rmse"] = r.per_variable_rmse;
    row["ormse"] = r.ormse;
    row["queries"] = r.queries;
    if (include_timing) row["wall_ms"] = r.wall_ms;
    reports.push_back(std::move(row));
  }
  j["reports"] = std::move(reports);
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  for (const Method m : result.methods) {
    const std::vector<double> values = result.OrmseValues(m);
    if (values.empty()) continue;
    nlohmann::ordered_json s = ToJson(Summarize(values));
    s["median"] = Median(values);
    summary[MethodName(m)] = std::move(s);
  }
  j["summary"] = std::move(summary);
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& f : result.failures) {
    failures.push_back({{"rep", f.rep}, {"seed", f.seed}, {"cause", f.cause}});
  }
  j["failures"] = std::move(failures);
  return j;
}

std::string ToCsv(const SuiteResult& result) {
  std::ostringstream out;
  out << "function,dependence,method,rep,seed,ormse,queries,wall_ms\n";
  for (const auto& r : result.reports) {
    out << r.function << ',' << DependenceName(r.dependence) << ','
        << MethodName(r.method) << ',' << r.rep << ',' << r.seed << ','
        << FormatDouble(r.ormse) << ',' << r.queries << ','
        << FormatDouble(r.wall_ms) << '\n';
  }
  return out.str();
}

}  // namespace a2d2e
