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

// a2d2e command-line tool.
//
//   a2d2e estimate --function simple-1 --method all --out curves/
//   a2d2e verify --check lemma1 --out reports/
//   a2d2e serve-oracle --function branin
//
// Exit codes: 0 success, 1 verification tolerance failure, 2 invalid
// arguments, 3 predictor failure, 4 I/O failure.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "a2d2e/benchmarks/functions.h"
#include "a2d2e/benchmarks/ground_truth.h"
#include "a2d2e/core/dataset.h"
#include "a2d2e/core/errors.h"
#include "a2d2e/core/experiment_config.h"
#include "a2d2e/core/io.h"
#include "a2d2e/core/normalizer.h"
#include "a2d2e/core/random.h"
#include "a2d2e/estimators/estimators.h"
#include "a2d2e/evaluation/benchmark_suite.h"
#include "a2d2e/evaluation/metrics.h"
#include "a2d2e/evaluation/variance_experiments.h"
#include "a2d2e/predictors/subprocess_predictor.h"
#include "a2d2e/predictors/tiny_nn.h"
#include "a2d2e/predictors/wire_protocol.h"
#include "a2d2e/version.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace a2d2e {
namespace {

constexpr int kExitTolerance = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitPredictor = 3;
constexpr int kExitIo = 4;

constexpr std::string_view kExternalPrefix = "external:";

std::string UtcNow() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

void PrepareDirectory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError("cannot create output directory " + dir.string());
  }
}

void WriteJson(const fs::path& path, const nlohmann::ordered_json& json) {
  WriteTextFile(path, json.dump(2) + "\n");
}

// --- estimate ---------------------------------------------------------------

struct EstimateArgs {
  std::string function;
  std::string data;
  std::string predictor = "oracle";
  std::string method = "a2d2e";
  std::size_t bins = 40;
  double delta = 0.01;
  std::size_t n = 0;
  std::string dependence = "independent";
  std::uint64_t seed = 0;
  std::size_t grid = 100;
  std::string out;
};

std::vector<Method> ParseMethods(const std::string& name) {
  if (name == "all") return {Method::kPd, Method::kAle, Method::kA2D2E};
  const Method m = ParseMethod(name);
  if (m == Method::kTruth) {
    throw InvalidArgumentError("--method must be pd, ale, a2d2e or all");
  }
  return {m};
}

// Raw inputs plus responses, either sampled from a registered function (in
// unit-box coordinates, with calibrated response noise) or read from CSV.
struct RawData {
  Matrix inputs;
  std::vector<double> responses;
  std::optional<UnitFunction> function;
};

RawData LoadData(const EstimateArgs& args, const ExperimentConfig& config) {
  if (!args.data.empty()) {
    LabeledDataset labeled = ReadDatasetCsv(args.data);
    return {labeled.data.inputs(), labeled.data.responses(), std::nullopt};
  }
  UnitFunction function(config.function_name);
  const std::size_t n = config.ResolvedSampleCount(function.dims());
  RawData raw{
      SampleInputs(function.dims(), n, DependenceSpec(config.dependence_level),
                   DeriveSeed(config.seed, "inputs")),
      std::vector<double>(n), function};
  for (std::size_t i = 0; i < n; ++i) {
    raw.responses[i] = function.Value(raw.inputs.row(i));
  }
  const double sigma =
      CalibrateNoiseSigma(raw.responses, config.noise_fraction);
  Engine engine = MakeEngine(DeriveSeed(config.seed, "response-noise"));
  std::normal_distribution<double> normal(0.0, 1.0);
  for (double& y : raw.responses) y += sigma * normal(engine);
  return raw;
}

// Model over raw coordinates; the caller adapts it to normalized inputs.
std::shared_ptr<Predictor> BindRawPredictor(const EstimateArgs& args,
                                            const RawData& raw,
                                            std::size_t dims) {
  if (args.predictor == "oracle") {
    if (!raw.function) {
      throw InvalidArgumentError("--predictor oracle requires --function");
    }
    return MakeUnitFunctionPredictor(*raw.function);
  }
  if (args.predictor.starts_with(kExternalPrefix)) {
    const std::string command = args.predictor.substr(kExternalPrefix.size());
    if (command.empty()) {
      throw InvalidArgumentError("--predictor external: needs a command");
    }
    return std::make_shared<SubprocessPredictor>(command, dims);
  }
  throw InvalidArgumentError("unknown predictor '" + args.predictor + "'");
}

int RunEstimate(const EstimateArgs& args) {
  const std::string started = UtcNow();
  if (args.function.empty() == args.data.empty()) {
    throw InvalidArgumentError("give exactly one of --function or --data");
  }
  ExperimentConfig config;
  config.function_name = args.data.empty() ? args.function : "data";
  config.dependence_level = ParseDependence(args.dependence);
  config.n = args.n;
  config.k = args.bins;
  config.delta = args.delta;
  config.seed = args.seed;
  config.grid_size = args.grid;
  config.repetitions = 1;
  config.Validate();
  const std::vector<Method> methods = ParseMethods(args.method);
  if (args.data.empty()) GetBenchmark(args.function);
  if (args.predictor != "oracle" && args.predictor != "nn" &&
      !args.predictor.starts_with(kExternalPrefix)) {
    throw InvalidArgumentError("unknown predictor '" + args.predictor + "'");
  }

  const fs::path out_dir(args.out);
  PrepareDirectory(out_dir);

  RawData raw = LoadData(args, config);
  const Normalizer normalizer = Normalizer::Fit(raw.inputs);
  const Dataset dataset(normalizer.Transform(raw.inputs),
                        std::move(raw.responses));

  std::shared_ptr<Predictor> model;
  nlohmann::ordered_json predictor_info;
  if (args.predictor == "nn") {
    TinyNNConfig nn;
    nn.seed = DeriveSeed(config.seed, "nn");
    auto trained = std::make_shared<TinyNN>(TinyNN::Train(dataset, nn));
    predictor_info["training_iterations"] = trained->iterations();
    predictor_info["training_loss"] = trained->loss_history().back();
    model = trained;
  } else {
    model = std::make_shared<NormalizedInputPredictor>(
        BindRawPredictor(args, raw, dataset.dims()), normalizer);
  }
  predictor_info["kind"] = args.predictor;
  auto memo = std::make_shared<MemoizingPredictor>(model);
  CountingPredictor counter(memo);

  EstimatorOptions options;
  options.bins = config.k;
  options.delta = config.delta;
  options.grid_size = config.grid_size;

  nlohmann::ordered_json files = nlohmann::ordered_json::array();
  nlohmann::ordered_json queries = nlohmann::ordered_json::object();
  for (const Method method : methods) {
    counter.Reset();
    const auto curves = EstimateAllVariables(dataset, counter, method, options);
    queries[MethodName(method)] = counter.points();
    for (const EffectCurve& curve : curves) {
      const std::string name = MethodName(method) + "_x" +
                               std::to_string(curve.variable + 1) + ".csv";
      WriteTextFile(out_dir / name, CurveCsv(curve));
      files.push_back(name);
    }
  }

  nlohmann::ordered_json manifest;
  manifest["tool"] = "a2d2e";
  manifest["version"] = kVersion;
  manifest["command"] = "estimate";
  manifest["config"] = ToJson(config);
  manifest["seed"] = config.seed;
  manifest["samples"] = dataset.size();
  manifest["dims"] = dataset.dims();
  if (!args.data.empty()) manifest["data"] = args.data;
  manifest["predictor"] = predictor_info;
  manifest["methods"] = nlohmann::ordered_json::array();
  for (const Method m : methods) manifest["methods"].push_back(MethodName(m));
  manifest["queries"] = queries;
  manifest["outputs"] = files;
  manifest["started"] = started;
  manifest["finished"] = UtcNow();
  WriteJson(out_dir / "manifest.json", manifest);
  return 0;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string check;
  std::uint64_t seed = 0;
  std::string out;
  std::vector<std::size_t> dims;
  std::size_t replicates = 0;  // 0 selects the per-check default
  // ormse-trend only.
  std::string function = "simple-1";
  std::string dependence = "high";
  std::string predictor = "nn";
  std::size_t repetitions = 10;
  std::size_t truth_samples = 100000;
};

constexpr double kVarianceTolerance = 0.10;
constexpr double kRatioLow = 1.6;
constexpr double kRatioHigh = 2.4;

std::size_t Replicates(const VerifyArgs& args, std::size_t fallback) {
  return args.replicates == 0 ? fallback : args.replicates;
}

int VerifyAleVariance(const VerifyArgs& args, nlohmann::ordered_json* report) {
  const VarianceReport r = RunVarianceExperiment(
      Method::kAle, 2, 0.1, 50, 0.05, 0.01, Replicates(args, 2000), args.seed);
  const bool pass = r.relative_error < kVarianceTolerance;
  (*report)["pass"] = pass;
  (*report)["tolerance"] = kVarianceTolerance;
  (*report)["experiments"] = nlohmann::ordered_json::array({ToJson(r)});
  std::cout << "lemma1: empirical " << r.empirical_variance << " theoretical "
            << r.theoretical_variance << " relative error " << r.relative_error
            << "\n";
  return pass ? 0 : kExitTolerance;
}

std::vector<std::size_t> VarianceDims(const VerifyArgs& args) {
  const std::vector<std::size_t> dims =
      args.dims.empty() ? std::vector<std::size_t>{2, 3, 4} : args.dims;
  for (const std::size_t d : dims) {
    if (d == 0 || d > kMaxDesignDims) {
      throw InvalidArgumentError(
          "--dims " + std::to_string(d) + " is outside 1.." +
          std::to_string(kMaxDesignDims) + "; the local design has 2^D points");
    }
  }
  return dims;
}

int VerifyA2D2EVariance(const VerifyArgs& args,
                        nlohmann::ordered_json* report) {
  const std::vector<std::size_t> dims = VarianceDims(args);
  constexpr double kWidth = 0.05;
  bool pass = true;
  auto experiments = nlohmann::ordered_json::array();
  std::uint64_t index = 0;
  for (const std::size_t d : dims) {
    for (const double delta : {0.01, kWidth / 2}) {
      const VarianceReport r = RunVarianceExperiment(
          Method::kA2D2E, d, 0.1, 50, kWidth, delta, Replicates(args, 2000),
          DeriveSeed(args.seed, index++));
      pass = pass && r.relative_error < kVarianceTolerance;
      experiments.push_back(ToJson(r));
      std::cout << "lemma2: D=" << d << " delta=" << delta << " empirical "
                << r.empirical_variance << " theoretical "
                << r.theoretical_variance << " relative error "
                << r.relative_error << "\n";
    }
  }
  (*report)["pass"] = pass;
  (*report)["tolerance"] = kVarianceTolerance;
  (*report)["experiments"] = std::move(experiments);
  return pass ? 0 : kExitTolerance;
}

int VerifyConsistency(const VerifyArgs& args, nlohmann::ordered_json* report) {
  const std::vector<std::size_t> counts = {25, 100, 400};
  const ConsistencyReport r =
      RunConsistencyExperiment(counts, Replicates(args, 1000), args.seed);
  bool pass = !r.ratios.empty();
  for (const auto& ratio : r.ratios) {
    pass = pass && ratio && *ratio >= kRatioLow && *ratio <= kRatioHigh;
  }
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    std::cout << "consistency: count " << r.rows[i].count << " std "
              << r.rows[i].std_dev;
    if (i < r.ratios.size() && r.ratios[i]) {
      std::cout << " ratio " << *r.ratios[i];
    }
    std::cout << "\n";
  }
  (*report)["pass"] = pass;
  (*report)["ratio_band"] = {kRatioLow, kRatioHigh};
  (*report)["table"] = ToJson(r);
  return pass ? 0 : kExitTolerance;
}

int VerifyOrmseTrend(const VerifyArgs& args, const fs::path& out_dir,
                     nlohmann::ordered_json* report) {
  ExperimentConfig config;
  config.function_name = args.function;
  config.dependence_level = ParseDependence(args.dependence);
  config.seed = args.seed;
  config.repetitions = args.repetitions;
  SuiteOptions options;
  options.predictor = ParsePredictorKind(args.predictor);
  options.truth_samples = args.truth_samples;
  options.log = &std::cerr;
  const std::vector<Method> methods = {Method::kPd, Method::kAle,
                                       Method::kA2D2E};
  const SuiteResult result = RunBenchmarkSuite(config, methods, options);
  WriteTextFile(out_dir / "ormse-trend.csv", ToCsv(result));

  const auto pd = result.OrmseValues(Method::kPd);
  const auto a2d2e = result.OrmseValues(Method::kA2D2E);
  bool pass = !pd.empty() && !a2d2e.empty();
  if (pass) {
    const double pd_median = Median(pd);
    const double a2d2e_median = Median(a2d2e);
    pass = a2d2e_median < pd_median;
    std::cout << "ormse-trend: median pd " << pd_median << " median a2d2e "
              << a2d2e_median << "\n";
  }
  (*report)["pass"] = pass;
  (*report)["criterion"] = "median a2d2e < median pd";
  (*report)["suite"] = ToJson(result);
  return pass ? 0 : kExitTolerance;
}

int RunVerify(const VerifyArgs& args) {
  const fs::path out_dir(args.out);
  nlohmann::ordered_json report;
  report["tool"] = "a2d2e";
  report["version"] = kVersion;
  report["check"] = args.check;
  report["seed"] = args.seed;
  if (args.check != "lemma1" && args.check != "lemma2" &&
      args.check != "consistency" && args.check != "ormse-trend") {
    throw InvalidArgumentError("unknown check '" + args.check + "'");
  }
  if (args.check == "lemma2") VarianceDims(args);
  PrepareDirectory(out_dir);
  int code = 0;
  if (args.check == "lemma1") {
    code = VerifyAleVariance(args, &report);
  } else if (args.check == "lemma2") {
    code = VerifyA2D2EVariance(args, &report);
  } else if (args.check == "consistency") {
    code = VerifyConsistency(args, &report);
  } else {
    code = VerifyOrmseTrend(args, out_dir, &report);
  }
  WriteJson(out_dir / (args.check + ".json"), report);
  std::cout << args.check << ": " << (code == 0 ? "PASS" : "FAIL") << "\n";
  return code;
}

// --- serve-oracle -----------------------------------------------------------

int RunServeOracle(const std::string& name) {
  const UnitFunction function(name);
  auto predictor = MakeUnitFunctionPredictor(function);
  std::ios::sync_with_stdio(false);
  wire::Serve(std::cin, std::cout, *predictor);
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"Main-effect estimation for black-box models"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  EstimateArgs estimate;
  CLI::App* cmd_estimate =
      app.add_subcommand("estimate", "Estimate main-effect curves");
  auto* function_opt = cmd_estimate->add_option(
      "--function", estimate.function, "Registered benchmark function");
  auto* data_opt = cmd_estimate->add_option(
      "--data", estimate.data,
      "CSV with a header; last column is the response");
  function_opt->excludes(data_opt);
  cmd_estimate
      ->add_option("--predictor", estimate.predictor,
                   "oracle, nn or external:<command>")
      ->capture_default_str();
  cmd_estimate->add_option("--method", estimate.method, "pd, ale, a2d2e or all")
      ->capture_default_str();
  cmd_estimate->add_option("--bins", estimate.bins, "Quantile bins K")
      ->capture_default_str();
  cmd_estimate
      ->add_option("--delta", estimate.delta, "Local design edge length")
      ->capture_default_str();
  cmd_estimate->add_option("--n", estimate.n, "Sample count (0 means 100 x D)")
      ->capture_default_str();
  cmd_estimate
      ->add_option("--dependence", estimate.dependence,
                   "independent, low or high")
      ->capture_default_str();
  cmd_estimate->add_option("--seed", estimate.seed)->capture_default_str();
  cmd_estimate->add_option("--grid", estimate.grid, "Evaluation grid size")
      ->capture_default_str();
  cmd_estimate->add_option("--out", estimate.out, "Output directory")
      ->required();

  VerifyArgs verify;
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "Run a statistical verification");
  cmd_verify
      ->add_option("--check", verify.check,
                   "lemma1, lemma2, consistency or ormse-trend")
      ->required();
  cmd_verify->add_option("--seed", verify.seed)->capture_default_str();
  cmd_verify->add_option("--out", verify.out, "Report directory")->required();
  cmd_verify->add_option("--dims", verify.dims, "Input dimensions (lemma2)");
  cmd_verify->add_option("--replicates", verify.replicates,
                         "Monte Carlo replicates (0 keeps the default)");
  cmd_verify->add_option("--function", verify.function, "ormse-trend function")
      ->capture_default_str();
  cmd_verify
      ->add_option("--dependence", verify.dependence,
                   "ormse-trend dependence level")
      ->capture_default_str();
  cmd_verify
      ->add_option("--predictor", verify.predictor,
                   "ormse-trend predictor: oracle or nn")
      ->capture_default_str();
  cmd_verify
      ->add_option("--repetitions", verify.repetitions,
                   "ormse-trend repetitions")
      ->capture_default_str();
  cmd_verify
      ->add_option("--truth-samples", verify.truth_samples,
                   "Monte Carlo draws for the reference curves")
      ->capture_default_str();

  std::string serve_function;
  CLI::App* cmd_serve = app.add_subcommand(
      "serve-oracle", "Serve a benchmark function over stdin/stdout");
  cmd_serve->add_option("--function", serve_function)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*cmd_estimate) return RunEstimate(estimate);
    if (*cmd_verify) return RunVerify(verify);
    return RunServeOracle(serve_function);
  } catch (const InvalidArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const PredictorError& e) {
    std::cerr << "predictor error: " << e.what() << "\n";
    return kExitPredictor;
  } catch (const NumericalError& e) {
    std::cerr << "predictor error: " << e.what() << "\n";
    return kExitPredictor;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  }
}

}  // namespace
}  // namespace a2d2e

int main(int argc, char** argv) { return a2d2e::Main(argc, argv); }
