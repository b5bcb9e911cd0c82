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

#ifndef A2D2E_BENCHMARKS_FUNCTIONS_H_
#define A2D2E_BENCHMARKS_FUNCTIONS_H_

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "a2d2e/predictors/predictor.h"

namespace a2d2e {

// A closed-form test surface on its native box [lower, upper].
struct BenchmarkFunction {
  using Evaluator = std::function<double(std::span<const double>)>;
  using Gradient =
      std::function<void(std::span<const double>, std::span<double>)>;

  std::string name;
  std::size_t dims = 0;
  std::vector<double> lower;
  std::vector<double> upper;
  Evaluator evaluate;
  // Optional closed-form gradient in native coordinates.
  Gradient gradient;

  bool InDomain(std::span<const double> x) const;
};

// Registered names: franke, branin, simple-1, simple-2, levy, ackley,
// detpep108d.
const std::vector<std::string>& BenchmarkNames();

// Throws InvalidArgumentError on an unknown name.
const BenchmarkFunction& GetBenchmark(std::string_view name);

struct FunctionValue {
  double value = 0.0;
  bool out_of_domain = false;
};

// Native-domain evaluation. Points outside the box are evaluated anyway and
// flagged. Throws InvalidArgumentError on an unknown name or a wrong length.
FunctionValue EvaluateFunction(std::string_view name,
                               std::span<const double> x);

// The function composed with the affine map from [0,1]^D onto the native
// box. Every experiment works in these unit coordinates.
class UnitFunction {
 public:
  explicit UnitFunction(const BenchmarkFunction& function);
  explicit UnitFunction(std::string_view name)
      : UnitFunction(GetBenchmark(name)) {}

  std::size_t dims() const { return function_->dims; }
  const BenchmarkFunction& function() const { return *function_; }

  double Value(std::span<const double> t) const;
  // d/dt_d of the unit-coordinate function. Uses the closed-form gradient when
  // the function has one, else a central difference with step `kStep`.
  double Partial(std::span<const double> t, std::size_t d) const;

  static constexpr double kStep = 1e-5;

 private:
  void ToNative(std::span<const double> t, std::span<double> x) const;

  std::shared_ptr<const BenchmarkFunction> function_;
};

// A deterministic predictor over unit coordinates.
std::shared_ptr<Predictor> MakeUnitFunctionPredictor(const UnitFunction& unit);

}  // namespace a2d2e

#endif  // A2D2E_BENCHMARKS_FUNCTIONS_H_
