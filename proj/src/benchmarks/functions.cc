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

#include "a2d2e/benchmarks/functions.h"

#include <cmath>
#include <numbers>
#include <string>

#include "a2d2e/core/errors.h"

namespace a2d2e {
namespace {

using std::numbers::pi;

double Franke(std::span<const double> x) {
  const double a = 9.0 * x[0];
  const double b = 9.0 * x[1];
  return 0.75 * std::exp(-(a - 2) * (a - 2) / 4 - (b - 2) * (b - 2) / 4) +
         0.75 * std::exp(-(a + 1) * (a + 1) / 49 - (b + 1) / 10) +
         0.5 * std::exp(-(a - 7) * (a - 7) / 4 - (b - 3) * (b - 3) / 4) -
         0.2 * std::exp(-(a - 4) * (a - 4) - (b - 7) * (b - 7));
}

double Branin(std::span<const double> x) {
  const double b = 5.1 / (4 * pi * pi);
  const double c = 5 / pi;
  const double s = 1 / (8 * pi);
  const double q = x[1] - b * x[0] * x[0] + c * x[0] - 6;
  return q * q + 10 * (1 - s) * std::cos(x[0]) + 10;
}

double Simple1(std::span<const double> x) { return x[0] * x[0] + x[1]; }

void Simple1Gradient(std::span<const double> x, std::span<double> g) {
  g[0] = 2 * x[0];
  g[1] = 1;
}

double Simple2(std::span<const double> x) {
  return x[0] * x[1] - x[1] * x[2] + x[3] * x[0];
}

void Simple2Gradient(std::span<const double> x, std::span<double> g) {
  g[0] = x[1] + x[3];
  g[1] = x[0] - x[2];
  g[2] = -x[1];
  g[3] = x[0];
}

double Levy(std::span<const double> x) {
  const std::size_t d = x.size();
  auto w = [&](std::size_t i) { return 1 + (x[i] - 1) / 4; };
  const double s1 = std::sin(pi * w(0));
  double sum = s1 * s1;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    const double wi = w(i);
    const double s = std::sin(pi * wi + 1);
    sum += (wi - 1) * (wi - 1) * (1 + 10 * s * s);
  }
  const double wd = w(d - 1);
  const double sd = std::sin(2 * pi * wd);
  return sum + (wd - 1) * (wd - 1) * (1 + sd * sd);
}

double Ackley(std::span<const double> x) {
  const auto d = static_cast<double>(x.size());
  double squares = 0;
  double cosines = 0;
  for (const double v : x) {
    squares += v * v;
    cosines += std::cos(2 * pi * v);
  }
  return -20 * std::exp(-0.2 * std::sqrt(squares / d)) - std::exp(cosines / d) +
         20 + std::numbers::e;
}

double Detpep108d(std::span<const double> x) {
  double total = 0;
  double partial = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    partial += x[i];
    const double r = partial - static_cast<double>(i + 1) / 2;
    total += r * r;
  }
  return total;
}

BenchmarkFunction Make(std::string name, std::size_t dims, double lo, double hi,
                       BenchmarkFunction::Evaluator f,
                       BenchmarkFunction::Gradient g = nullptr) {
  BenchmarkFunction out;
  out.name = std::move(name);
  out.dims = dims;
  out.lower.assign(dims, lo);
  out.upper.assign(dims, hi);
  out.evaluate = std::move(f);
  out.gradient = std::move(g);
  return out;
}

const std::vector<BenchmarkFunction>& Registry() {
  static const std::vector<BenchmarkFunction> registry = [] {
    std::vector<BenchmarkFunction> r;
    r.push_back(Make("franke", 2, 0, 1, Franke));
    BenchmarkFunction branin = Make("branin", 2, 0, 1, Branin);
    branin.lower = {-5, 0};
    branin.upper = {10, 15};
    r.push_back(std::move(branin));
    r.push_back(Make("simple-1", 2, 0, 1, Simple1, Simple1Gradient));
    r.push_back(Make("simple-2", 4, 0, 1, Simple2, Simple2Gradient));
    r.push_back(Make("levy", 6, -10, 10, Levy));
    r.push_back(Make("ackley", 6, -32.768, 32.768, Ackley));
    r.push_back(Make("detpep108d", 8, 0, 1, Detpep108d));
    return r;
  }();
  return registry;
}

}  // namespace

bool BenchmarkFunction::InDomain(std::span<const double> x) const {
  for (std::size_t j = 0; j < dims; ++j) {
    if (!(x[j] >= lower[j] && x[j] <= upper[j])) return false;
  }
  return true;
}

const std::vector<std::string>& BenchmarkNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& f : Registry()) out.push_back(f.name);
    return out;
  }();
  return names;
}

const BenchmarkFunction& GetBenchmark(std::string_view name) {
  for (const auto& f : Registry()) {
    if (f.name == name) return f;
  }
  throw InvalidArgumentError("unknown function '" + std::string(name) + "'");
}

FunctionValue EvaluateFunction(std::string_view name,
                               std::span<const double> x) {
  const BenchmarkFunction& f = GetBenchmark(name);
  if (x.size() != f.dims) {
    throw InvalidArgumentError(f.name + " takes " + std::to_string(f.dims) +
                               " inputs, got " + std::to_string(x.size()));
  }
  return {f.evaluate(x), !f.InDomain(x)};
}

UnitFunction::UnitFunction(const BenchmarkFunction& function)
    : function_(std::make_shared<const BenchmarkFunction>(function)) {
  if (function_->dims == 0 || function_->lower.size() != function_->dims ||
      function_->upper.size() != function_->dims || !function_->evaluate) {
    throw InvalidArgumentError("malformed function '" + function_->name + "'");
  }
}

void UnitFunction::ToNative(std::span<const double> t,
                            std::span<double> x) const {
  for (std::size_t j = 0; j < dims(); ++j) {
    const double lo = function_->lower[j];
    x[j] = lo + t[j] * (function_->upper[j] - lo);
  }
}

double UnitFunction::Value(std::span<const double> t) const {
  thread_local std::vector<double> x;
  x.resize(dims());
  ToNative(t, x);
  return function_->evaluate(x);
}

double UnitFunction::Partial(std::span<const double> t, std::size_t d) const {
  const double scale = function_->upper[d] - function_->lower[d];
  if (function_->gradient) {
    thread_local std::vector<double> x;
    thread_local std::vector<double> g;
    x.resize(dims());
    g.resize(dims());
    ToNative(t, x);
    function_->gradient(x, g);
    return scale * g[d];
  }
  thread_local std::vector<double> shifted;
  shifted.assign(t.begin(), t.end());
  shifted[d] = t[d] + kStep;
  const double up = Value(shifted);
  shifted[d] = t[d] - kStep;
  const double down = Value(shifted);
  return (up - down) / (2 * kStep);
}

std::shared_ptr<Predictor> MakeUnitFunctionPredictor(const UnitFunction& unit) {
  return std::make_shared<FunctionPredictor>(
      unit.dims(), [unit](std::span<const double> t) { return unit.Value(t); });
}

}  // namespace a2d2e
