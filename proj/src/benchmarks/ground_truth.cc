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

#include "a2d2e/benchmarks/ground_truth.h"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "a2d2e/core/errors.h"
#include "a2d2e/core/random.h"

namespace a2d2e {
namespace {

// Uniform on the open interval (0, 1).
double OpenUniform(Engine& engine) {
  return (static_cast<double>(engine() >> 11) + 0.5) * 0x1.0p-53;
}

// Inverse-CDF sampler for N(0, 1) restricted to [lo, hi]. Intervals in the
// upper tail are mirrored onto the lower one for accuracy.
class TruncatedStandardNormal {
 public:
  TruncatedStandardNormal(double lo, double hi) : mirrored_(lo > 0) {
    if (mirrored_) {
      std::swap(lo, hi);
      lo = -lo;
      hi = -hi;
    }
    plo_ = boost::math::cdf(normal_, lo);
    mass_ = boost::math::cdf(normal_, hi) - plo_;
    if (!(mass_ > 0.0)) {
      throw NumericalError("conditional sampling interval [" +
                           std::to_string(lo) + ", " + std::to_string(hi) +
                           "] has no probability mass");
    }
  }

  // u in (0, 1).
  double operator()(double u) const {
    const double p = std::clamp(
        plo_ + u * mass_, std::numeric_limits<double>::min(), 1.0 - 0x1.0p-53);
    const double e = boost::math::quantile(normal_, p);
    return mirrored_ ? -e : e;
  }

 private:
  boost::math::normal_distribution<double> normal_;
  bool mirrored_;
  double plo_ = 0.0;
  double mass_ = 0.0;
};

void CheckGrid(std::span<const double> grid) {
  if (grid.size() < 2) {
    throw InvalidArgumentError("ground truth needs at least 2 grid points");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i]) || (i > 0 && !(grid[i] > grid[i - 1]))) {
      throw InvalidArgumentError("grid must be finite and strictly increasing");
    }
  }
}

EffectCurve Finish(std::size_t d, std::span<const double> grid,
                   std::vector<double> values) {
  EffectCurve curve;
  curve.variable = d;
  curve.grid.assign(grid.begin(), grid.end());
  curve.values = std::move(values);
  curve.method = Method::kTruth;
  ValidateCurve(curve);
  return CenterCurve(std::move(curve));
}

EffectCurve PdProxy(const UnitFunction& function, std::size_t d,
                    std::span<const double> grid, const DependenceSpec& spec,
                    const GroundTruthOptions& options) {
  const Matrix sample = SampleInputs(function.dims(), options.samples, spec,
                                     DeriveSeed(options.seed, "pd-proxy"));
  std::vector<double> values(grid.size());
  std::vector<double> point(function.dims());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    double sum = 0.0;
    for (std::size_t m = 0; m < sample.rows(); ++m) {
      const auto row = sample.row(m);
      std::copy(row.begin(), row.end(), point.begin());
      point[d] = grid[g];
      const double v = function.Value(point);
      if (!std::isfinite(v)) {
        throw NumericalError("non-finite value of " + function.function().name);
      }
      sum += v;
    }
    values[g] = sum / static_cast<double>(sample.rows());
  }
  return Finish(d, grid, std::move(values));
}

}  // namespace

double DependenceSpec::sigma() const {
  switch (level) {
    case DependenceLevel::kLow:
      return 0.1;
    case DependenceLevel::kHigh:
      return 0.05;
    case DependenceLevel::kIndependent:
      break;
  }
  return 0.0;
}

Matrix SampleInputs(std::size_t dims, std::size_t n, const DependenceSpec& spec,
                    std::uint64_t seed) {
  if (dims == 0 || n == 0) {
    throw InvalidArgumentError("sampling needs dims >= 1 and n >= 1");
  }
  Engine engine = MakeEngine(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, spec.sigma());
  const bool independent = spec.level == DependenceLevel::kIndependent;
  Matrix out(n, dims);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, 0) = uniform(engine);
    for (std::size_t j = 1; j < dims; ++j) {
      out(i, j) = independent ? uniform(engine) : out(i, 0) + normal(engine);
    }
  }
  return out;
}

EffectCurve GroundTruthMainEffect(const UnitFunction& function, std::size_t d,
                                  std::span<const double> grid,
                                  const DependenceSpec& spec,
                                  const GroundTruthOptions& options) {
  const std::size_t dims = function.dims();
  if (d >= dims) {
    throw InvalidArgumentError("variable index " + std::to_string(d) +
                               " out of range");
  }
  if (options.samples == 0) {
    throw InvalidArgumentError("ground truth needs at least one sample");
  }
  CheckGrid(grid);
  if (options.pd_proxy) return PdProxy(function, d, grid, spec, options);

  // Column 0 drives the conditioning variable, the others the siblings. The
  // draws are shared by every grid point.
  const std::size_t m_count = options.samples;
  const bool independent = spec.level == DependenceLevel::kIndependent;
  const double sigma = spec.sigma();
  Engine engine = MakeEngine(DeriveSeed(options.seed, "truth"));
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix draws(m_count, dims);
  for (std::size_t m = 0; m < m_count; ++m) {
    draws(m, 0) = OpenUniform(engine);
    for (std::size_t j = 1; j < dims; ++j) {
      draws(m, j) = independent ? OpenUniform(engine) : normal(engine);
    }
  }

  std::vector<double> slope(grid.size());
  std::vector<double> t(dims);
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const double z = grid[g];
    std::optional<TruncatedStandardNormal> lead_noise;
    if (!independent && d != 0) lead_noise.emplace((z - 1) / sigma, z / sigma);
    double sum = 0.0;
    for (std::size_t m = 0; m < m_count; ++m) {
      if (independent) {
        for (std::size_t j = 0; j < dims; ++j) t[j] = draws(m, j);
      } else {
        // t_j = t_0 + sigma * e_j. Conditioning on t_d = z with d > 0 puts
        // t_0 = z - sigma * e_d with e_d truncated so that t_0 lies in [0, 1].
        const double lead =
            lead_noise ? z - sigma * (*lead_noise)(draws(m, 0)) : z;
        t[0] = lead;
        for (std::size_t j = 1; j < dims; ++j) {
          t[j] = lead + sigma * draws(m, j);
        }
      }
      t[d] = z;
      const double partial = function.Partial(t, d);
      if (!std::isfinite(partial)) {
        throw NumericalError("non-finite derivative of " +
                             function.function().name + " along variable " +
                             std::to_string(d));
      }
      sum += partial;
    }
    slope[g] = sum / static_cast<double>(m_count);
  }

  std::vector<double> values(grid.size(), 0.0);
  for (std::size_t g = 1; g < grid.size(); ++g) {
    values[g] = values[g - 1] +
                0.5 * (grid[g] - grid[g - 1]) * (slope[g] + slope[g - 1]);
  }
  return Finish(d, grid, std::move(values));
}

}  // namespace a2d2e
