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

#ifndef A2D2E_BENCHMARKS_GROUND_TRUTH_H_
#define A2D2E_BENCHMARKS_GROUND_TRUTH_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "a2d2e/benchmarks/functions.h"
#include "a2d2e/core/effect_curve.h"
#include "a2d2e/core/experiment_config.h"
#include "a2d2e/core/matrix.h"

namespace a2d2e {

// Input dependence regime. Column 0 is U(0,1); every other column is either
// an independent U(0,1) or column 0 plus N(0, sigma^2) noise.
struct DependenceSpec {
  DependenceLevel level = DependenceLevel::kIndependent;

  explicit DependenceSpec(DependenceLevel l = DependenceLevel::kIndependent)
      : level(l) {}

  // 0.1 for low, 0.05 for high, 0 for independent.
  double sigma() const;
};

// N x D unit-coordinate sample. Dependent columns are not truncated, so they
// may leave [0, 1]. Deterministic in (dims, n, spec, seed).
Matrix SampleInputs(std::size_t dims, std::size_t n, const DependenceSpec& spec,
                    std::uint64_t seed);

struct GroundTruthOptions {
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
  // Replace the conditional-derivative integral by the partial dependence of
  // the true function over `samples` draws from the sampler.
  bool pd_proxy = false;
};

// Main effect of variable d on `grid` (unit coordinates): the cumulative
// trapezoid integral of E[df/dt_d | t_d = z], estimated by Monte Carlo under
// the exact conditional law of the sampler, then centered. The same random
// draws are reused at every grid point. Throws NumericalError on a
// non-finite derivative.
EffectCurve GroundTruthMainEffect(const UnitFunction& function, std::size_t d,
                                  std::span<const double> grid,
                                  const DependenceSpec& spec,
                                  const GroundTruthOptions& options = {});

}  // namespace a2d2e

#endif  // A2D2E_BENCHMARKS_GROUND_TRUTH_H_
