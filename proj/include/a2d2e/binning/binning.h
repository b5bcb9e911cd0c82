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

// Quantile partitions of one variable and bin membership, shared by the
// accumulated estimators.
//
// Boundary rule: interior endpoints belong to the lower bin and the first bin
// is closed on both ends, i.e. bin k holds x in (z_k, z_{k+1}] for k > 0 and
// [z_0, z_1] for k = 0.

#ifndef A2D2E_BINNING_BINNING_H_
#define A2D2E_BINNING_BINNING_H_

#include <cstddef>
#include <span>

#include "a2d2e/core/dataset.h"
#include "a2d2e/core/partition.h"

namespace a2d2e {

// Endpoints at the empirical quantiles j / K (j = 0..K), linearly
// interpolated between order statistics. K > N is reduced to N; tied
// endpoints, and bins that ties leave empty, are merged away. Both cases are
// flagged on the result. Throws InvalidArgumentError when N < 2, K == 0, a
// value is non-finite, or all values are identical.
Partition QuantilePartition(std::span<const double> values, std::size_t bins,
                            std::size_t variable = 0);

// Partition of column `d` of the dataset.
Partition QuantilePartition(const Dataset& dataset, std::size_t d,
                            std::size_t bins);

// Membership of every row under the boundary rule. Throws
// InvalidArgumentError when a value lies outside [z_0, z_K].
BinIndexSets AssignBins(const Dataset& dataset, const Partition& partition);

struct BinLocation {
  std::size_t bin = 0;
  // x was outside [z_0, z_K] and got clamped to a terminal bin.
  bool clamped = false;
};

// Bin J(x) containing x, consistent with AssignBins.
BinLocation Locate(double x, const Partition& partition);

}  // namespace a2d2e

#endif  // A2D2E_BINNING_BINNING_H_
