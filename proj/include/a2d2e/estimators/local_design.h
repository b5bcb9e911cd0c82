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

#ifndef A2D2E_ESTIMATORS_LOCAL_DESIGN_H_
#define A2D2E_ESTIMATORS_LOCAL_DESIGN_H_

#include <cstddef>
#include <span>
#include <vector>

#include "a2d2e/core/matrix.h"

namespace a2d2e {

// A full factorial design has 2^D vertices, so D is capped.
inline constexpr std::size_t kMaxDesignDims = 16;

// Two-level full factorial around `center`: the 2^D vertices
// center + (delta / 2) * s for s in {-1, +1}^D. Vertex v uses sign +1 on
// coordinate j iff bit (D - 1 - j) of v is set, i.e. sign vectors are in
// lexicographic order with -1 before +1 and coordinate 0 most significant.
//
// The centered design matrix V~ (vertices minus center) has orthogonal
// columns: V~^T V~ = 2^(D-2) delta^2 I_D.
class LocalDesign {
 public:
  // Throws InvalidArgumentError on delta <= 0, an empty or non-finite center,
  // or D > max_dims.
  LocalDesign(std::span<const double> center, double delta,
              std::size_t max_dims = kMaxDesignDims);

  std::size_t dims() const { return center_.size(); }
  double delta() const { return delta_; }
  const std::vector<double>& center() const { return center_; }
  std::size_t vertex_count() const { return std::size_t{1} << dims(); }

  // +1 or -1.
  int sign(std::size_t vertex, std::size_t j) const {
    return ((vertex >> (dims() - 1 - j)) & 1U) != 0 ? 1 : -1;
  }

  // Writes vertex `vertex` into `out` (length D).
  void Vertex(std::size_t vertex, std::span<double> out) const;
  // All vertices, one per row, in vertex order.
  Matrix Vertices() const;
  // V~: vertices minus center.
  Matrix CenteredVertices() const;

 private:
  std::vector<double> center_;
  double delta_;
};

// Local first-order model around a design center. `intercept` is the fitted
// value at the center; slopes[j] is the coefficient of coordinate j.
struct SlopeVector {
  double intercept = 0.0;
  std::vector<double> slopes;
  std::vector<double> center;
};

// Closed-form least squares on the orthogonal design:
//   slopes = 2^(2-D) delta^-2 V~^T y,  intercept = mean(y).
// Throws InvalidArgumentError unless values has 2^D entries.
SlopeVector LocalSlopesFast(const LocalDesign& design,
                            std::span<const double> values);

// Same model as the general least-squares solution (V^T V)^-1 V^T y on the
// intercept-augmented, uncentered vertex matrix. Reference path for the fast
// one, solved by pivoted QR. Throws NumericalError if V is rank deficient.
SlopeVector LocalSlopesOls(const LocalDesign& design,
                           std::span<const double> values);

}  // namespace a2d2e

#endif  // A2D2E_ESTIMATORS_LOCAL_DESIGN_H_
