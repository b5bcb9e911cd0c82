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

#include "a2d2e/estimators/local_design.h"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "a2d2e/core/errors.h"

namespace a2d2e {

LocalDesign::LocalDesign(std::span<const double> center, double delta,
                         std::size_t max_dims)
    : center_(center.begin(), center.end()), delta_(delta) {
  if (center_.empty()) throw InvalidArgumentError("design center is empty");
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw InvalidArgumentError("design edge length must be positive");
  }
  if (center_.size() > max_dims) {
    throw InvalidArgumentError(
        "local design in " + std::to_string(center_.size()) +
        " dimensions needs 2^" + std::to_string(center_.size()) +
        " vertices per point; the cap is " + std::to_string(max_dims) +
        " dimensions");
  }
  for (const double c : center_) {
    if (!std::isfinite(c)) {
      throw InvalidArgumentError("design center must be finite");
    }
  }
}

void LocalDesign::Vertex(std::size_t vertex, std::span<double> out) const {
  const double half = 0.5 * delta_;
  for (std::size_t j = 0; j < dims(); ++j) {
    out[j] = center_[j] + half * sign(vertex, j);
  }
}

Matrix LocalDesign::Vertices() const {
  Matrix m(vertex_count(), dims());
  for (std::size_t v = 0; v < vertex_count(); ++v) Vertex(v, m.row(v));
  return m;
}

Matrix LocalDesign::CenteredVertices() const {
  Matrix m(vertex_count(), dims());
  const double half = 0.5 * delta_;
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    for (std::size_t j = 0; j < dims(); ++j) m(v, j) = half * sign(v, j);
  }
  return m;
}

SlopeVector LocalSlopesFast(const LocalDesign& design,
                            std::span<const double> values) {
  const std::size_t dims = design.dims();
  const std::size_t count = design.vertex_count();
  if (values.size() != count) {
    throw InvalidArgumentError("expected " + std::to_string(count) +
                               " vertex values, got " +
                               std::to_string(values.size()));
  }
  SlopeVector out;
  out.center = design.center();
  out.slopes.assign(dims, 0.0);
  double total = 0.0;
  for (std::size_t v = 0; v < count; ++v) {
    total += values[v];
    for (std::size_t j = 0; j < dims; ++j) {
      out.slopes[j] += design.sign(v, j) * values[v];
    }
  }
  // 2^(2-D) delta^-2 * (delta / 2) folds into 2^(1-D) / delta.
  const double scale =
      std::ldexp(1.0, 1 - static_cast<int>(dims)) / design.delta();
  for (double& s : out.slopes) s *= scale;
  out.intercept = total / static_cast<double>(count);
  return out;
}

SlopeVector LocalSlopesOls(const LocalDesign& design,
                           std::span<const double> values) {
  const std::size_t dims = design.dims();
  const std::size_t count = design.vertex_count();
  if (values.size() != count) {
    throw InvalidArgumentError("expected " + std::to_string(count) +
                               " vertex values, got " +
                               std::to_string(values.size()));
  }
  const auto rows = static_cast<Eigen::Index>(count);
  const auto cols = static_cast<Eigen::Index>(dims + 1);
  Eigen::MatrixXd v(rows, cols);
  Eigen::VectorXd y(rows);
  std::vector<double> vertex(dims);
  for (std::size_t r = 0; r < count; ++r) {
    design.Vertex(r, vertex);
    const auto ri = static_cast<Eigen::Index>(r);
    v(ri, 0) = 1.0;
    for (std::size_t j = 0; j < dims; ++j) {
      v(ri, static_cast<Eigen::Index>(j + 1)) = vertex[j];
    }
    y[ri] = values[r];
  }
  // Least squares through a pivoted QR of V rather than forming V^T V, which
  // would square the conditioning at small delta.
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(v);
  if (qr.rank() < cols) {
    throw NumericalError("rank-deficient design in local least squares");
  }
  const Eigen::VectorXd beta = qr.solve(y);

  SlopeVector out;
  out.center = design.center();
  out.slopes.resize(dims);
  double at_center = beta[0];
  for (std::size_t j = 0; j < dims; ++j) {
    out.slopes[j] = beta[static_cast<Eigen::Index>(j + 1)];
    at_center += out.slopes[j] * out.center[j];
  }
  out.intercept = at_center;
  return out;
}

}  // namespace a2d2e
