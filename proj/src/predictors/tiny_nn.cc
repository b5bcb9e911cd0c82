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

#include "a2d2e/predictors/tiny_nn.h"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "a2d2e/core/errors.h"
#include "a2d2e/core/random.h"

namespace a2d2e {
namespace {

double Activate(Activation activation, double z) {
  if (activation == Activation::kTanh) return std::tanh(z);
  return 1.0 / (1.0 + std::exp(-z));
}

// Derivative expressed through the activation value a = act(z).
double ActivateGrad(Activation activation, double a) {
  if (activation == Activation::kTanh) return 1.0 - a * a;
  return a * (1.0 - a);
}

// Parameter layout: [W1 (H x D row-major) | b1 (H) | w2 (H) | b2].
class Objective {
 public:
  Objective(const Matrix& x, std::vector<double> y, std::size_t hidden,
            Activation activation)
      : x_(x), y_(std::move(y)), hidden_(hidden), activation_(activation) {}

  std::size_t num_params() const {
    return hidden_ * x_.cols() + 2 * hidden_ + 1;
  }

  // Mean squared error; fills `grad` when non-null.
  double Evaluate(const Eigen::VectorXd& theta, Eigen::VectorXd* grad) const {
    const std::size_t dims = x_.cols();
    const std::size_t b1 = hidden_ * dims;
    const std::size_t w2 = b1 + hidden_;
    const std::size_t b2 = w2 + hidden_;
    if (grad != nullptr) grad->setZero(static_cast<Eigen::Index>(num_params()));
    std::vector<double> act(hidden_);
    double loss = 0.0;
    const double inv_n = 1.0 / static_cast<double>(x_.rows());
    for (std::size_t n = 0; n < x_.rows(); ++n) {
      const auto row = x_.row(n);
      double out = theta[static_cast<Eigen::Index>(b2)];
      for (std::size_t h = 0; h < hidden_; ++h) {
        double z = theta[static_cast<Eigen::Index>(b1 + h)];
        for (std::size_t d = 0; d < dims; ++d) {
          z += theta[static_cast<Eigen::Index>(h * dims + d)] * row[d];
        }
        act[h] = Activate(activation_, z);
        out += theta[static_cast<Eigen::Index>(w2 + h)] * act[h];
      }
      const double residual = out - y_[n];
      loss += residual * residual;
      if (grad == nullptr) continue;
      const double g_out = 2.0 * residual * inv_n;
      (*grad)[static_cast<Eigen::Index>(b2)] += g_out;
      for (std::size_t h = 0; h < hidden_; ++h) {
        (*grad)[static_cast<Eigen::Index>(w2 + h)] += g_out * act[h];
        const double g_z = g_out * theta[static_cast<Eigen::Index>(w2 + h)] *
                           ActivateGrad(activation_, act[h]);
        (*grad)[static_cast<Eigen::Index>(b1 + h)] += g_z;
        for (std::size_t d = 0; d < dims; ++d) {
          (*grad)[static_cast<Eigen::Index>(h * dims + d)] += g_z * row[d];
        }
      }
    }
    return loss * inv_n;
  }

 private:
  const Matrix& x_;
  std::vector<double> y_;
  std::size_t hidden_;
  Activation activation_;
};

void CheckFinite(double loss, std::size_t iteration) {
  if (!std::isfinite(loss)) {
    throw NumericalError(
        "network training diverged: non-finite loss at "
        "iteration " +
        std::to_string(iteration));
  }
}

bool Converged(double previous, double current, double tolerance) {
  if (current <= std::numeric_limits<double>::min()) return true;
  return (previous - current) <= tolerance * previous;
}

// Backtracking (Armijo) line search along `direction`. Returns the accepted
// step or 0 when no decrease was found.
double LineSearch(const Objective& objective, const Eigen::VectorXd& theta,
                  double loss, const Eigen::VectorXd& grad,
                  const Eigen::VectorXd& direction, double initial_step,
                  Eigen::VectorXd* next_theta, double* next_loss) {
  const double slope = grad.dot(direction);
  if (!(slope < 0.0)) return 0.0;
  double step = initial_step;
  for (int attempt = 0; attempt < 60; ++attempt) {
    *next_theta = theta + step * direction;
    *next_loss = objective.Evaluate(*next_theta, nullptr);
    if (std::isfinite(*next_loss) && *next_loss <= loss + 1e-4 * step * slope &&
        *next_loss < loss) {
      return step;
    }
    step *= 0.5;
  }
  return 0.0;
}

}  // namespace

TinyNN TinyNN::Train(const Dataset& dataset, const TinyNNConfig& config) {
  if (dataset.size() < 10) {
    throw InvalidArgumentError("network training needs at least 10 samples");
  }
  if (config.hidden_units == 0) {
    throw InvalidArgumentError("network needs at least one hidden unit");
  }

  TinyNN net;
  net.dims_ = dataset.dims();
  net.activation_ = config.activation;
  const std::size_t hidden = config.hidden_units;
  const std::size_t dims = dataset.dims();

  const auto& y = dataset.responses();
  const double n = static_cast<double>(y.size());
  if (config.standardize_responses) {
    net.response_mean_ = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double ss = 0.0;
    for (const double v : y)
      ss += (v - net.response_mean_) * (v - net.response_mean_);
    const double sd = std::sqrt(ss / (n - 1.0));
    net.response_scale_ = sd > 0.0 ? sd : 1.0;
  }
  std::vector<double> target(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    target[i] = (y[i] - net.response_mean_) / net.response_scale_;
  }

  const Objective objective(dataset.inputs(), target, hidden,
                            config.activation);
  const auto num_params = static_cast<Eigen::Index>(objective.num_params());
  Eigen::VectorXd theta(num_params);
  Engine engine = MakeEngine(config.seed);
  std::uniform_real_distribution<double> init(-config.init_range,
                                              config.init_range);
  for (Eigen::Index i = 0; i < num_params - 1; ++i) theta[i] = init(engine);
  theta[num_params - 1] = 0.0;

  const double scale2 = net.response_scale_ * net.response_scale_;
  Eigen::VectorXd grad(num_params);
  double loss = objective.Evaluate(theta, &grad);
  CheckFinite(loss, 0);
  net.loss_history_.push_back(loss * scale2);

  Eigen::MatrixXd inverse_hessian =
      Eigen::MatrixXd::Identity(num_params, num_params);
  double learning_rate = config.learning_rate;
  Eigen::VectorXd next_theta(num_params), next_grad(num_params);

  for (std::size_t iter = 1; iter <= config.max_iterations; ++iter) {
    double next_loss = loss;
    if (config.optimizer == NnOptimizer::kGradientDescent) {
      const double step = LineSearch(objective, theta, loss, grad, -grad,
                                     learning_rate, &next_theta, &next_loss);
      if (step == 0.0) break;
      learning_rate = step;
    } else {
      Eigen::VectorXd direction = -(inverse_hessian * grad);
      double step = LineSearch(objective, theta, loss, grad, direction, 1.0,
                               &next_theta, &next_loss);
      if (step == 0.0) {
        // Curvature model went bad; restart from steepest descent.
        inverse_hessian.setIdentity();
        direction = -grad;
        step = LineSearch(objective, theta, loss, grad, direction, 1.0,
                          &next_theta, &next_loss);
        if (step == 0.0) break;
      }
    }
    next_loss = objective.Evaluate(next_theta, &next_grad);
    CheckFinite(next_loss, iter);

    if (config.optimizer == NnOptimizer::kBfgs) {
      const Eigen::VectorXd s = next_theta - theta;
      const Eigen::VectorXd g = next_grad - grad;
      const double sy = s.dot(g);
      if (sy > 1e-12 * s.norm() * g.norm()) {
        const double rho = 1.0 / sy;
        const Eigen::MatrixXd identity =
            Eigen::MatrixXd::Identity(num_params, num_params);
        inverse_hessian = (identity - rho * s * g.transpose()) *
                              inverse_hessian *
                              (identity - rho * g * s.transpose()) +
                          rho * s * s.transpose();
      }
    }

    const double previous = loss;
    theta = next_theta;
    grad = next_grad;
    loss = next_loss;
    net.loss_history_.push_back(loss * scale2);
    if (Converged(previous, loss, config.tolerance)) break;
  }

  const std::size_t b1 = hidden * dims;
  net.hidden_weights_.assign(theta.data(), theta.data() + b1);
  net.hidden_bias_.assign(theta.data() + b1, theta.data() + b1 + hidden);
  net.output_weights_.assign(theta.data() + b1 + hidden,
                             theta.data() + b1 + 2 * hidden);
  net.output_bias_ = theta[num_params - 1];
  return net;
}

double TinyNN::Evaluate(std::span<const double> x) const {
  double out = output_bias_;
  for (std::size_t h = 0; h < hidden_bias_.size(); ++h) {
    double z = hidden_bias_[h];
    for (std::size_t d = 0; d < dims_; ++d) {
      z += hidden_weights_[h * dims_ + d] * x[d];
    }
    out += output_weights_[h] * Activate(activation_, z);
  }
  return response_mean_ + response_scale_ * out;
}

std::vector<double> TinyNN::DoPredictBatch(const Matrix& points) {
  std::vector<double> out(points.rows());
  for (std::size_t n = 0; n < points.rows(); ++n)
    out[n] = Evaluate(points.row(n));
  return out;
}

nlohmann::json TinyNN::ToJson() const {
  return nlohmann::json{
      {"dims", dims_},
      {"activation", activation_ == Activation::kTanh ? "tanh" : "sigmoid"},
      {"hidden_weights", hidden_weights_},
      {"hidden_bias", hidden_bias_},
      {"output_weights", output_weights_},
      {"output_bias", output_bias_},
      {"response_mean", response_mean_},
      {"response_scale", response_scale_},
      {"iterations", iterations()},
      {"final_loss", loss_history_.back()},
  };
}

}  // namespace a2d2e
