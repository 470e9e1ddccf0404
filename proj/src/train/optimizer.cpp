// Copyright 2026 The QGLM Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qglm/train/optimizer.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "qglm/error.hpp"

namespace qglm::train {
namespace {

constexpr double kBeta1 = 0.9;
constexpr double kBeta2 = 0.999;
constexpr double kEps = 1e-8;

}  // namespace

std::string_view to_string(OptimizerKind kind) {
  switch (kind) {
    case OptimizerKind::GD:
      return "gd";
    case OptimizerKind::Adam:
      return "adam";
    case OptimizerKind::Adagrad:
      return "adagrad";
  }
  return "?";
}

OptimizerKind optimizer_from_string(std::string_view name) {
  std::string lower(name);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (auto k : {OptimizerKind::GD, OptimizerKind::Adam, OptimizerKind::Adagrad}) {
    if (to_string(k) == lower) return k;
  }
  throw ArgumentError("unknown optimizer '" + std::string(name) + "'");
}

Optimizer::Optimizer(OptimizerKind kind, double learning_rate, std::size_t n_params)
    : kind_(kind), lr_(learning_rate), m_(n_params, 0.0), v_(n_params, 0.0) {
  if (!(learning_rate > 0.0)) throw ArgumentError("learning rate must be positive");
}

void Optimizer::step(std::vector<double>& theta, std::span<const double> grad) {
  if (theta.size() != m_.size() || grad.size() != m_.size()) {
    throw ArgumentError("optimizer parameter count mismatch");
  }
  ++t_;
  switch (kind_) {
    case OptimizerKind::GD:
      for (std::size_t i = 0; i < theta.size(); ++i) theta[i] -= lr_ * grad[i];
      break;
    case OptimizerKind::Adam: {
      const double c1 = 1.0 - std::pow(kBeta1, static_cast<double>(t_));
      const double c2 = 1.0 - std::pow(kBeta2, static_cast<double>(t_));
      for (std::size_t i = 0; i < theta.size(); ++i) {
        m_[i] = kBeta1 * m_[i] + (1.0 - kBeta1) * grad[i];
        v_[i] = kBeta2 * v_[i] + (1.0 - kBeta2) * grad[i] * grad[i];
        theta[i] -= lr_ * (m_[i] / c1) / (std::sqrt(v_[i] / c2) + kEps);
      }
      break;
    }
    case OptimizerKind::Adagrad:
      for (std::size_t i = 0; i < theta.size(); ++i) {
        v_[i] += grad[i] * grad[i];
        theta[i] -= lr_ * grad[i] / (std::sqrt(v_[i]) + kEps);
      }
      break;
  }
}

}  // namespace qglm::train
