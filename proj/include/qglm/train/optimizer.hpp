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

#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace qglm::train {

enum class OptimizerKind { GD, Adam, Adagrad };

std::string_view to_string(OptimizerKind kind);
/// Accepts "gd", "adam", "adagrad" (case-insensitive).
OptimizerKind optimizer_from_string(std::string_view name);

/// First-order update rules. Adam uses beta1 = 0.9, beta2 = 0.999,
/// eps = 1e-8 with bias correction; Adagrad uses eps = 1e-8.
class Optimizer {
 public:
  Optimizer(OptimizerKind kind, double learning_rate, std::size_t n_params);

  void step(std::vector<double>& theta, std::span<const double> grad);

  OptimizerKind kind() const noexcept { return kind_; }
  long steps() const noexcept { return t_; }

 private:
  OptimizerKind kind_;
  double lr_;
  long t_ = 0;
  std::vector<double> m_;
  std::vector<double> v_;
};

}  // namespace qglm::train
