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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qglm/train/optimizer.hpp"

namespace qglm::train {

struct TrainConfig {
  int max_iters = 50;
  double learning_rate = 0.1;
  OptimizerKind optimizer = OptimizerKind::Adam;
  /// Model/target sample counts; empty means exact (QCBM only).
  std::optional<std::size_t> n_model_samples;
  std::optional<std::size_t> m_target_samples;
  /// Target minibatch size; 0 means the full target set.
  std::size_t batch_size = 0;
  /// Noise inputs are redrawn every `noise_refresh` iterations.
  int noise_refresh = 1;
  std::uint64_t seed = 0;
  double convergence_tol = 1e-12;

  /// Throws ArgumentError on T < 1, eta <= 0, r < 1, tol < 0, or a zero
  /// sample count.
  void validate() const;
};

nlohmann::json to_json(const TrainConfig& config);

struct IterationRecord {
  int iter = 0;
  double loss_empirical = 0.0;
  double loss_exact = 0.0;  // NaN when not computable
  double grad_norm = 0.0;
  double elapsed_ms = 0.0;
};

struct TrainTrace {
  std::vector<IterationRecord> records;
  std::vector<double> initial_theta;
  std::vector<double> final_theta;
  bool converged = false;
  std::map<std::string, double> metrics;

  /// Header iter,loss_empirical,loss_exact,grad_norm,elapsed_ms; one row
  /// per record.
  std::string to_csv() const;
  void write_csv(const std::string& path) const;

  /// Final theta, metrics, convergence flag and iteration count.
  nlohmann::json summary_json() const;

  /// Smallest recorded loss_empirical (NaN for an empty trace).
  double min_loss_empirical() const;
  /// Smallest finite recorded loss_exact (NaN if none).
  double min_loss_exact() const;
};

/// Equality of everything except wall-clock times.
bool same_except_timing(const TrainTrace& a, const TrainTrace& b);

/// theta_0 ~ U[0, 2 pi)^n from the "init" substream of `seed`.
std::vector<double> initial_theta(std::size_t n, std::uint64_t seed);

}  // namespace qglm::train
