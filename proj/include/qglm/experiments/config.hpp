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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "qglm/experiments/targets.hpp"
#include "qglm/mmd/kernel.hpp"
#include "qglm/train/qgan.hpp"
#include "qglm/train/trace.hpp"

namespace qglm::experiments {

struct DiscreteGaussianTarget {
  int n_qubits = 8;
  double mu = 1.0;
  double sigma = 8.0;
};

struct GhzTarget {
  int n_qubits = 4;
};

struct Gaussian3DTarget {
  Vec3 mean{0.0, 0.0, 0.0};
  Mat3 covariance = kRepairedCovariance;
  std::size_t m = 200;  // training targets per seed
};

struct XxzTarget {
  int n_qubits = 2;
  double eta = 0.25;
  double a_low = -0.2;
  double a_high = 0.2;
  Boundary boundary = Boundary::Open;
  std::size_t m = 9;
};

using TargetSpec =
    std::variant<DiscreteGaussianTarget, GhzTarget, Gaussian3DTarget, XxzTarget>;

struct CostTerm {
  double coeff = 0.0;
  std::string paulis;
};

struct CircuitSpec {
  /// qcbm | hardware_efficient | qaoa (Born machines); style_qgan (3-D
  /// Gaussian); xxz_phl (Hamiltonian learning).
  std::string type = "qcbm";
  int depth = 1;
  std::vector<CostTerm> cost;  // qaoa only
};

struct PriorSpec {
  std::string type = "normal";  // normal | uniform
  int dim = 3;
  double low = -1.0;
  double high = 1.0;
};

struct EvaluationSpec {
  std::size_t holdout_n = 10000;
  double delta = 0.05;
  int phl_grid = 41;
  /// Classical kernel used to compare Born machines trained under
  /// different losses.
  std::vector<double> reference_gammas{0.25, 4.0};
};

enum class Family { Qcbm, Qgan, Phl };

struct ExperimentConfig {
  std::string name;
  TargetSpec target;
  CircuitSpec circuit;
  mmd::KernelSpec kernel = mmd::KernelSpec::linear();
  train::GeneratorOutput output = train::GeneratorOutput::ZExpectation;
  PriorSpec prior;
  train::TrainConfig train;
  EvaluationSpec evaluation;
  std::uint64_t seed = 0;
  int repeats = 1;

  Family family() const;
};

/// Parses and validates a configuration document. A document of the form
/// {"preset": NAME, ...} starts from that preset and applies the remaining
/// keys as a JSON merge patch. Throws ConfigError naming the first bad
/// field.
ExperimentConfig parse_config(const nlohmann::json& doc);

/// Fully expanded document (presets resolved, defaults filled in).
nlohmann::json config_to_json(const ExperimentConfig& config);

/// Named configurations for the paper experiments.
std::vector<std::string> preset_names();
/// Throws ConfigError("preset", ...) for an unknown name.
nlohmann::json preset_document(const std::string& name);
/// One-line description of a preset.
std::string preset_description(const std::string& name);

}  // namespace qglm::experiments
