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
#include <functional>

#include "json.hpp"
#include "qglm/circuits/circuit.hpp"
#include "qglm/mmd/kernel.hpp"
#include "qglm/train/qcbm.hpp"
#include "qglm/train/qgan.hpp"
#include "qglm/train/trace.hpp"

namespace qglm::bounds {

/// Estimated generalization gap of a trained model. The infimum over the
/// parameter space is not computable; the smallest loss seen during the
/// run stands in for it.
struct GapReport {
  double expected_loss = 0.0;   // hold-out MMD^2_U (or exact for quantum access)
  double reference_loss = 0.0;  // run minimum
  double gap = 0.0;             // expected_loss - reference_loss
  std::size_t holdout_n = 0;

  nlohmann::json to_json() const;
};

/// Born machine: holdout_n fresh model and target draws (substreams
/// "gap-model" and "gap-target" of `seed`) scored with MMD^2_U. A
/// pure-state kernel has no sample estimator, so its exact loss is used.
/// The reference is the run's minimum exact loss.
GapReport empirical_gap(const train::TrainTrace& trace,
                        const circuits::ParamCircuit& circuit,
                        const train::QcbmTarget& target,
                        const mmd::KernelSpec& spec, std::size_t holdout_n,
                        std::uint64_t seed);

/// Draws `n` target samples.
using TargetSampler = std::function<sim::SampleSet(sim::RngStream&, std::size_t)>;

/// QGAN: holdout_n fresh latent vectors and target draws scored with
/// MMD^2_U at the final theta. The reference is the run's minimum
/// empirical loss.
GapReport empirical_gap(const train::TrainTrace& trace, const train::QganModel& model,
                        const train::PriorSampler& prior,
                        const TargetSampler& target_sampler,
                        const mmd::KernelSpec& spec, std::size_t holdout_n,
                        std::uint64_t seed);

}  // namespace qglm::bounds
