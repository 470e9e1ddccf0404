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

#include <functional>
#include <optional>
#include <vector>

#include "qglm/circuits/circuit.hpp"
#include "qglm/mmd/kernel.hpp"
#include "qglm/sim/distribution.hpp"
#include "qglm/train/trace.hpp"

namespace qglm::train {

/// What a generator emits per latent sample: a measured vector (Born
/// vector or per-qubit <Z>) compared under an RBF kernel, or the output
/// state itself compared under the pure-state kernel |<a|b>|^2.
enum class GeneratorOutput { ProbVector, ZExpectation, State };

struct QganModel {
  const circuits::ParamCircuit& encoder;
  const circuits::ParamCircuit& generator;
  GeneratorOutput output;
};

/// One generated sample per row of `zs` (a real sample set whose dimension
/// covers the encoder's features).
sim::SampleSet generate(const QganModel& model, const std::vector<double>& theta,
                        const sim::SampleSet& zs);

/// MMD^2_U between generated samples and `ys`.
double qgan_loss(const QganModel& model, const std::vector<double>& theta,
                 const sim::SampleSet& zs, const sim::SampleSet& ys,
                 const mmd::KernelSpec& spec);

/// Gradient of qgan_loss. Vector outputs: analytic RBF partials with
/// respect to each generated sample, contracted with the parameter-shift
/// Jacobian of the generator outputs. State outputs: the kernel is linear
/// in each generated state, so the shift rule is applied to it directly.
/// The target-only term does not depend on theta and is dropped. Throws
/// ArgumentError for fewer than two samples on either side and
/// CapabilityError for a kernel that does not match the output kind.
std::vector<double> qgan_gradient(const QganModel& model,
                                  const std::vector<double>& theta,
                                  const sim::SampleSet& zs,
                                  const sim::SampleSet& ys,
                                  const mmd::KernelSpec& spec);

/// Draws one latent vector.
using PriorSampler = std::function<std::vector<double>(sim::RngStream&)>;

/// Minibatch training with periodic noise regeneration.
///
/// Iteration t: if t % r == 0 the n latent vectors are redrawn from
/// substream ("noise", t); the m targets are shuffled with ("shuffle", t)
/// and cut into ceil(m / b) consecutive minibatches (a trailing batch of a
/// single sample is merged into the one before it, since MMD^2_U needs two
/// samples); one optimizer step is taken per minibatch. The record holds
/// the loss against all m targets before the first step and the mean
/// minibatch gradient norm.
/// Metrics: final_loss_empirical (final theta, last latent set, all targets).
TrainTrace train_qgan_algorithm1(const QganModel& model, const PriorSampler& prior,
                                 const sim::SampleSet& targets,
                                 const mmd::KernelSpec& spec,
                                 const TrainConfig& config,
                                 std::optional<std::vector<double>> theta0 = std::nullopt);

/// Minibatch boundaries used by train_qgan_algorithm1 for m targets.
std::vector<std::size_t> minibatch_sizes(std::size_t m, std::size_t b);

}  // namespace qglm::train
