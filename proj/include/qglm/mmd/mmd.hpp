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

#include <cstddef>
#include <optional>

#include "qglm/mmd/kernel.hpp"
#include "qglm/sim/distribution.hpp"
#include "qglm/sim/rng.hpp"
#include "qglm/sim/state.hpp"

namespace qglm::mmd {

/// E k(x,x') + E k(y,y') - 2 E k(x,y) for x, x' ~ p and y, y' ~ q on the
/// shared event space. Discrete events are one-hot for RBF, so every kernel
/// reduces to (1 - c) (sum p^2 + sum q^2 - 2 sum pq), except the pure-state
/// kernel, which gives the Bhattacharyya form 2 - 2 sum sqrt(pq).
double mmd2_exact(const sim::DiscreteDistribution& p,
                  const sim::DiscreteDistribution& q, const KernelSpec& spec);

/// Unbiased U-statistic. Discrete sets support RBF and the linear kernel,
/// real sets RBF, state sets the pure-state kernel |<a|b>|^2. Throws
/// ArgumentError for fewer than two samples per side or mismatched shapes
/// and CapabilityError for an unsupported kernel/sample combination.
double mmd2_u(const sim::SampleSet& xs, const sim::SampleSet& ys,
              const KernelSpec& spec);

/// Discrete-event U-statistic from histograms (counts sum to n and m).
double mmd2_u_counts(std::span<const std::size_t> xcounts,
                     std::span<const std::size_t> ycounts, double offset);

/// 2 - 2 sum_x |model_x| |target_x|.
double quantum_mmd_pure(const sim::PureState& model,
                        const sim::PureState& target);

/// 2 - 2 |<model|target>|.
double quantum_mmd_overlap(const sim::PureState& model,
                           const sim::PureState& target);

/// sum p^2 + sum q^2 - 2 sum pq. With `shots`, each overlap Tr(rho sigma)
/// is replaced by a swap-test estimate 2 f - 1, where f is the observed
/// frequency of outcome 0 over `shots` Bernoulli trials with success
/// probability (1 + Tr(rho sigma)) / 2 drawn from `stream`. Throws
/// ArgumentError for shots = 0 or when shots are given without a stream.
double quantum_mmd_diag(const sim::DiscreteDistribution& p,
                        const sim::DiscreteDistribution& q,
                        std::optional<std::size_t> shots = std::nullopt,
                        sim::RngStream* stream = nullptr);

}  // namespace qglm::mmd
