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

#include <optional>
#include <vector>

#include "qglm/circuits/circuit.hpp"
#include "qglm/mmd/kernel.hpp"
#include "qglm/sim/distribution.hpp"
#include "qglm/train/trace.hpp"

namespace qglm::train {

/// Target of a Born machine: a distribution, optionally with amplitudes.
/// A distribution-only target uses sqrt-amplitudes for the pure-state kernel.
class QcbmTarget {
 public:
  static QcbmTarget distribution(sim::DiscreteDistribution dist);
  static QcbmTarget state(sim::PureState state);

  const sim::DiscreteDistribution& dist() const noexcept { return dist_; }
  const sim::PureState& amplitudes() const noexcept { return state_; }
  int n_qubits() const noexcept { return state_.n_qubits(); }

 private:
  QcbmTarget(sim::DiscreteDistribution d, sim::PureState s)
      : dist_(std::move(d)), state_(std::move(s)) {}
  sim::DiscreteDistribution dist_;
  sim::PureState state_;
};

/// Exact access (both counts empty) or n model / m target samples.
struct Sampling {
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;

  static Sampling exact() { return {}; }
  static Sampling sampled(std::size_t n, std::size_t m) { return {n, m}; }
  bool is_exact() const noexcept { return !n && !m; }
};

/// Exact mode: MMD^2 of the Born distribution against the target under
/// `spec` (pure-state kernels use amplitudes). Sampled mode: MMD^2_U of n
/// model and m target draws taken from the "model" and "target"
/// substreams of `stream`. Throws CapabilityError for a quantum kernel in
/// sampled mode or a half-specified sampling, ArgumentError on size
/// mismatches or a missing stream.
double qcbm_loss(const circuits::ParamCircuit& circuit,
                 const std::vector<double>& theta, const QcbmTarget& target,
                 const mmd::KernelSpec& spec, const Sampling& sampling,
                 const sim::RngStream* stream = nullptr);

/// Parameter-shift gradient of qcbm_loss. In exact mode it is the exact
/// derivative. In sampled mode the base draws are those of qcbm_loss with
/// the same stream; every shifted circuit contributes n fresh draws from
/// its own ("shift", k) substream.
std::vector<double> qcbm_gradient(const circuits::ParamCircuit& circuit,
                                  const std::vector<double>& theta,
                                  const QcbmTarget& target,
                                  const mmd::KernelSpec& spec,
                                  const Sampling& sampling,
                                  const sim::RngStream* stream = nullptr);

/// Descent from initial_theta(N_gt, seed) (or `theta0`). Each iteration t
/// uses substream ("iter", t). Records the loss before the update; stops
/// after max_iters or once the gradient norm drops below the tolerance.
/// Metrics: final_loss_exact, final_loss_empirical (equal in exact mode),
/// min_loss_exact.
TrainTrace train_qcbm(const circuits::ParamCircuit& circuit,
                      const QcbmTarget& target, const mmd::KernelSpec& spec,
                      const TrainConfig& config,
                      std::optional<std::vector<double>> theta0 = std::nullopt);

/// Exact MMD^2 of the model against the target under `spec`.
double qcbm_exact_loss(const sim::PureState& model, const QcbmTarget& target,
                       const mmd::KernelSpec& spec);

}  // namespace qglm::train
