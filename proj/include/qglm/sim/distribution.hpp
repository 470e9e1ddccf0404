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
#include <span>
#include <variant>
#include <vector>

#include "qglm/sim/rng.hpp"
#include "qglm/sim/state.hpp"

namespace qglm::sim {

/// Normalized probability vector over 2^N events.
class DiscreteDistribution {
 public:
  /// Validates: power-of-two length, entries >= 0, sum 1 within `tol`.
  explicit DiscreteDistribution(std::vector<double> probs, double tol = 1e-10);

  /// Normalizes nonnegative weights with a positive sum.
  static DiscreteDistribution from_weights(std::vector<double> weights);

  std::span<const double> probs() const noexcept { return probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::size_t size() const noexcept { return probs_.size(); }
  int n_qubits() const noexcept { return n_qubits_; }

 private:
  std::vector<double> probs_;
  int n_qubits_ = 0;
};

/// probs[x] = |amplitudes[x]|^2.
DiscreteDistribution born_distribution(const PureState& state);

/// Amplitudes sqrt(Q(x)): the pure state whose Born distribution is `dist`.
PureState sqrt_amplitude_state(const DiscreteDistribution& dist);

enum class Provenance { Model, Target };

/// A nonempty set of samples of one shape: basis indices of a discrete
/// event space, real vectors of a fixed dimension, or pure states.
class SampleSet {
 public:
  enum class Kind { Discrete, Real, State };

  static SampleSet discrete(std::vector<std::size_t> indices,
                            std::size_t n_events, Provenance provenance);
  /// `flat` is row-major with `dim` columns.
  static SampleSet real(std::size_t dim, std::vector<double> flat,
                        Provenance provenance);
  static SampleSet real_rows(const std::vector<std::vector<double>>& rows,
                             Provenance provenance);
  static SampleSet states(std::vector<PureState> states,
                          Provenance provenance);

  Kind kind() const noexcept;
  std::size_t size() const noexcept;
  Provenance provenance() const noexcept { return provenance_; }

  // Discrete view.
  std::span<const std::size_t> indices() const;
  std::size_t n_events() const;
  std::vector<std::size_t> counts() const;

  // Real view.
  std::size_t dim() const;
  std::span<const double> row(std::size_t i) const;
  std::span<const double> flat() const;

  // State view.
  std::span<const PureState> state_list() const;

  /// Samples at `positions`, same kind and provenance.
  SampleSet subset(std::span<const std::size_t> positions) const;

 private:
  struct Discrete {
    std::vector<std::size_t> indices;
    std::size_t n_events;
  };
  struct Real {
    std::size_t dim;
    std::vector<double> flat;
  };
  struct States {
    std::vector<PureState> states;
  };

  SampleSet(std::variant<Discrete, Real, States> data, Provenance p)
      : data_(std::move(data)), provenance_(p) {}

  std::variant<Discrete, Real, States> data_;
  Provenance provenance_;
};

/// `n` i.i.d. draws by inverse-CDF lookup. Throws ArgumentError for n = 0.
SampleSet sample(const DiscreteDistribution& dist, std::size_t n,
                 RngStream& stream, Provenance provenance = Provenance::Model);

/// Same draws as `sample` but returned as a histogram over events.
std::vector<std::size_t> sample_counts(const DiscreteDistribution& dist,
                                       std::size_t n, RngStream& stream);

}  // namespace qglm::sim
