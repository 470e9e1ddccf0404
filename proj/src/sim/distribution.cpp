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

#include "qglm/sim/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qglm/error.hpp"

namespace qglm::sim {
namespace {

int log2_exact(std::size_t n) {
  if (n < 2 || (n & (n - 1)) != 0) {
    throw ArgumentError("event count must be a power of two >= 2, got " +
                        std::to_string(n));
  }
  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

std::vector<double> cumulative(std::span<const double> probs) {
  std::vector<double> cdf(probs.size());
  std::partial_sum(probs.begin(), probs.end(), cdf.begin());
  return cdf;
}

std::size_t draw(const std::vector<double>& cdf, RngStream& stream) {
  // Scale by the total so rounding in the last partial sum cannot leave a
  // gap above the final event.
  const double u = stream.uniform() * cdf.back();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
  return std::min(idx, cdf.size() - 1);
}

}  // namespace

DiscreteDistribution::DiscreteDistribution(std::vector<double> probs,
                                           double tol)
    : probs_(std::move(probs)), n_qubits_(log2_exact(probs_.size())) {
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0) || p > 1.0 + tol) {
      throw ArgumentError("probabilities must lie in [0, 1]");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol) {
    throw ArgumentError("probabilities sum to " + std::to_string(sum));
  }
}

DiscreteDistribution DiscreteDistribution::from_weights(
    std::vector<double> weights) {
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw ArgumentError("weights must be nonnegative");
    sum += w;
  }
  if (!(sum > 0.0)) throw ArgumentError("weights sum to zero");
  for (double& w : weights) w /= sum;
  return DiscreteDistribution(std::move(weights));
}

DiscreteDistribution born_distribution(const PureState& state) {
  std::vector<double> probs(state.dim());
  for (std::size_t i = 0; i < state.dim(); ++i) probs[i] = std::norm(state[i]);
  return DiscreteDistribution(std::move(probs), 1e-9);
}

PureState sqrt_amplitude_state(const DiscreteDistribution& dist) {
  std::vector<Complex> amps(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i) amps[i] = std::sqrt(dist[i]);
  return PureState::from_amplitudes(std::move(amps), 1e-9);
}

SampleSet SampleSet::discrete(std::vector<std::size_t> indices,
                              std::size_t n_events, Provenance provenance) {
  if (indices.empty()) throw ArgumentError("sample set must be nonempty");
  for (std::size_t x : indices) {
    if (x >= n_events) throw ArgumentError("sample index out of range");
  }
  return SampleSet(Discrete{std::move(indices), n_events}, provenance);
}

SampleSet SampleSet::real(std::size_t dim, std::vector<double> flat,
                          Provenance provenance) {
  if (dim == 0 || flat.empty() || flat.size() % dim != 0) {
    throw ArgumentError("real samples need dim >= 1 and a whole number of rows");
  }
  return SampleSet(Real{dim, std::move(flat)}, provenance);
}

SampleSet SampleSet::real_rows(const std::vector<std::vector<double>>& rows,
                               Provenance provenance) {
  if (rows.empty()) throw ArgumentError("sample set must be nonempty");
  const std::size_t dim = rows.front().size();
  std::vector<double> flat;
  flat.reserve(dim * rows.size());
  for (const auto& r : rows) {
    if (r.size() != dim) {
      throw ArgumentError("all samples must have identical shape");
    }
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return real(dim, std::move(flat), provenance);
}

SampleSet SampleSet::states(std::vector<PureState> states,
                            Provenance provenance) {
  if (states.empty()) throw ArgumentError("sample set must be nonempty");
  for (const PureState& s : states) {
    if (s.n_qubits() != states.front().n_qubits()) {
      throw ArgumentError("all samples must have identical shape");
    }
  }
  return SampleSet(States{std::move(states)}, provenance);
}

SampleSet::Kind SampleSet::kind() const noexcept {
  switch (data_.index()) {
    case 0: return Kind::Discrete;
    case 1: return Kind::Real;
    default: return Kind::State;
  }
}

std::size_t SampleSet::size() const noexcept {
  return std::visit(
      [](const auto& d) -> std::size_t {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Discrete>) return d.indices.size();
        else if constexpr (std::is_same_v<T, Real>) return d.flat.size() / d.dim;
        else return d.states.size();
      },
      data_);
}

std::span<const std::size_t> SampleSet::indices() const {
  const auto* d = std::get_if<Discrete>(&data_);
  if (!d) throw ArgumentError("sample set is not discrete");
  return d->indices;
}

std::size_t SampleSet::n_events() const {
  const auto* d = std::get_if<Discrete>(&data_);
  if (!d) throw ArgumentError("sample set is not discrete");
  return d->n_events;
}

std::vector<std::size_t> SampleSet::counts() const {
  std::vector<std::size_t> h(n_events(), 0);
  for (std::size_t x : indices()) ++h[x];
  return h;
}

std::size_t SampleSet::dim() const {
  const auto* d = std::get_if<Real>(&data_);
  if (!d) throw ArgumentError("sample set is not real-valued");
  return d->dim;
}

std::span<const double> SampleSet::row(std::size_t i) const {
  const auto* d = std::get_if<Real>(&data_);
  if (!d) throw ArgumentError("sample set is not real-valued");
  return std::span<const double>(d->flat).subspan(i * d->dim, d->dim);
}

std::span<const double> SampleSet::flat() const {
  const auto* d = std::get_if<Real>(&data_);
  if (!d) throw ArgumentError("sample set is not real-valued");
  return d->flat;
}

std::span<const PureState> SampleSet::state_list() const {
  const auto* d = std::get_if<States>(&data_);
  if (!d) throw ArgumentError("sample set does not hold states");
  return d->states;
}

SampleSet SampleSet::subset(std::span<const std::size_t> positions) const {
  const std::size_t n = size();
  for (std::size_t p : positions) {
    if (p >= n) throw ArgumentError("subset position out of range");
  }
  switch (kind()) {
    case Kind::Discrete: {
      std::vector<std::size_t> out;
      for (std::size_t p : positions) out.push_back(indices()[p]);
      return discrete(std::move(out), n_events(), provenance_);
    }
    case Kind::Real: {
      std::vector<double> out;
      for (std::size_t p : positions) {
        auto r = row(p);
        out.insert(out.end(), r.begin(), r.end());
      }
      return real(dim(), std::move(out), provenance_);
    }
    case Kind::State:
    default: {
      std::vector<PureState> out;
      for (std::size_t p : positions) out.push_back(state_list()[p]);
      return states(std::move(out), provenance_);
    }
  }
}

SampleSet sample(const DiscreteDistribution& dist, std::size_t n,
                 RngStream& stream, Provenance provenance) {
  if (n == 0) throw ArgumentError("sample count must be >= 1");
  const auto cdf = cumulative(dist.probs());
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = draw(cdf, stream);
  return SampleSet::discrete(std::move(out), dist.size(), provenance);
}

std::vector<std::size_t> sample_counts(const DiscreteDistribution& dist,
                                       std::size_t n, RngStream& stream) {
  if (n == 0) throw ArgumentError("sample count must be >= 1");
  const auto cdf = cumulative(dist.probs());
  std::vector<std::size_t> h(dist.size(), 0);
  for (std::size_t i = 0; i < n; ++i) ++h[draw(cdf, stream)];
  return h;
}

}  // namespace qglm::sim
