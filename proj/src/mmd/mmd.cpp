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

#include "qglm/mmd/mmd.hpp"

#include <cmath>
#include <complex>

#include "qglm/error.hpp"
#include "qglm/sim/accumulate.hpp"

namespace qglm::mmd {
namespace {

using sim::NeumaierSum;
using sim::SampleSet;

struct Overlaps {
  double pp, qq, pq;
};

Overlaps overlaps(const sim::DiscreteDistribution& p,
                  const sim::DiscreteDistribution& q) {
  if (p.size() != q.size()) throw ArgumentError("event spaces differ");
  NeumaierSum pp, qq, pq;
  for (std::size_t x = 0; x < p.size(); ++x) {
    pp += p[x] * p[x];
    qq += q[x] * q[x];
    pq += p[x] * q[x];
  }
  return {pp.value(), qq.value(), pq.value()};
}

double sqdist(std::span<const double> a, std::span<const double> b) {
  double d2 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    d2 += d * d;
  }
  return d2;
}

// Sum over ordered pairs i != i' within one set.
double within_real(const SampleSet& s, const std::vector<double>& gammas) {
  NeumaierSum acc;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      acc += rbf_from_sqdist(gammas, sqdist(s.row(i), s.row(j)));
    }
  }
  return 2.0 * acc.value();
}

double cross_real(const SampleSet& a, const SampleSet& b,
                  const std::vector<double>& gammas) {
  NeumaierSum acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc += rbf_from_sqdist(gammas, sqdist(a.row(i), b.row(j)));
    }
  }
  return acc.value();
}

double state_kernel(const sim::PureState& a, const sim::PureState& b) {
  return std::norm(sim::inner_product(a, b));
}

double within_states(const SampleSet& s) {
  const auto st = s.state_list();
  NeumaierSum acc;
  for (std::size_t i = 0; i < st.size(); ++i) {
    for (std::size_t j = i + 1; j < st.size(); ++j) acc += state_kernel(st[i], st[j]);
  }
  return 2.0 * acc.value();
}

double cross_states(const SampleSet& a, const SampleSet& b) {
  const auto sa = a.state_list();
  const auto sb = b.state_list();
  NeumaierSum acc;
  for (const auto& x : sa) {
    for (const auto& y : sb) acc += state_kernel(x, y);
  }
  return acc.value();
}

double combine(double wx, double wy, double cross, double n, double m) {
  return wx / (n * (n - 1.0)) + wy / (m * (m - 1.0)) - 2.0 * cross / (n * m);
}

}  // namespace

double mmd2_exact(const sim::DiscreteDistribution& p,
                  const sim::DiscreteDistribution& q, const KernelSpec& spec) {
  if (spec.is_pure_overlap()) {
    if (p.size() != q.size()) throw ArgumentError("event spaces differ");
    NeumaierSum bc;
    for (std::size_t x = 0; x < p.size(); ++x) bc += std::sqrt(p[x] * q[x]);
    return 2.0 - 2.0 * bc.value();
  }
  const Overlaps o = overlaps(p, q);
  const double scale = 1.0 - spec.one_hot_offset();
  return scale * ((o.pp - o.pq) + (o.qq - o.pq));
}

double mmd2_u_counts(std::span<const std::size_t> xcounts,
                     std::span<const std::size_t> ycounts, double offset) {
  if (xcounts.size() != ycounts.size()) throw ArgumentError("event spaces differ");
  double n = 0.0, m = 0.0, hx = 0.0, hy = 0.0, hxy = 0.0;
  for (std::size_t e = 0; e < xcounts.size(); ++e) {
    const double a = static_cast<double>(xcounts[e]);
    const double b = static_cast<double>(ycounts[e]);
    n += a;
    m += b;
    hx += a * a;
    hy += b * b;
    hxy += a * b;
  }
  if (n < 2.0 || m < 2.0) throw ArgumentError("MMD_U needs at least two samples per side");
  // Ordered pairs i != i' with k = c + (1 - c) delta.
  const double wx = offset * (n * n - n) + (1.0 - offset) * (hx - n);
  const double wy = offset * (m * m - m) + (1.0 - offset) * (hy - m);
  const double cross = offset * n * m + (1.0 - offset) * hxy;
  return combine(wx, wy, cross, n, m);
}

double mmd2_u(const SampleSet& xs, const SampleSet& ys, const KernelSpec& spec) {
  if (xs.size() < 2 || ys.size() < 2) {
    throw ArgumentError("MMD_U needs at least two samples per side");
  }
  if (xs.kind() != ys.kind()) throw ArgumentError("sample sets differ in kind");
  const double n = static_cast<double>(xs.size());
  const double m = static_cast<double>(ys.size());
  switch (xs.kind()) {
    case SampleSet::Kind::Discrete: {
      if (spec.is_pure_overlap()) {
        throw CapabilityError("pure-state kernel needs exact amplitudes, not samples");
      }
      if (xs.n_events() != ys.n_events()) throw ArgumentError("event spaces differ");
      return mmd2_u_counts(xs.counts(), ys.counts(), spec.one_hot_offset());
    }
    case SampleSet::Kind::Real: {
      if (!spec.is_rbf()) {
        throw CapabilityError("real-valued samples need an RBF kernel");
      }
      if (xs.dim() != ys.dim()) throw ArgumentError("sample dimensions differ");
      const auto& g = spec.gammas();
      return combine(within_real(xs, g), within_real(ys, g), cross_real(xs, ys, g), n, m);
    }
    case SampleSet::Kind::State: {
      if (!spec.is_pure_overlap()) {
        throw CapabilityError("state samples need the pure-state overlap kernel");
      }
      if (xs.state_list()[0].n_qubits() != ys.state_list()[0].n_qubits()) {
        throw ArgumentError("state samples differ in qubit count");
      }
      return combine(within_states(xs), within_states(ys), cross_states(xs, ys), n, m);
    }
  }
  return 0.0;
}

double quantum_mmd_pure(const sim::PureState& model, const sim::PureState& target) {
  if (model.n_qubits() != target.n_qubits()) throw ArgumentError("qubit counts differ");
  NeumaierSum bc;
  for (std::size_t x = 0; x < model.dim(); ++x) {
    bc += std::abs(model[x]) * std::abs(target[x]);
  }
  return 2.0 - 2.0 * bc.value();
}

double quantum_mmd_overlap(const sim::PureState& model, const sim::PureState& target) {
  if (model.n_qubits() != target.n_qubits()) throw ArgumentError("qubit counts differ");
  return 2.0 - 2.0 * std::abs(sim::inner_product(model, target));
}

double quantum_mmd_diag(const sim::DiscreteDistribution& p,
                        const sim::DiscreteDistribution& q,
                        std::optional<std::size_t> shots, sim::RngStream* stream) {
  const Overlaps o = overlaps(p, q);
  if (!shots) return (o.pp - o.pq) + (o.qq - o.pq);
  if (*shots == 0) throw ArgumentError("shots must be >= 1");
  if (stream == nullptr) throw ArgumentError("shot mode needs a random stream");
  auto swap_test = [&](double overlap, std::uint64_t index) {
    sim::RngStream s = stream->substream("swap_test", index);
    const double p0 = 0.5 + 0.5 * overlap;
    std::size_t zeros = 0;
    for (std::size_t t = 0; t < *shots; ++t) zeros += s.uniform() < p0 ? 1 : 0;
    return 2.0 * static_cast<double>(zeros) / static_cast<double>(*shots) - 1.0;
  };
  return swap_test(o.pp, 0) + swap_test(o.qq, 1) - 2.0 * swap_test(o.pq, 2);
}

}  // namespace qglm::mmd
