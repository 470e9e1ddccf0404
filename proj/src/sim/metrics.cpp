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

#include "qglm/sim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qglm/error.hpp"

namespace qglm::sim {

double fidelity(const PureState& a, const PureState& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw ArgumentError("fidelity of states with different qubit counts");
  }
  return std::clamp(std::norm(inner_product(a, b)), 0.0, 1.0);
}

double kl_divergence(const DiscreteDistribution& p,
                     const DiscreteDistribution& q) {
  if (p.size() != q.size()) {
    throw ArgumentError("KL divergence of distributions of different length");
  }
  double kl = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] <= 0.0) continue;
    if (q[x] <= 0.0) return std::numeric_limits<double>::infinity();
    kl += p[x] * std::log(p[x] / q[x]);
  }
  return std::max(kl, 0.0);
}

}  // namespace qglm::sim
