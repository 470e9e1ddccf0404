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

#include "qglm/sim/distribution.hpp"
#include "qglm/sim/state.hpp"

namespace qglm::sim {

/// |<a|b>|^2.
double fidelity(const PureState& a, const PureState& b);

/// sum_{x: p(x) > 0} p(x) ln(p(x) / q(x)). Returns +infinity when p puts
/// mass where q has none.
double kl_divergence(const DiscreteDistribution& p,
                     const DiscreteDistribution& q);

}  // namespace qglm::sim
