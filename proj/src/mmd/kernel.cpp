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

#include "qglm/mmd/kernel.hpp"

#include <cmath>
#include <sstream>

#include "qglm/error.hpp"

namespace qglm::mmd {

KernelSpec KernelSpec::rbf(std::vector<double> gammas) {
  if (gammas.empty()) throw ArgumentError("RBF mixture needs at least one gamma");
  for (double g : gammas) {
    if (!(g > 0.0) || !std::isfinite(g)) {
      throw ArgumentError("RBF gammas must be finite and strictly positive");
    }
  }
  return KernelSpec(RbfMixture{std::move(gammas)});
}

const std::vector<double>& KernelSpec::gammas() const {
  if (!is_rbf()) throw CapabilityError("kernel has no RBF bandwidths");
  return std::get<RbfMixture>(v_).gammas;
}

bool KernelSpec::phase_sensitive() const noexcept {
  const auto* p = std::get_if<PureStateOverlap>(&v_);
  return p != nullptr && p->phase_sensitive;
}

double KernelSpec::one_hot_offset() const {
  if (!is_rbf()) return 0.0;
  return rbf_from_sqdist(gammas(), 2.0);
}

double KernelSpec::max_gamma() const {
  double g = 0.0;
  for (double x : gammas()) g = std::max(g, x);
  return g;
}

std::string KernelSpec::describe() const {
  std::ostringstream os;
  if (is_rbf()) {
    os << "rbf[";
    for (std::size_t i = 0; i < gammas().size(); ++i) {
      os << (i ? "," : "") << gammas()[i];
    }
    os << "]";
  } else if (is_linear()) {
    os << "linear";
  } else {
    os << (phase_sensitive() ? "overlap" : "bhattacharyya");
  }
  return os.str();
}

double rbf_from_sqdist(const std::vector<double>& gammas, double sqdist) {
  double s = 0.0;
  for (double g : gammas) s += std::exp(-g * sqdist);
  return s / static_cast<double>(gammas.size());
}

double kernel_eval(const KernelSpec& spec, std::span<const double> x,
                   std::span<const double> y) {
  if (!spec.is_classical()) {
    throw CapabilityError("pointwise evaluation needs a classical kernel");
  }
  if (x.size() != y.size()) throw ArgumentError("kernel arguments differ in dimension");
  double d2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    d2 += d * d;
  }
  return rbf_from_sqdist(spec.gammas(), d2);
}

}  // namespace qglm::mmd
