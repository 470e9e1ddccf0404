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

#include <span>
#include <string>
#include <variant>
#include <vector>

namespace qglm::mmd {

/// Normalized Gaussian mixture k(x, y) = mean_j exp(-gamma_j |x - y|^2).
struct RbfMixture {
  std::vector<double> gammas;
};

/// k(x, y) = delta_{x,y} on basis events; MMD^2 = sum p^2 + sum q^2 - 2 sum pq.
struct LinearProbability {};

/// Pure-state overlap kernel. On distributions (via sqrt-amplitude or Born
/// states) the loss is 2 - 2 sum_x sqrt(P(x) Q(x)). With `phase_sensitive`
/// the loss is 2 - 2 |<model|target>| instead, which also sees relative
/// phases. On state samples the kernel is |<a|b>|^2.
struct PureStateOverlap {
  bool phase_sensitive = false;
};

class KernelSpec {
 public:
  using Variant = std::variant<RbfMixture, LinearProbability, PureStateOverlap>;

  /// Throws ArgumentError unless gammas is nonempty and strictly positive.
  static KernelSpec rbf(std::vector<double> gammas);
  static KernelSpec linear() { return KernelSpec(LinearProbability{}); }
  static KernelSpec pure_overlap(bool phase_sensitive = false) {
    return KernelSpec(PureStateOverlap{phase_sensitive});
  }

  const Variant& variant() const noexcept { return v_; }
  bool is_rbf() const noexcept { return std::holds_alternative<RbfMixture>(v_); }
  bool is_linear() const noexcept {
    return std::holds_alternative<LinearProbability>(v_);
  }
  bool is_pure_overlap() const noexcept {
    return std::holds_alternative<PureStateOverlap>(v_);
  }
  /// Classical kernels can be evaluated on samples; quantum ones need
  /// exact probabilities or amplitudes.
  bool is_classical() const noexcept { return is_rbf(); }

  /// RBF only.
  const std::vector<double>& gammas() const;
  bool phase_sensitive() const noexcept;

  /// Value of k between two distinct one-hot vectors (RBF: mean exp(-2 gamma);
  /// linear: 0). On a discrete event space every supported kernel has the
  /// form c + (1 - c) delta_{x,y}.
  double one_hot_offset() const;

  /// Largest gamma (RBF only).
  double max_gamma() const;

  std::string describe() const;

 private:
  explicit KernelSpec(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// Mixture-averaged RBF value. Throws CapabilityError for non-RBF specs and
/// ArgumentError on dimension mismatch.
double kernel_eval(const KernelSpec& spec, std::span<const double> x,
                   std::span<const double> y);

/// exp(-gamma |x - y|^2) mixture given the squared distance.
double rbf_from_sqdist(const std::vector<double>& gammas, double sqdist);

}  // namespace qglm::mmd
