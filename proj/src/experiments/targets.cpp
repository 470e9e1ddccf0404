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

#include "qglm/experiments/targets.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qglm/error.hpp"
#include "qglm/sim/eigen.hpp"

namespace qglm::experiments {

sim::DiscreteDistribution make_discrete_gaussian(int n_qubits, double mu, double sigma) {
  if (n_qubits < 1 || n_qubits > 30) throw ArgumentError("n_qubits must lie in [1, 30]");
  if (!(sigma > 0.0)) throw ArgumentError("sigma must be positive");
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<double> logw(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    const double d = static_cast<double>(x) - mu;
    logw[x] = -d * d / (2.0 * sigma * sigma);
  }
  const double top = *std::max_element(logw.begin(), logw.end());
  for (double& w : logw) w = std::exp(w - top);
  return sim::DiscreteDistribution::from_weights(std::move(logw));
}

sim::PureState make_ghz(int n_qubits) {
  if (n_qubits < 2) throw ArgumentError("GHZ needs n_qubits >= 2");
  std::vector<sim::Complex> amps(std::size_t{1} << n_qubits);
  amps.front() = amps.back() = 1.0 / std::sqrt(2.0);
  return sim::PureState::from_amplitudes(std::move(amps));
}

Gaussian3D::Gaussian3D(Vec3 mean, const Mat3& covariance) : mean_(mean), cov_{}, chol_{} {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) cov_[i][j] = 0.5 * (covariance[i][j] + covariance[j][i]);
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = cov_[i][j];
      for (int k = 0; k < j; ++k) s -= chol_[i][k] * chol_[j][k];
      if (i == j) {
        if (!(s > 0.0)) {
          throw ArgumentError("covariance is not positive definite after symmetrization");
        }
        chol_[i][i] = std::sqrt(s);
      } else {
        chol_[i][j] = s / chol_[j][j];
      }
    }
  }
}

sim::SampleSet sample_gaussian3d(const Gaussian3D& spec, std::size_t n,
                                 sim::RngStream& stream) {
  if (n == 0) throw ArgumentError("n must be >= 1");
  std::vector<double> flat(3 * n);
  const auto& L = spec.cholesky();
  for (std::size_t s = 0; s < n; ++s) {
    const double g[3] = {stream.normal(), stream.normal(), stream.normal()};
    for (int i = 0; i < 3; ++i) {
      double v = spec.mean()[i];
      for (int k = 0; k <= i; ++k) v += L[i][k] * g[k];
      flat[3 * s + static_cast<std::size_t>(i)] = v;
    }
  }
  return sim::SampleSet::real(3, std::move(flat), sim::Provenance::Target);
}

sim::Hamiltonian make_xxz(int n_qubits, double a, double eta, Boundary boundary) {
  if (n_qubits < 2) throw ArgumentError("XXZ chain needs n_qubits >= 2");
  sim::Hamiltonian h(n_qubits);
  const int bonds = boundary == Boundary::Open ? n_qubits - 1 : n_qubits;
  for (int b = 0; b < bonds; ++b) {
    const int i = b;
    const int j = (b + 1) % n_qubits;
    for (char p : {'X', 'Y', 'Z'}) {
      std::string s(static_cast<std::size_t>(n_qubits), 'I');
      s[static_cast<std::size_t>(i)] = p;
      s[static_cast<std::size_t>(j)] = p;
      const double c = p == 'Z' ? a : 1.0;
      if (c != 0.0) h.add_term(c, s);
    }
  }
  if (eta != 0.0) {
    for (int i = 0; i < n_qubits; ++i) {
      std::string s(static_cast<std::size_t>(n_qubits), 'I');
      s[static_cast<std::size_t>(i)] = 'Z';
      h.add_term(eta, s);
    }
  }
  return h;
}

GroundState ground_state(const sim::Hamiltonian& h) {
  auto eig = sim::eigendecompose(h);
  return {eig.eigenvalues.front(), std::move(eig.eigenvectors.front())};
}

}  // namespace qglm::experiments
