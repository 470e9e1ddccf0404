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

#include <array>
#include <cstddef>

#include "qglm/sim/distribution.hpp"
#include "qglm/sim/hamiltonian.hpp"
#include "qglm/sim/rng.hpp"
#include "qglm/sim/state.hpp"

namespace qglm::experiments {

/// probs[x] proportional to exp(-(x - mu)^2 / (2 sigma^2)) over x in
/// [0, 2^N). Evaluated in log space, so tiny sigma concentrates on the
/// nearest event instead of underflowing. Throws ArgumentError for
/// sigma <= 0 or N < 1.
sim::DiscreteDistribution make_discrete_gaussian(int n_qubits, double mu, double sigma);

/// (|0...0> + |1...1>) / sqrt(2). Throws ArgumentError for N < 2.
sim::PureState make_ghz(int n_qubits);

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

/// Covariance exactly as printed for the 3-D Gaussian experiment. It is not
/// symmetric, and its symmetric part is not positive definite.
inline constexpr Mat3 kPrintedCovariance{{{0.5, 1.0, 0.25}, {0.1, 0.5, 0.1}, {0.25, 0.1, 0.5}}};

/// Repair used by the presets: the printed matrix with its upper triangle
/// replaced by the mirror of the lower one (entry (0,1) becomes 0.1).
inline constexpr Mat3 kRepairedCovariance{{{0.5, 0.1, 0.25}, {0.1, 0.5, 0.1}, {0.25, 0.1, 0.5}}};

/// Multivariate normal in three dimensions.
class Gaussian3D {
 public:
  /// Symmetrizes the covariance as (S + S^T) / 2 and factors it. Throws
  /// ArgumentError if the result is not positive definite.
  Gaussian3D(Vec3 mean, const Mat3& covariance);

  const Vec3& mean() const noexcept { return mean_; }
  const Mat3& covariance() const noexcept { return cov_; }
  /// Lower-triangular Cholesky factor.
  const Mat3& cholesky() const noexcept { return chol_; }

 private:
  Vec3 mean_;
  Mat3 cov_;
  Mat3 chol_;
};

/// n draws mean + L g with g standard normal (Box-Muller on `stream`).
sim::SampleSet sample_gaussian3d(const Gaussian3D& spec, std::size_t n,
                                 sim::RngStream& stream);

enum class Boundary { Open, Periodic };

/// sum_bonds (X_i X_j + Y_i Y_j + a Z_i Z_j) + eta sum_i Z_i. Open chains
/// have bonds (i, i+1) for i < N-1; periodic chains add (N-1, 0), so for
/// N = 2 the single bond appears twice.
sim::Hamiltonian make_xxz(int n_qubits, double a, double eta, Boundary boundary);

struct GroundState {
  double energy = 0.0;
  sim::PureState state;
};

/// Lowest eigenpair by exact diagonalization.
GroundState ground_state(const sim::Hamiltonian& h);

}  // namespace qglm::experiments
