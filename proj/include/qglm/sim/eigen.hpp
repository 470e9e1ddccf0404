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

#include <vector>

#include "qglm/sim/hamiltonian.hpp"
#include "qglm/sim/state.hpp"

namespace qglm::sim {

/// Largest matrix dimension handled by the dense solver.
inline constexpr std::size_t kMaxDenseDim = 64;

/// Spectrum of a Hermitian matrix: ascending eigenvalues and the matching
/// unit eigenvectors stored as matrix columns.
struct DenseEigen {
  std::vector<double> values;
  DenseMatrix vectors;
};

/// Cyclic complex Jacobi rotations. Throws CapabilityError above
/// kMaxDenseDim and ArgumentError for non-Hermitian input.
DenseEigen hermitian_eigensolve(const DenseMatrix& matrix);

struct EigenResult {
  std::vector<double> eigenvalues;
  std::vector<PureState> eigenvectors;
};

/// Exact diagonalization of `h` (2^n_qubits <= kMaxDenseDim).
EigenResult eigendecompose(const Hamiltonian& h);

}  // namespace qglm::sim
