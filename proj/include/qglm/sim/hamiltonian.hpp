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

#include <complex>
#include <string>
#include <vector>

#include "qglm/sim/state.hpp"

namespace qglm::sim {

/// Square complex matrix, row-major.
struct DenseMatrix {
  std::size_t dim = 0;
  std::vector<Complex> data;

  explicit DenseMatrix(std::size_t d = 0) : dim(d), data(d * d) {}
  Complex& operator()(std::size_t r, std::size_t c) { return data[r * dim + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data[r * dim + c];
  }
};

/// coeff * P_0 (x) P_1 (x) ... with paulis[i] in {I, X, Y, Z} acting on qubit i.
struct PauliTerm {
  double coeff = 0.0;
  std::string paulis;
};

/// Real linear combination of Pauli strings (Hermitian by construction).
class Hamiltonian {
 public:
  explicit Hamiltonian(int n_qubits);

  /// Validates the string length and alphabet.
  Hamiltonian& add_term(double coeff, std::string paulis);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const noexcept { return terms_; }

  /// True when every string uses only I and Z.
  bool is_diagonal() const;

  DenseMatrix dense() const;

  /// H|psi> as a raw amplitude vector (not normalized).
  std::vector<Complex> apply(const PureState& state) const;

  /// <psi|H|psi>.
  double expectation(const PureState& state) const;

 private:
  int n_qubits_;
  std::vector<PauliTerm> terms_;
};

}  // namespace qglm::sim
