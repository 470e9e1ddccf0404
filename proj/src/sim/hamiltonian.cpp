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

#include "qglm/sim/hamiltonian.hpp"

#include <bit>

#include "qglm/error.hpp"

namespace qglm::sim {
namespace {

// P|x> = phase * |x ^ flip>.
struct PauliAction {
  std::size_t flip = 0;
  std::size_t z_mask = 0;  // Z and Y positions contribute (-1)^{bit}
  int y_count = 0;
};

PauliAction decode(const std::string& paulis) {
  const int n = static_cast<int>(paulis.size());
  PauliAction a;
  for (int q = 0; q < n; ++q) {
    const std::size_t m = qubit_mask(n, q);
    switch (paulis[q]) {
      case 'X': a.flip |= m; break;
      case 'Y': a.flip |= m; a.z_mask |= m; ++a.y_count; break;
      case 'Z': a.z_mask |= m; break;
      default: break;
    }
  }
  return a;
}

// <x ^ flip| P |x>; Y = i X Z so each Y adds a factor i and a Z sign.
Complex phase_of(const PauliAction& a, std::size_t x) {
  const bool odd = std::popcount(x & a.z_mask) & 1;
  Complex ph = odd ? -1.0 : 1.0;
  static const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return ph * kIPow[a.y_count % 4];
}

}  // namespace

Hamiltonian::Hamiltonian(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1) throw ArgumentError("Hamiltonian needs >= 1 qubit");
}

Hamiltonian& Hamiltonian::add_term(double coeff, std::string paulis) {
  if (static_cast<int>(paulis.size()) != n_qubits_) {
    throw ArgumentError("Pauli string '" + paulis + "' has wrong length");
  }
  for (char c : paulis) {
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      throw ArgumentError("Pauli string '" + paulis + "' has invalid label");
    }
  }
  terms_.push_back({coeff, std::move(paulis)});
  return *this;
}

bool Hamiltonian::is_diagonal() const {
  for (const auto& t : terms_) {
    if (t.paulis.find_first_of("XY") != std::string::npos) return false;
  }
  return true;
}

DenseMatrix Hamiltonian::dense() const {
  const std::size_t dim = std::size_t{1} << n_qubits_;
  DenseMatrix h(dim);
  for (const auto& t : terms_) {
    const PauliAction a = decode(t.paulis);
    for (std::size_t x = 0; x < dim; ++x) {
      h(x ^ a.flip, x) += t.coeff * phase_of(a, x);
    }
  }
  return h;
}

std::vector<Complex> Hamiltonian::apply(const PureState& state) const {
  if (state.n_qubits() != n_qubits_) {
    throw ArgumentError("state and Hamiltonian qubit counts differ");
  }
  std::vector<Complex> out(state.dim(), Complex{0.0, 0.0});
  for (const auto& t : terms_) {
    const PauliAction a = decode(t.paulis);
    for (std::size_t x = 0; x < state.dim(); ++x) {
      out[x ^ a.flip] += t.coeff * phase_of(a, x) * state[x];
    }
  }
  return out;
}

double Hamiltonian::expectation(const PureState& state) const {
  const auto hpsi = apply(state);
  Complex s{0.0, 0.0};
  for (std::size_t x = 0; x < state.dim(); ++x) s += std::conj(state[x]) * hpsi[x];
  return s.real();
}

}  // namespace qglm::sim
