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

#include "qglm/sim/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qglm/error.hpp"

namespace qglm::sim {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::H: return "H";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CRY: return "CRY";
    case GateKind::ExpDiagonal: return "EXP_DIAG";
  }
  return "?";
}

GateKind gate_kind_from_string(std::string_view name) {
  for (GateKind k : {GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::H,
                     GateKind::CNOT, GateKind::CRY, GateKind::ExpDiagonal}) {
    if (to_string(k) == name) return k;
  }
  throw ArgumentError("unknown gate kind '" + std::string(name) + "'");
}

int gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::H:
      return 1;
    case GateKind::CNOT:
    case GateKind::CRY:
      return 2;
    case GateKind::ExpDiagonal:
      return 0;
  }
  return 0;
}

bool is_parameterized(GateKind kind) {
  return kind != GateKind::H && kind != GateKind::CNOT;
}

void validate_gate(const Gate& gate, int n_qubits) {
  const int arity = gate_arity(gate.kind);
  if (arity > 0 && static_cast<int>(gate.qubits.size()) != arity) {
    throw StructuralError(std::string(to_string(gate.kind)) + " expects " +
                          std::to_string(arity) + " qubit(s)");
  }
  if (gate.qubits.empty()) {
    throw StructuralError("gate has no qubits");
  }
  for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
    const int q = gate.qubits[i];
    if (q < 0 || q >= n_qubits) {
      throw StructuralError("qubit index " + std::to_string(q) +
                            " out of range for " + std::to_string(n_qubits) +
                            " qubits");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (gate.qubits[j] == q) {
        throw StructuralError("duplicate qubit " + std::to_string(q) +
                              " in " + std::string(to_string(gate.kind)));
      }
    }
  }
  if (gate.kind == GateKind::ExpDiagonal) {
    for (const ZTerm& term : gate.terms) {
      for (int q : term.qubits) {
        if (std::find(gate.qubits.begin(), gate.qubits.end(), q) ==
            gate.qubits.end()) {
          throw StructuralError("diagonal term acts on qubit " +
                                std::to_string(q) + " outside the gate");
        }
      }
    }
  }
}

PureState::PureState(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 30) {
    throw ArgumentError("n_qubits must be in [1, 30]");
  }
  amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
  amps_[0] = 1.0;
}

PureState PureState::basis(int n_qubits, std::size_t index) {
  PureState s(n_qubits);
  if (index >= s.dim()) throw ArgumentError("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

PureState PureState::from_amplitudes(std::vector<Complex> amplitudes,
                                     double tol) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw ArgumentError("amplitude vector length must be a power of two >= 2");
  }
  double norm = 0.0;
  for (const Complex& a : amplitudes) norm += std::norm(a);
  if (std::abs(norm - 1.0) > tol) {
    throw ArgumentError("amplitudes are not normalized (norm^2 = " +
                        std::to_string(norm) + ")");
  }
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return PureState(n, std::move(amplitudes));
}

double PureState::norm_squared() const {
  double s = 0.0;
  for (const Complex& a : amps_) s += std::norm(a);
  return s;
}

void PureState::apply_single(int qubit, const std::array<Complex, 4>& m) {
  const std::size_t mask = qubit_mask(n_qubits_, qubit);
  const std::size_t dim = amps_.size();
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & mask) continue;
    const Complex a0 = amps_[i];
    const Complex a1 = amps_[i | mask];
    amps_[i] = m[0] * a0 + m[1] * a1;
    amps_[i | mask] = m[2] * a0 + m[3] * a1;
  }
}

void PureState::apply_controlled(int control, int target,
                                 const std::array<Complex, 4>& m) {
  const std::size_t cmask = qubit_mask(n_qubits_, control);
  const std::size_t tmask = qubit_mask(n_qubits_, target);
  const std::size_t dim = amps_.size();
  for (std::size_t i = 0; i < dim; ++i) {
    if (!(i & cmask) || (i & tmask)) continue;
    const Complex a0 = amps_[i];
    const Complex a1 = amps_[i | tmask];
    amps_[i] = m[0] * a0 + m[1] * a1;
    amps_[i | tmask] = m[2] * a0 + m[3] * a1;
  }
}

void PureState::apply_cnot(int control, int target) {
  const std::size_t cmask = qubit_mask(n_qubits_, control);
  const std::size_t tmask = qubit_mask(n_qubits_, target);
  const std::size_t dim = amps_.size();
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & cmask) && !(i & tmask)) std::swap(amps_[i], amps_[i | tmask]);
  }
}

void PureState::apply_z_phase(double angle, std::span<const ZTerm> terms) {
  std::vector<std::size_t> masks;
  masks.reserve(terms.size());
  for (const ZTerm& t : terms) {
    std::size_t m = 0;
    for (int q : t.qubits) m |= qubit_mask(n_qubits_, q);
    masks.push_back(m);
  }
  const std::size_t dim = amps_.size();
  for (std::size_t i = 0; i < dim; ++i) {
    double energy = 0.0;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const bool odd = std::popcount(i & masks[k]) & 1;
      energy += odd ? -terms[k].coeff : terms[k].coeff;
    }
    amps_[i] *= std::polar(1.0, -angle * energy);
  }
}

std::array<Complex, 4> single_qubit_matrix(GateKind kind, double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  const Complex i{0.0, 1.0};
  switch (kind) {
    case GateKind::RX:
      return {c, -i * s, -i * s, c};
    case GateKind::RY:
      return {c, -s, s, c};
    case GateKind::RZ:
      return {std::polar(1.0, -angle / 2.0), 0.0, 0.0,
              std::polar(1.0, angle / 2.0)};
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      return {r, r, r, -r};
    }
    default:
      throw ArgumentError(std::string(to_string(kind)) +
                          " is not a single-qubit gate");
  }
}

void PureState::apply(const Gate& gate) {
  validate_gate(gate, n_qubits_);
  switch (gate.kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::H:
      apply_single(gate.qubits[0], single_qubit_matrix(gate.kind, gate.angle));
      break;
    case GateKind::CNOT:
      apply_cnot(gate.qubits[0], gate.qubits[1]);
      break;
    case GateKind::CRY:
      apply_controlled(gate.qubits[0], gate.qubits[1],
                       single_qubit_matrix(GateKind::RY, gate.angle));
      break;
    case GateKind::ExpDiagonal:
      apply_z_phase(gate.angle, gate.terms);
      break;
  }
}

PureState apply_gate(PureState state, const Gate& gate) {
  state.apply(gate);
  return state;
}

Complex inner_product(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) {
    throw ArgumentError("inner product of states with different dimensions");
  }
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

}  // namespace qglm::sim
