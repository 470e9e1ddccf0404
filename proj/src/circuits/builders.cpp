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

#include "qglm/circuits/builders.hpp"

#include <numeric>

#include "qglm/error.hpp"

namespace qglm::circuits {
namespace {

class Builder {
 public:
  explicit Builder(int n_qubits) : n_qubits_(n_qubits) {}

  void rot(GateKind kind, int q) {
    gates_.push_back({kind, {q}, Binding::trainable(next_slot_++), {}});
  }
  void rot_input(GateKind kind, int q, int feature) {
    gates_.push_back({kind, {q}, Binding::input(feature), {}});
  }
  void cnot(int c, int t) {
    gates_.push_back({GateKind::CNOT, {c, t}, Binding::fixed(0.0), {}});
  }
  void cry(int c, int t) {
    gates_.push_back({GateKind::CRY, {c, t}, Binding::trainable(next_slot_++), {}});
  }
  void cry_input(int c, int t, int feature) {
    gates_.push_back({GateKind::CRY, {c, t}, Binding::input(feature), {}});
  }
  void diagonal(std::vector<sim::ZTerm> terms) {
    std::vector<int> all(static_cast<std::size_t>(n_qubits_));
    std::iota(all.begin(), all.end(), 0);
    gates_.push_back({GateKind::ExpDiagonal, std::move(all),
                      Binding::trainable(next_slot_++), std::move(terms)});
  }

  ParamCircuit build() && { return ParamCircuit(n_qubits_, std::move(gates_)); }

 private:
  int n_qubits_;
  int next_slot_ = 0;
  std::vector<GateOp> gates_;
};

void require(bool ok, const char* message) {
  if (!ok) throw ArgumentError(message);
}

}  // namespace

ParamCircuit build_qcbm_ansatz(int n_qubits, int depth) {
  require(n_qubits >= 2, "QCBM ansatz needs n_qubits >= 2");
  require(depth >= 1, "QCBM ansatz needs depth >= 1");
  Builder b(n_qubits);
  for (int l = 0; l < depth; ++l) {
    for (int q = 0; q < n_qubits; ++q) b.rot(GateKind::RY, q);
    for (int q = 0; q + 1 < n_qubits; ++q) b.cnot(q, q + 1);
  }
  for (int q = 0; q < n_qubits; ++q) b.rot(GateKind::RY, q);
  return std::move(b).build();
}

ParamCircuit build_hardware_efficient(int n_qubits, int depth) {
  require(n_qubits >= 2, "hardware-efficient ansatz needs n_qubits >= 2");
  require(depth >= 1, "hardware-efficient ansatz needs depth >= 1");
  Builder b(n_qubits);
  for (int l = 0; l < depth; ++l) {
    for (int q = 0; q < n_qubits; ++q) {
      b.rot(GateKind::RZ, q);
      b.rot(GateKind::RY, q);
      b.rot(GateKind::RZ, q);
    }
    for (int q = 0; q < n_qubits; ++q) b.cnot(q, (q + 1) % n_qubits);
  }
  return std::move(b).build();
}

ParamCircuit build_qaoa(int n_qubits, int depth, const sim::Hamiltonian& cost) {
  require(n_qubits >= 2, "QAOA ansatz needs n_qubits >= 2");
  require(depth >= 1, "QAOA ansatz needs depth >= 1");
  require(cost.n_qubits() == n_qubits, "cost Hamiltonian qubit count differs");
  if (!cost.is_diagonal()) {
    throw CapabilityError("QAOA cost Hamiltonian must use only I/Z strings");
  }
  std::vector<sim::ZTerm> terms;
  for (const auto& t : cost.terms()) {
    sim::ZTerm z{t.coeff, {}};
    for (int q = 0; q < n_qubits; ++q) {
      if (t.paulis[static_cast<std::size_t>(q)] == 'Z') z.qubits.push_back(q);
    }
    terms.push_back(std::move(z));
  }
  Builder b(n_qubits);
  for (int l = 0; l < depth; ++l) {
    b.diagonal(terms);
    for (int q = 0; q < n_qubits; ++q) b.rot(GateKind::RX, q);
  }
  return std::move(b).build();
}

QganCircuits build_style_qgan(int depth) {
  require(depth >= 1, "style-QGAN needs depth >= 1");
  constexpr int kQubits = 3;
  Builder enc(kQubits);
  for (int q = 0; q < kQubits; ++q) {
    enc.rot_input(GateKind::RY, q, 0);
    enc.rot_input(GateKind::RZ, q, 1);
    enc.rot_input(GateKind::RY, q, 1);
    enc.rot_input(GateKind::RZ, q, 2);
  }
  enc.cry_input(0, 1, 0);
  enc.cry_input(1, 2, 1);

  Builder gen(kQubits);
  for (int l = 1; l <= depth; ++l) {
    for (int q = 0; q < kQubits; ++q) {
      gen.rot(GateKind::RY, q);
      gen.rot(GateKind::RZ, q);
      gen.rot(GateKind::RY, q);
      gen.rot(GateKind::RZ, q);
    }
    if (l % 2 == 1) {
      gen.cry(0, 1);
      gen.cry(1, 2);
    } else {
      gen.cry(2, 1);
      gen.cry(1, 0);
    }
  }
  return {std::move(enc).build(), std::move(gen).build()};
}

QganCircuits build_xxz_phl(int depth) {
  require(depth >= 1, "PHL generator needs depth >= 1");
  Builder enc(2);
  for (int q = 0; q < 2; ++q) {
    enc.rot_input(GateKind::RY, q, 0);
    enc.rot_input(GateKind::RZ, q, 0);
  }
  enc.cnot(0, 1);

  Builder gen(2);
  for (int l = 0; l < depth; ++l) {
    for (int q = 0; q < 2; ++q) {
      gen.rot(GateKind::RY, q);
      gen.rot(GateKind::RZ, q);
    }
    gen.cnot(0, 1);
  }
  return {std::move(enc).build(), std::move(gen).build()};
}

}  // namespace qglm::circuits
