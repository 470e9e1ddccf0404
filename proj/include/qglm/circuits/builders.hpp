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

#include "qglm/circuits/circuit.hpp"
#include "qglm/sim/hamiltonian.hpp"

namespace qglm::circuits {

/// Encoder/generator pair for the QGAN families.
struct QganCircuits {
  ParamCircuit encoder;
  ParamCircuit generator;
};

/// QCBM ansatz: `depth` blocks of [RY on every qubit, CNOT ladder
/// i -> i+1], then a closing RY column. N_gt = n_qubits * (depth + 1).
ParamCircuit build_qcbm_ansatz(int n_qubits, int depth);

/// Hardware-efficient ansatz: per layer RZ, RY, RZ on each qubit (three
/// trainable slots) followed by a CNOT ring i -> (i+1) mod n, which gives
/// exactly n two-qubit gates per layer. N_gt = 3 * depth * n_qubits.
ParamCircuit build_hardware_efficient(int n_qubits, int depth);

/// QAOA ansatz: per layer exp(-i t H_C) with one trainable slot, then a
/// trainable RX on every qubit. `cost` must be diagonal (I/Z strings only),
/// otherwise CapabilityError. N_gt = depth * (n + 1), k = n.
ParamCircuit build_qaoa(int n_qubits, int depth, const sim::Hamiltonian& cost);

/// Three-qubit style-QGAN.
///
/// Encoder: on each qubit RY(z1) RZ(z2) RY(z2) RZ(z3) (features 0, 1, 1, 2;
/// z2 is bound twice), then CRY(z1) on 0->1 and CRY(z2) on 1->2.
/// Generator: `depth` layers of the same rotation pattern with a trainable
/// slot per gate, then two trainable CRY gates; odd layers (1-based) use
/// 0->1, 1->2 and even layers the mirrored 2->1, 1->0.
QganCircuits build_style_qgan(int depth);

/// Two-qubit encoder/generator used for ground-state learning of the XXZ
/// chain. Encoder: RY(a) RZ(a) on both qubits, then CNOT 0->1 (4 gates
/// bound to feature 0). Generator: `depth` blocks of trainable RY, RZ on
/// each qubit followed by CNOT 0->1 (4 slots per block).
QganCircuits build_xxz_phl(int depth);

}  // namespace qglm::circuits
