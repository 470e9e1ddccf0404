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

#include "json.hpp"
#include "qglm/circuits/circuit.hpp"

namespace qglm::circuits {

/// {"n_qubits": N, "gates": [{"kind": "RY", "qubits": [0],
///   "binding": {"type": "trainable", "slot": 0}}, ...],
///  "counts": {"n_trainable": ..., "n_encoding": ..., ...}}
/// ExpDiagonal gates also carry "terms": [{"coeff": c, "qubits": [...]}].
nlohmann::json to_json(const ParamCircuit& circuit);

/// Inverse of to_json; "counts" is ignored on input. Throws ArgumentError or
/// StructuralError on malformed documents.
ParamCircuit circuit_from_json(const nlohmann::json& doc);

}  // namespace qglm::circuits
