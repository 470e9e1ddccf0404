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

#include "qglm/circuits/serialize.hpp"

#include <string>

#include "qglm/error.hpp"

namespace qglm::circuits {

using nlohmann::json;

json to_json(const ParamCircuit& circuit) {
  json gates = json::array();
  for (const auto& g : circuit.gates()) {
    json b;
    switch (g.binding.kind) {
      case Binding::Kind::Fixed:
        b = {{"type", "fixed"}, {"value", g.binding.value}};
        break;
      case Binding::Kind::Trainable:
        b = {{"type", "trainable"}, {"slot", g.binding.index}};
        break;
      case Binding::Kind::Input:
        b = {{"type", "input"}, {"feature", g.binding.index}};
        break;
    }
    json gate = {{"kind", std::string(sim::to_string(g.kind))},
                 {"qubits", g.qubits},
                 {"binding", b}};
    if (g.kind == GateKind::ExpDiagonal) {
      json terms = json::array();
      for (const auto& t : g.terms) {
        terms.push_back({{"coeff", t.coeff}, {"qubits", t.qubits}});
      }
      gate["terms"] = std::move(terms);
    }
    gates.push_back(std::move(gate));
  }
  return {{"n_qubits", circuit.n_qubits()},
          {"gates", std::move(gates)},
          {"counts",
           {{"n_trainable", circuit.n_trainable()},
            {"n_encoding", circuit.n_encoding()},
            {"max_locality", circuit.max_locality()},
            {"n_gates", circuit.n_gates()}}}};
}

ParamCircuit circuit_from_json(const json& doc) {
  try {
    std::vector<GateOp> gates;
    for (const auto& g : doc.at("gates")) {
      GateOp op;
      op.kind = sim::gate_kind_from_string(g.at("kind").get<std::string>());
      op.qubits = g.at("qubits").get<std::vector<int>>();
      const auto& b = g.at("binding");
      const auto type = b.at("type").get<std::string>();
      if (type == "fixed") {
        op.binding = Binding::fixed(b.at("value").get<double>());
      } else if (type == "trainable") {
        op.binding = Binding::trainable(b.at("slot").get<int>());
      } else if (type == "input") {
        op.binding = Binding::input(b.at("feature").get<int>());
      } else {
        throw ArgumentError("unknown binding type '" + type + "'");
      }
      if (g.contains("terms")) {
        for (const auto& t : g.at("terms")) {
          op.terms.push_back(
              {t.at("coeff").get<double>(), t.at("qubits").get<std::vector<int>>()});
        }
      }
      gates.push_back(std::move(op));
    }
    return ParamCircuit(doc.at("n_qubits").get<int>(), std::move(gates));
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("malformed circuit document: ") + e.what());
  }
}

}  // namespace qglm::circuits
