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

#include "qglm/circuits/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qglm/error.hpp"

namespace qglm::circuits {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void check_contiguous(std::vector<int> ids, const char* what) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] != static_cast<int>(i)) {
      throw StructuralError(std::string(what) +
                            " indices must form a contiguous range from 0");
    }
  }
}

double resolve_angle(const GateOp& g, std::span<const double> theta,
                     std::span<const double> z) {
  switch (g.binding.kind) {
    case Binding::Kind::Fixed:
      return g.binding.value;
    case Binding::Kind::Trainable:
      return theta[static_cast<std::size_t>(g.binding.index)];
    case Binding::Kind::Input:
      return z[static_cast<std::size_t>(g.binding.index)];
  }
  return 0.0;
}

void apply_op(sim::PureState& state, const GateOp& g, double angle) {
  switch (g.kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::H:
      state.apply_single(g.qubits[0], sim::single_qubit_matrix(g.kind, angle));
      break;
    case GateKind::CNOT:
      state.apply_cnot(g.qubits[0], g.qubits[1]);
      break;
    case GateKind::CRY:
      state.apply_controlled(g.qubits[0], g.qubits[1],
                             sim::single_qubit_matrix(GateKind::RY, angle));
      break;
    case GateKind::ExpDiagonal:
      state.apply_z_phase(angle, g.terms);
      break;
  }
}

}  // namespace

ParamCircuit::ParamCircuit(int n_qubits, std::vector<GateOp> gates)
    : n_qubits_(n_qubits), gates_(std::move(gates)) {
  if (n_qubits < 1) throw StructuralError("circuit needs >= 1 qubit");
  std::vector<int> slots;
  std::vector<int> features;
  for (const GateOp& g : gates_) {
    sim::validate_gate(sim::Gate{g.kind, g.qubits, 0.0, g.terms}, n_qubits);
    if (!sim::is_parameterized(g.kind) &&
        g.binding.kind != Binding::Kind::Fixed) {
      throw StructuralError(std::string(sim::to_string(g.kind)) +
                            " has no angle to bind");
    }
    switch (g.binding.kind) {
      case Binding::Kind::Trainable:
        if (g.binding.index < 0) throw StructuralError("negative slot index");
        slots.push_back(g.binding.index);
        break;
      case Binding::Kind::Input:
        if (g.binding.index < 0) throw StructuralError("negative feature index");
        features.push_back(g.binding.index);
        ++n_encoding_;
        break;
      case Binding::Kind::Fixed:
        break;
    }
    max_locality_ = std::max(max_locality_, static_cast<int>(g.qubits.size()));
  }
  check_contiguous(slots, "trainable slot");
  check_contiguous(features, "input feature");
  n_trainable_ = slots.empty() ? 0 : *std::max_element(slots.begin(), slots.end()) + 1;
  n_features_ =
      features.empty() ? 0 : *std::max_element(features.begin(), features.end()) + 1;
}

void run(sim::PureState& state, const ParamCircuit& circuit,
         std::span<const double> theta, std::span<const double> z,
         const Perturbation* perturbation) {
  if (state.n_qubits() != circuit.n_qubits()) {
    throw ArgumentError("state and circuit qubit counts differ");
  }
  if (theta.size() != static_cast<std::size_t>(circuit.n_trainable())) {
    throw ArgumentError("theta has length " + std::to_string(theta.size()) +
                        ", circuit has " +
                        std::to_string(circuit.n_trainable()) +
                        " trainable slots");
  }
  if (z.size() < static_cast<std::size_t>(circuit.n_features())) {
    throw ArgumentError("z has length " + std::to_string(z.size()) +
                        ", circuit reads " +
                        std::to_string(circuit.n_features()) + " features");
  }
  const auto& gates = circuit.gates();
  if (perturbation && perturbation->gate_index >= gates.size()) {
    throw ArgumentError("perturbation gate index out of range");
  }
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const GateOp& g = gates[i];
    double angle = resolve_angle(g, theta, z);
    const bool hit = perturbation && perturbation->gate_index == i;
    if (hit && perturbation->term < 0) angle += perturbation->delta;
    apply_op(state, g, angle);
    if (hit && perturbation->term >= 0) {
      const auto t = static_cast<std::size_t>(perturbation->term);
      if (g.kind != GateKind::ExpDiagonal || t >= g.terms.size()) {
        throw ArgumentError("term perturbation needs an ExpDiagonal term");
      }
      const sim::ZTerm unit{1.0, g.terms[t].qubits};
      state.apply_z_phase(perturbation->delta / 2.0,
                          std::span<const sim::ZTerm>(&unit, 1));
    }
  }
}

sim::PureState bind(const ParamCircuit& circuit, std::span<const double> theta,
                    std::span<const double> z) {
  sim::PureState state(circuit.n_qubits());
  run(state, circuit, theta, z);
  return state;
}

sim::PureState bind_chain(const ParamCircuit& encoder,
                          const ParamCircuit& generator,
                          std::span<const double> theta,
                          std::span<const double> z,
                          const Perturbation* perturbation) {
  if (encoder.n_qubits() != generator.n_qubits()) {
    throw ArgumentError("encoder and generator qubit counts differ");
  }
  if (encoder.n_trainable() != 0) {
    throw ArgumentError("encoder must not have trainable slots");
  }
  sim::PureState state(encoder.n_qubits());
  run(state, encoder, {}, z);
  run(state, generator, theta, {}, perturbation);
  return state;
}

std::vector<ShiftTerm> shift_rule(const ParamCircuit& circuit,
                                  std::size_t gate_index) {
  const GateOp& g = circuit.gates().at(gate_index);
  switch (g.kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
      return {{0.5, {gate_index, kHalfPi, -1}},
              {-0.5, {gate_index, -kHalfPi, -1}}};
    case GateKind::CRY: {
      const double r2 = std::numbers::sqrt2;
      const double d1 = (r2 + 1.0) / (4.0 * r2);
      const double d2 = (r2 - 1.0) / (4.0 * r2);
      return {{d1, {gate_index, kHalfPi, -1}},
              {-d1, {gate_index, -kHalfPi, -1}},
              {-d2, {gate_index, 3.0 * kHalfPi, -1}},
              {d2, {gate_index, -3.0 * kHalfPi, -1}}};
    }
    case GateKind::ExpDiagonal: {
      // exp(-i t sum c_k Z_k) = prod_k exp(-i (2 t c_k) Z_k / 2).
      std::vector<ShiftTerm> out;
      for (std::size_t k = 0; k < g.terms.size(); ++k) {
        const double c = g.terms[k].coeff;
        if (c == 0.0 || g.terms[k].qubits.empty()) continue;
        const int term = static_cast<int>(k);
        out.push_back({c, {gate_index, kHalfPi, term}});
        out.push_back({-c, {gate_index, -kHalfPi, term}});
      }
      return out;
    }
    case GateKind::H:
    case GateKind::CNOT:
      break;
  }
  throw CapabilityError(std::string(sim::to_string(g.kind)) +
                        " has no parameter-shift rule");
}

std::vector<ShiftTerm> slot_shift_terms(const ParamCircuit& circuit, int slot) {
  std::vector<ShiftTerm> out;
  const auto& gates = circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (gates[i].binding.kind == Binding::Kind::Trainable &&
        gates[i].binding.index == slot) {
      auto rule = shift_rule(circuit, i);
      out.insert(out.end(), rule.begin(), rule.end());
    }
  }
  return out;
}

std::vector<double> measure_output(const sim::PureState& state,
                                   OutputMode mode) {
  const std::size_t dim = state.dim();
  if (mode == OutputMode::ProbVector) {
    std::vector<double> p(dim);
    for (std::size_t x = 0; x < dim; ++x) p[x] = std::norm(state[x]);
    return p;
  }
  const int n = state.n_qubits();
  std::vector<double> z(static_cast<std::size_t>(n), 0.0);
  for (std::size_t x = 0; x < dim; ++x) {
    const double p = std::norm(state[x]);
    for (int q = 0; q < n; ++q) {
      z[static_cast<std::size_t>(q)] += (x & sim::qubit_mask(n, q)) ? -p : p;
    }
  }
  return z;
}

std::vector<double> generator_output(const ParamCircuit& encoder,
                                     const ParamCircuit& generator,
                                     std::span<const double> theta,
                                     std::span<const double> z,
                                     OutputMode mode) {
  return measure_output(bind_chain(encoder, generator, theta, z), mode);
}

}  // namespace qglm::circuits
