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

#include <cstddef>
#include <span>
#include <vector>

#include "qglm/sim/state.hpp"

namespace qglm::circuits {

using sim::GateKind;

/// Where a gate's angle comes from.
struct Binding {
  enum class Kind { Fixed, Trainable, Input };

  Kind kind = Kind::Fixed;
  double value = 0.0;  // Fixed
  int index = -1;      // Trainable slot or Input feature

  static Binding fixed(double radians) { return {Kind::Fixed, radians, -1}; }
  static Binding trainable(int slot) { return {Kind::Trainable, 0.0, slot}; }
  static Binding input(int feature) { return {Kind::Input, 0.0, feature}; }

  bool operator==(const Binding&) const = default;
};

struct GateOp {
  GateKind kind = GateKind::H;
  std::vector<int> qubits;
  Binding binding;
  std::vector<sim::ZTerm> terms;  // ExpDiagonal only

  bool operator==(const GateOp&) const = default;
};

/// Immutable gate list with structural counts.
///
/// Invariants (checked on construction): every gate is valid on
/// `n_qubits`; trainable slots and input features each cover 0..K-1 with
/// no gaps; H and CNOT carry Fixed bindings.
class ParamCircuit {
 public:
  ParamCircuit(int n_qubits, std::vector<GateOp> gates);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<GateOp>& gates() const noexcept { return gates_; }

  /// N_gt: number of distinct trainable slots.
  int n_trainable() const noexcept { return n_trainable_; }
  /// N_ge: number of Input-bound gates.
  int n_encoding() const noexcept { return n_encoding_; }
  /// Number of distinct input features referenced.
  int n_features() const noexcept { return n_features_; }
  /// k: largest gate arity.
  int max_locality() const noexcept { return max_locality_; }
  /// N_g: gate count.
  int n_gates() const noexcept { return static_cast<int>(gates_.size()); }

  bool operator==(const ParamCircuit&) const = default;

 private:
  int n_qubits_;
  std::vector<GateOp> gates_;
  int n_trainable_ = 0;
  int n_encoding_ = 0;
  int n_features_ = 0;
  int max_locality_ = 0;
};

/// A single gate modification used by parameter-shift rules. With
/// `term < 0` the gate's angle is offset by `delta`; otherwise (ExpDiagonal
/// only) exp(-i delta/2 Z_S) for term S is applied right after the gate.
struct Perturbation {
  std::size_t gate_index = 0;
  double delta = 0.0;
  int term = -1;
};

/// Applies `circuit` to `state` in place.
void run(sim::PureState& state, const ParamCircuit& circuit,
         std::span<const double> theta, std::span<const double> z = {},
         const Perturbation* perturbation = nullptr);

/// circuit(theta, z)|0...0>. Throws ArgumentError on length mismatches.
sim::PureState bind(const ParamCircuit& circuit, std::span<const double> theta,
                    std::span<const double> z = {});

/// generator(theta) encoder(z)|0...0>. The perturbation, if any, applies
/// to the generator.
sim::PureState bind_chain(const ParamCircuit& encoder,
                          const ParamCircuit& generator,
                          std::span<const double> theta,
                          std::span<const double> z,
                          const Perturbation* perturbation = nullptr);

/// One evaluation in a parameter-shift rule: d/dslot f = sum coeff * f(perturbed).
struct ShiftTerm {
  double coeff = 0.0;
  Perturbation perturbation;
};

/// Exact shift rule for the gate at `gate_index`:
///   RX/RY/RZ: +-pi/2 with weights +-1/2;
///   CRY: four-term rule at +-pi/2 and +-3pi/2 (generator spectrum {0, +-1/2});
///   ExpDiagonal: one +-pi/2 pair per Z term, weighted by its coefficient.
/// Throws CapabilityError for non-parameterized gates.
std::vector<ShiftTerm> shift_rule(const ParamCircuit& circuit,
                                  std::size_t gate_index);

/// Concatenated shift rules of every gate bound to trainable `slot`.
std::vector<ShiftTerm> slot_shift_terms(const ParamCircuit& circuit, int slot);

enum class OutputMode { ProbVector, ZExpectation };

/// Per-qubit <Z_i> (length n) or the Born vector (length 2^n).
std::vector<double> measure_output(const sim::PureState& state, OutputMode mode);

/// Generator map x = G_theta(z) on top of an encoder.
std::vector<double> generator_output(const ParamCircuit& encoder,
                                     const ParamCircuit& generator,
                                     std::span<const double> theta,
                                     std::span<const double> z,
                                     OutputMode mode);

}  // namespace qglm::circuits
