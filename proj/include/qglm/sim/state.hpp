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

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace qglm::sim {

using Complex = std::complex<double>;

// Basis ordering: qubit 0 is the most significant bit of a basis index, so
// |q0 q1 ... q_{n-1}> has index q0*2^{n-1} + ... + q_{n-1}.
inline std::size_t qubit_mask(int n_qubits, int qubit) {
  return std::size_t{1} << (n_qubits - 1 - qubit);
}

enum class GateKind { RX, RY, RZ, H, CNOT, CRY, ExpDiagonal };

std::string_view to_string(GateKind kind);
GateKind gate_kind_from_string(std::string_view name);

/// Arity of a fixed-arity kind; 0 for ExpDiagonal (acts on its qubit list).
int gate_arity(GateKind kind);
bool is_parameterized(GateKind kind);

/// coeff * Z_{q1} Z_{q2} ... ; an empty qubit list is the identity.
struct ZTerm {
  double coeff = 0.0;
  std::vector<int> qubits;

  bool operator==(const ZTerm&) const = default;
};

/// A fully bound gate.
///
/// Conventions: RX/RY/RZ(t) = exp(-i t P / 2); CNOT and CRY take
/// qubits = {control, target} and CRY(t) applies RY(t) to the target when
/// the control is 1; ExpDiagonal(t) = exp(-i t sum_k c_k Z_{S_k}).
struct Gate {
  GateKind kind = GateKind::H;
  std::vector<int> qubits;
  double angle = 0.0;
  std::vector<ZTerm> terms;
};

/// Throws StructuralError on out-of-range or duplicate qubits and on arity
/// mismatches.
void validate_gate(const Gate& gate, int n_qubits);

class PureState {
 public:
  /// |0...0> on `n_qubits` qubits.
  explicit PureState(int n_qubits);

  static PureState basis(int n_qubits, std::size_t index);

  /// Throws ArgumentError unless the length is a power of two and the
  /// vector has unit norm within `tol`.
  static PureState from_amplitudes(std::vector<Complex> amplitudes,
                                   double tol = 1e-10);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  double norm_squared() const;

  /// In-place application. Validates the gate first.
  void apply(const Gate& gate);

  // Raw kernels used by the circuit executor; callers validate indices.
  void apply_single(int qubit, const std::array<Complex, 4>& m);
  void apply_controlled(int control, int target,
                        const std::array<Complex, 4>& m);
  void apply_cnot(int control, int target);
  void apply_z_phase(double angle, std::span<const ZTerm> terms);

 private:
  PureState(int n_qubits, std::vector<Complex> amps)
      : n_qubits_(n_qubits), amps_(std::move(amps)) {}

  int n_qubits_;
  std::vector<Complex> amps_;
};

/// Row-major 2x2 matrix of a single-qubit kind at `angle`.
std::array<Complex, 4> single_qubit_matrix(GateKind kind, double angle);

PureState apply_gate(PureState state, const Gate& gate);

/// <a|b>.
Complex inner_product(const PureState& a, const PureState& b);

}  // namespace qglm::sim
