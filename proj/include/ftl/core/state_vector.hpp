// Copyright 2026 The ftl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ftl/core/circuit.hpp"
#include "ftl/core/dense_matrix.hpp"
#include "ftl/core/pauli.hpp"

namespace ftl {

inline constexpr int kMaxStateQubits = 24;

/// Normalized amplitudes over 2^N basis states. Bit k of the basis index is
/// qubit k (qubit 0 is the least significant bit).
class StateVector {
 public:
  StateVector() = default;
  /// |0...0>
  explicit StateVector(int num_qubits);

  static StateVector basis(int num_qubits, std::uint64_t index);
  static StateVector from_amplitudes(std::vector<cplx> amplitudes);

  int num_qubits() const { return n_; }
  std::size_t dim() const { return amp_.size(); }
  std::span<cplx> amplitudes() { return amp_; }
  std::span<const cplx> amplitudes() const { return amp_; }
  cplx operator[](std::size_t i) const { return amp_[i]; }

  double norm() const;
  void normalize();

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  int n_ = 0;
  std::vector<cplx> amp_;
};

/// In-place single-qubit matrix application.
void apply_1q(StateVector& state, int qubit, const DenseMatrix& m);
/// In-place two-qubit matrix; m indexes |b(q0) b(q1)> with q0 most significant.
void apply_2q(StateVector& state, int q0, int q1, const DenseMatrix& m);

void apply_gate(StateVector& state, const Gate& gate);
void apply_circuit(StateVector& state, const Circuit& circuit);

/// psi <- P psi.
void apply_pauli(StateVector& state, const PauliString& p);
/// psi <- exp(i angle P) psi, one pass over the amplitudes.
void apply_pauli_rotation(StateVector& state, const PauliString& p, double angle);

/// <psi|P|psi>, without building the operator.
double pauli_expectation(const StateVector& state, const PauliString& p);

/// <psi|Z_q|psi>
double z_expectation(const StateVector& state, int qubit);

/// Reduced density matrix on `keep` (at most 12 qubits). Row/column bit j
/// corresponds to keep[j].
DenseMatrix partial_trace(const StateVector& state, std::span<const int> keep);

/// Dense unitary of a circuit of at most 12 qubits.
DenseMatrix circuit_unitary(const Circuit& circuit);

/// <a|b>
cplx inner_product(const StateVector& a, const StateVector& b);

}  // namespace ftl
