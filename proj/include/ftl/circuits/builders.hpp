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

#include <functional>
#include <span>

#include "ftl/core/circuit.hpp"
#include "ftl/core/dense_matrix.hpp"
#include "ftl/core/pauli.hpp"
#include "ftl/lattice/disorder.hpp"
#include "ftl/lattice/lattice.hpp"

namespace ftl {

// Circuit builders for one drive period. The half-period is fixed to 1, so
// couplings and fields enter the circuits unscaled.

/// exp(-i [(pi/2) sigma^x + B . sigma]) as a 2x2 matrix.
DenseMatrix drive_single_qubit_unitary(const Vec3& field);

/// One U3 per qubit realizing exp(-i H_1).
Circuit build_u1_circuit(const Lattice& lattice, const DisorderRealization& realization);

/// Appends a circuit for exp(i angle Z...Z) on `qubits` (2 or 4 entries)
/// using a CNOT parity ladder expanded into H and CZ. For four qubits the
/// order is (top-left, top-right, bottom-left, bottom-right) so that every
/// CZ acts on lattice neighbours.
void append_zstring_evolution(Circuit& circuit, std::span<const int> qubits, double angle);

/// exp(i angle P_p) where P_p carries sigma^z on the plaquette qubits,
/// regardless of the plaquette type.
Circuit build_plaquette_evolution(const Plaquette& plaquette, double angle, int num_qubits);

/// exp(-i H_2) = prod_p exp(i alpha_p A_p) prod_q exp(i beta_q B_q), emitted
/// group by group. X-type terms are Hadamard-conjugated Z evolutions.
Circuit build_u2_circuit(const Lattice& lattice, const DisorderRealization& realization);

/// U_F = U_2 U_1 (U_1 gates first).
Circuit build_floquet_circuit(const Lattice& lattice, const DisorderRealization& realization);

/// Prepares prod_q (1 + B_q)(1 + X_L) |0...0>, normalized, with X_L on row 1.
/// Uses H and CNOT only. Throws std::runtime_error if some X plaquette has
/// no untouched qubit left to act as the fan-out control.
Circuit build_eigenstate_circuit(const Lattice& lattice);

/// Orientation of the coupler between two lattice neighbours: 0 for a
/// horizontal (same row) pair, 1 for a vertical pair.
std::function<int(int, int)> coupler_orientation(const Lattice& lattice);

/// Dense exp(i angle P) for a Pauli string, test oracle.
DenseMatrix pauli_evolution_matrix(const PauliString& p, double angle);

}  // namespace ftl
