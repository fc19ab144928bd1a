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

#include <span>
#include <vector>

#include "ftl/core/dense_matrix.hpp"
#include "ftl/lattice/disorder.hpp"
#include "ftl/lattice/lattice.hpp"

namespace ftl {

/// Eigenphases of the dense one-period unitary, in (-pi, pi], sorted.
/// Throws std::invalid_argument above 8 qubits.
std::vector<double> floquet_eigenphases(const Lattice& lattice, const DisorderRealization& realization);

/// Dense H_2 = -sum alpha_p A_p - sum beta_q B_q (8 qubits at most).
DenseMatrix stabilizer_hamiltonian(const Lattice& lattice, const DisorderRealization& realization);

/// Largest distance, over all phases, from phase + pi to the nearest phase
/// (mod 2 pi). Zero when the spectrum splits into exact pi pairs.
double max_pi_pair_deviation(std::span<const double> phases);

}  // namespace ftl
