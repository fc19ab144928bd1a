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
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "ftl/core/dense_matrix.hpp"
#include "ftl/core/state_vector.hpp"
#include "ftl/lattice/lattice.hpp"

namespace ftl {

/// -tr(rho ln rho) in nats. Eigenvalues below 1e-12 are dropped; throws
/// std::invalid_argument for an eigenvalue below -1e-8.
double von_neumann_entropy(const DenseMatrix& rho);

struct TeeRegions {
  std::vector<int> a, b, c;
};

struct TeeResult {
  double s_a = 0, s_b = 0, s_c = 0, s_ab = 0, s_ac = 0, s_bc = 0, s_abc = 0;
  double s_topo = 0;
  static constexpr double expected = -std::numbers::ln2;
};

/// Reduced density matrix of the listed qubits, in the order given.
using ReducedDensity = std::function<DenseMatrix(std::span<const int>)>;

/// S_A + S_B + S_C - S_AB - S_BC - S_AC + S_ABC. Throws
/// std::invalid_argument for empty or overlapping regions, or more than 12
/// qubits in total.
TeeResult topo_entropy(const ReducedDensity& rdm, const TeeRegions& regions);
TeeResult topo_entropy(const StateVector& state, const TeeRegions& regions);

/// Region divisions on the 3x6 lattice: "four" (four qubits) or "six".
/// Throws std::invalid_argument for other lattices or names.
TeeRegions default_tee_regions(const Lattice& lattice, const std::string& division);

/// tr sqrt(sqrt(rho) sigma sqrt(rho)).
double uhlmann_fidelity(const DenseMatrix& rho, const DenseMatrix& sigma);

}  // namespace ftl
