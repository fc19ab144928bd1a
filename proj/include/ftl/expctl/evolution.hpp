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
#include <string>
#include <utility>
#include <vector>

#include "ftl/circuits/compile.hpp"
#include "ftl/core/dense_matrix.hpp"
#include "ftl/core/pauli.hpp"
#include "ftl/core/state_vector.hpp"
#include "ftl/lattice/disorder.hpp"
#include "ftl/lattice/lattice.hpp"
#include "ftl/noise/noise_model.hpp"
#include "ftl/noise/trajectory.hpp"

namespace ftl {

/// Disorder seed of realization r under a master seed.
std::uint64_t realization_seed(std::uint64_t master_seed, std::uint64_t r);

/// Exact one-period evolution applied directly to the state: one 2x2 matrix
/// per qubit, then one Pauli-string rotation per plaquette in group order.
/// Matches build_floquet_circuit to rounding.
class FloquetKernel {
 public:
  FloquetKernel(const Lattice& lattice, const DisorderRealization& realization);
  void step(StateVector& state) const;

 private:
  std::vector<DenseMatrix> drive_;
  std::vector<std::pair<PauliString, double>> terms_;
};

struct Observable {
  std::string label;
  PauliString op;
};

/// Expands observable specs. Accepted tokens: ZL, XL (all logical strings),
/// ZL<i>, XL<i> (1-based), sz (every qubit), sz<k>, all. Throws
/// std::invalid_argument for anything else.
std::vector<Observable> make_observables(const Lattice& lattice, const std::vector<std::string>& specs);

/// +1 or -1 for a diagonal string on a z-basis product state, 0 otherwise.
int initial_sign(const PauliString& op, std::uint64_t bits);

/// values[o][n] = <O(nT)>, n = 0..periods.
using ObservableSeries = std::vector<std::vector<double>>;

ObservableSeries evolve_noiseless(const Lattice& lattice, const DisorderRealization& realization,
                                  const std::vector<Observable>& observables, int periods);

/// One period compiled into hardware layers.
CompiledCircuit compile_floquet_period(const Lattice& lattice, const DisorderRealization& realization,
                                       const NoiseModel& model, bool dynamical_decoupling);

/// Trajectory-averaged expectations. Trajectory t of realization r draws
/// from trajectory_rng(master_seed, r, t).
ObservableSeries evolve_noisy(const Lattice& lattice, const DisorderRealization& realization,
                              const std::vector<Observable>& observables, int periods, const NoiseModel& model,
                              int trajectories, std::uint64_t master_seed, std::uint64_t realization_index,
                              bool dynamical_decoupling);

}  // namespace ftl
