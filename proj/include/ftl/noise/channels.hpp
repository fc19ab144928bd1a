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

#include "ftl/core/rng.hpp"
#include "ftl/core/state_vector.hpp"
#include "ftl/noise/noise_model.hpp"

namespace ftl {

/// Random stream of one trajectory, keyed by (master seed, realization,
/// trajectory).
inline CounterRng trajectory_rng(std::uint64_t master_seed, std::uint64_t realization, std::uint64_t trajectory) {
  return CounterRng(master_seed, realization, trajectory, 0x7a11);
}

/// Projective reset of one qubit to |0>: a Born-weighted measurement
/// followed by a flip when the outcome is 1.
void reset_qubit(StateVector& state, int qubit, CounterRng& rng);

/// With probability p0 reset the qubit, with probability p1 apply sigma^z,
/// otherwise leave it alone. Always consumes exactly one draw for the
/// branch choice (plus one for the measurement inside a reset).
void apply_stochastic_decoherence(StateVector& state, int qubit, const DecoherenceProbabilities& p, CounterRng& rng);

/// With probability e_p apply one of the 4^d - 1 non-identity Paulis on
/// the given qubits (d = 1 or 2), uniformly. Returns the Pauli index
/// applied (0 = none); for d = 2 the index is 4 * P(q0) + P(q1).
int apply_stochastic_depolarizing(StateVector& state, std::span<const int> qubits, double e_p, CounterRng& rng);

/// Applies a single-qubit Pauli by index: 1 = X, 2 = Y, 3 = Z.
void apply_pauli_index(StateVector& state, int qubit, int pauli);

}  // namespace ftl
