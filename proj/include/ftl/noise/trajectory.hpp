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

#include "ftl/circuits/compile.hpp"
#include "ftl/core/rng.hpp"
#include "ftl/core/state_vector.hpp"
#include "ftl/noise/noise_model.hpp"

namespace ftl {

/// Per-layer error probabilities resolved from a model once, so the inner
/// loop does no transcendental work.
struct LayerNoise {
  DecoherenceProbabilities sq;
  DecoherenceProbabilities cz;
  DepolarizingRates rates;

  static LayerNoise from_model(const NoiseModel& model);
};

/// Runs a layered circuit on `state` with stochastic errors inserted after
/// every non-empty layer: decoherence on every qubit for the layer
/// duration, then depolarizing on the gate qubits (and on idle qubits of a
/// CZ layer). Empty layers take no time and add no noise.
void apply_noisy_circuit(StateVector& state, const CompiledCircuit& compiled, const LayerNoise& noise,
                         CounterRng& rng);

/// One trajectory from |0...0>. Throws std::logic_error if the model is
/// disabled.
StateVector run_noisy_trajectory(const CompiledCircuit& compiled, const NoiseModel& model, CounterRng& rng);

}  // namespace ftl
