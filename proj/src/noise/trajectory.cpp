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


#include "ftl/noise/trajectory.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ftl/noise/channels.hpp"

namespace ftl {

LayerNoise LayerNoise::from_model(const NoiseModel& model) {
  LayerNoise n;
  n.rates = derive_depolarizing_rates(model);
  n.sq = decoherence_probabilities(model.sq_layer_ns, model.t1_us, model.t2());
  n.cz = decoherence_probabilities(model.cz_layer_ns, model.t1_us, model.t2());
  return n;
}

void apply_noisy_circuit(StateVector& state, const CompiledCircuit& compiled, const LayerNoise& noise,
                         CounterRng& rng) {
  const Circuit& c = compiled.circuit;
  if (!c.layered()) throw std::invalid_argument("apply_noisy_circuit: circuit must be compiled into layers");
  if (c.num_qubits() != state.num_qubits()) throw std::invalid_argument("apply_noisy_circuit: qubit count mismatch");
  const int n = c.num_qubits();
  std::vector<bool> busy(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < c.num_layers(); ++k) {
    const auto layer = c.layer(k);
    if (layer.empty()) continue;
    for (const auto& g : layer) apply_gate(state, g);

    const bool cz_layer = compiled.layer_kind(k) == LayerKind::CZ;
    const DecoherenceProbabilities& dec = cz_layer ? noise.cz : noise.sq;
    for (int q = 0; q < n; ++q) apply_stochastic_decoherence(state, q, dec, rng);

    std::fill(busy.begin(), busy.end(), false);
    for (const auto& g : layer) {
      busy[static_cast<std::size_t>(g.qubits[0])] = true;
      if (g.arity() == 2) {
        busy[static_cast<std::size_t>(g.qubits[1])] = true;
        apply_stochastic_depolarizing(state, std::span<const int>(g.qubits.data(), 2), noise.rates.cz, rng);
      } else {
        apply_stochastic_depolarizing(state, std::span<const int>(g.qubits.data(), 1), noise.rates.sq, rng);
      }
    }
    if (cz_layer) {
      for (int q = 0; q < n; ++q) {
        if (busy[static_cast<std::size_t>(q)]) continue;
        const int qs[1] = {q};
        apply_stochastic_depolarizing(state, qs, noise.rates.cz_idle, rng);
      }
    }
  }
}

StateVector run_noisy_trajectory(const CompiledCircuit& compiled, const NoiseModel& model, CounterRng& rng) {
  if (!model.enabled) throw std::logic_error("run_noisy_trajectory: noise model is disabled; use the noiseless path");
  StateVector s(compiled.circuit.num_qubits());
  apply_noisy_circuit(s, compiled, LayerNoise::from_model(model), rng);
  return s;
}

}  // namespace ftl
