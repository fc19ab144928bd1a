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


#include "ftl/noise/channels.hpp"

#include <stdexcept>

namespace ftl {

void apply_pauli_index(StateVector& state, int qubit, int pauli) {
  if (qubit < 0 || qubit >= state.num_qubits()) throw std::out_of_range("apply_pauli_index: qubit out of range");
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  auto a = state.amplitudes();
  switch (pauli) {
    case 0: return;
    case 1:
      for (std::uint64_t i = 0; i < a.size(); ++i)
        if (!(i & bit)) std::swap(a[i], a[i | bit]);
      return;
    case 2: {
      const cplx im{0.0, 1.0};
      for (std::uint64_t i = 0; i < a.size(); ++i) {
        if (i & bit) continue;
        // Y|0> = i|1>, Y|1> = -i|0>
        const cplx a0 = a[i], a1 = a[i | bit];
        a[i] = -im * a1;
        a[i | bit] = im * a0;
      }
      return;
    }
    case 3:
      for (std::uint64_t i = 0; i < a.size(); ++i)
        if (i & bit) a[i] = -a[i];
      return;
    default: throw std::invalid_argument("apply_pauli_index: index must be 0..3");
  }
}

void reset_qubit(StateVector& state, int qubit, CounterRng& rng) {
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  auto a = state.amplitudes();
  double p1 = 0.0;
  for (std::uint64_t i = 0; i < a.size(); ++i)
    if (i & bit) p1 += std::norm(a[i]);
  const double total = state.norm();
  const bool one = rng.uniform() * total * total < p1;
  // Keep the chosen branch, move it to the |0> side and renormalize.
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    if (i & bit) continue;
    if (one) a[i] = a[i | bit];
    a[i | bit] = 0.0;
  }
  if (state.norm() == 0.0) {
    // Degenerate rounding case: the chosen branch was empty.
    a[0] = 1.0;
  }
  state.normalize();
}

void apply_stochastic_decoherence(StateVector& state, int qubit, const DecoherenceProbabilities& p, CounterRng& rng) {
  const double u = rng.uniform();
  if (u < p.p0) {
    reset_qubit(state, qubit, rng);
  } else if (u < p.p0 + p.p1) {
    apply_pauli_index(state, qubit, 3);
  }
}

int apply_stochastic_depolarizing(StateVector& state, std::span<const int> qubits, double e_p, CounterRng& rng) {
  if (qubits.size() != 1 && qubits.size() != 2)
    throw std::invalid_argument("apply_stochastic_depolarizing: 1 or 2 qubits expected");
  if (!(e_p >= 0.0 && e_p <= 1.0)) throw std::invalid_argument("apply_stochastic_depolarizing: e_p outside [0, 1]");
  if (rng.uniform() >= e_p) return 0;
  if (qubits.size() == 1) {
    const int p = 1 + static_cast<int>(rng.below(3));
    apply_pauli_index(state, qubits[0], p);
    return p;
  }
  const int p = 1 + static_cast<int>(rng.below(15));
  apply_pauli_index(state, qubits[0], p / 4);
  apply_pauli_index(state, qubits[1], p % 4);
  return p;
}

}  // namespace ftl
