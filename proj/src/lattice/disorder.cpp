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

#include "ftl/lattice/disorder.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ftl/core/rng.hpp"

namespace ftl {

DisorderRealization sample_disorder(const Lattice& lattice, double b_radius, std::uint64_t seed) {
  if (!(b_radius >= 0.0) || !std::isfinite(b_radius)) {
    throw std::invalid_argument("sample_disorder: b_radius must be finite and >= 0");
  }
  // Independent streams so that changing one draw count never shifts another.
  CounterRng coupling_rng(seed, 1);
  CounterRng field_rng(seed, 2);
  CounterRng bits_rng(seed, 3);

  DisorderRealization r;
  r.seed = seed;
  r.b_radius = b_radius;
  r.coupling.reserve(lattice.plaquettes().size());
  for (std::size_t p = 0; p < lattice.plaquettes().size(); ++p)
    r.coupling.push_back(2.0 * std::numbers::pi * coupling_rng.uniform());
  r.field.reserve(static_cast<std::size_t>(lattice.num_qubits()));
  for (int k = 0; k < lattice.num_qubits(); ++k) r.field.push_back(sample_ball(field_rng, b_radius));
  for (int k = 0; k < lattice.num_qubits(); ++k)
    if (bits_rng() >> 63) r.initial_bits |= std::uint64_t{1} << k;
  return r;
}

void validate_realization(const Lattice& lattice, const DisorderRealization& r) {
  if (r.coupling.size() != lattice.plaquettes().size() ||
      r.field.size() != static_cast<std::size_t>(lattice.num_qubits())) {
    throw std::invalid_argument("disorder realization does not match the lattice");
  }
  if (lattice.num_qubits() < 64 && (r.initial_bits >> lattice.num_qubits()) != 0) {
    throw std::invalid_argument("disorder realization: initial bitstring wider than the lattice");
  }
  for (const auto& b : r.field) {
    const double nrm = std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
    if (nrm > r.b_radius * (1.0 + 1e-12) + 1e-300) {
      throw std::invalid_argument("disorder realization: on-site field outside the ball");
    }
  }
}

}  // namespace ftl
