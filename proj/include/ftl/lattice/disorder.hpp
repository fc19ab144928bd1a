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

#include <array>
#include <cstdint>
#include <vector>

#include "ftl/lattice/lattice.hpp"

namespace ftl {

using Vec3 = std::array<double, 3>;

/// One draw of the random couplings, on-site fields and initial bitstring.
struct DisorderRealization {
  /// Coupling per plaquette, aligned with Lattice::plaquettes(): alpha_p for
  /// Z-type terms, beta_q for X-type terms. Each in [0, 2 pi).
  std::vector<double> coupling;
  /// On-site field B_k per qubit, |B_k| <= b_radius.
  std::vector<Vec3> field;
  double b_radius = 0.0;
  /// Initial z-basis product state; bit k is qubit k.
  std::uint64_t initial_bits = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const DisorderRealization&, const DisorderRealization&) = default;
};

/// Uniform point in the solid ball of the given radius (rejection from the cube).
template <class Rng>
Vec3 sample_ball(Rng& rng, double radius) {
  if (radius == 0.0) return {0.0, 0.0, 0.0};
  for (;;) {
    const Vec3 v{2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0};
    if (v[0] * v[0] + v[1] * v[1] + v[2] * v[2] <= 1.0) return {radius * v[0], radius * v[1], radius * v[2]};
  }
}

DisorderRealization sample_disorder(const Lattice& lattice, double b_radius, std::uint64_t seed);

/// Checks sizes and bounds against the lattice; throws on violation.
void validate_realization(const Lattice& lattice, const DisorderRealization& r);

}  // namespace ftl
