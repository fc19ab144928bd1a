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

// Shared helpers for the unit tests: seeded random states, matrices and
// circuits used as inputs to brute-force oracles.

#include <cmath>
#include <numbers>
#include <vector>

#include "ftl/core/circuit.hpp"
#include "ftl/core/dense_matrix.hpp"
#include "ftl/core/rng.hpp"
#include "ftl/core/state_vector.hpp"

namespace ftl::testing {

inline cplx random_cplx(CounterRng& rng) {
  // Box-Muller pair
  const double u1 = 1.0 - rng.uniform();
  const double u2 = rng.uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  return {r * std::cos(2.0 * std::numbers::pi * u2), r * std::sin(2.0 * std::numbers::pi * u2)};
}

inline StateVector random_state(int n, std::uint64_t seed) {
  CounterRng rng(seed, 101);
  std::vector<cplx> a(std::size_t{1} << n);
  for (auto& x : a) x = random_cplx(rng);
  StateVector s = StateVector::from_amplitudes(std::move(a));
  s.normalize();
  return s;
}

inline DenseMatrix random_hermitian(std::size_t dim, std::uint64_t seed) {
  CounterRng rng(seed, 202);
  DenseMatrix m(dim, true);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = random_cplx(rng).real();
    for (std::size_t j = i + 1; j < dim; ++j) {
      m(i, j) = random_cplx(rng);
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

inline DenseMatrix random_unitary(std::size_t dim, std::uint64_t seed) {
  return hermitian_exp_i(random_hermitian(dim, seed), 1.0);
}

inline DenseMatrix random_density(std::size_t dim, std::uint64_t seed) {
  CounterRng rng(seed, 303);
  DenseMatrix a(dim);
  for (auto& x : a.data()) x = random_cplx(rng);
  DenseMatrix rho = a * a.adjoint();
  const cplx tr = rho.trace();
  rho *= 1.0 / tr.real();
  rho.set_hermitian_hint(true);
  return rho;
}

inline double random_angle(CounterRng& rng) { return (2.0 * rng.uniform() - 1.0) * std::numbers::pi; }

/// Random circuit over every gate kind the simulator understands.
inline Circuit random_circuit(int n, int gates, std::uint64_t seed) {
  CounterRng rng(seed, 404);
  Circuit c(n);
  for (int k = 0; k < gates; ++k) {
    const int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    int b = n > 1 ? static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1))) : 0;
    if (b >= a) ++b;
    switch (rng.below(n > 1 ? 8 : 5)) {
      case 0: c.add(Gate::rx(a, random_angle(rng))); break;
      case 1: c.add(Gate::ry(a, random_angle(rng))); break;
      case 2: c.add(Gate::rz(a, random_angle(rng))); break;
      case 3: c.add(Gate::h(a)); break;
      case 4: c.add(Gate::u3(a, random_angle(rng), random_angle(rng), random_angle(rng))); break;
      case 5: c.add(Gate::cz(a, b)); break;
      case 6: c.add(Gate::crz(a, b, random_angle(rng))); break;
      default: c.add(Gate::cnot(a, b)); break;
    }
  }
  return c;
}

/// Dense (unnormalized) matrix-vector product as an oracle for circuits.
inline std::vector<cplx> dense_apply(const DenseMatrix& m, const StateVector& s) {
  return m.apply(s.amplitudes());
}

inline double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace ftl::testing
