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


#include "ftl/analysis/floquet_spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ftl/circuits/builders.hpp"
#include "ftl/core/state_vector.hpp"

namespace ftl {

namespace {

void require_small(const Lattice& lattice, const char* who) {
  if (lattice.num_qubits() > 8)
    throw std::invalid_argument(std::string(who) + ": dense spectra limited to 8 qubits, lattice has " +
                                std::to_string(lattice.num_qubits()));
}

}  // namespace

std::vector<double> floquet_eigenphases(const Lattice& lattice, const DisorderRealization& realization) {
  require_small(lattice, "floquet_eigenphases");
  const DenseMatrix u = circuit_unitary(build_floquet_circuit(lattice, realization));
  const auto dim = static_cast<Eigen::Index>(u.dim());
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = u(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("floquet_eigenphases: eigensolver did not converge");
  std::vector<double> phases;
  for (Eigen::Index i = 0; i < dim; ++i) {
    double p = std::arg(solver.eigenvalues()[i]);
    if (p <= -std::numbers::pi) p += 2.0 * std::numbers::pi;
    phases.push_back(p);
  }
  std::sort(phases.begin(), phases.end());
  return phases;
}

DenseMatrix stabilizer_hamiltonian(const Lattice& lattice, const DisorderRealization& realization) {
  require_small(lattice, "stabilizer_hamiltonian");
  validate_realization(lattice, realization);
  DenseMatrix h(std::size_t{1} << lattice.num_qubits(), true);
  for (std::size_t p = 0; p < lattice.plaquettes().size(); ++p) {
    DenseMatrix term = lattice.plaquette_operator(p).dense();
    term *= cplx{-realization.coupling[p], 0.0};
    h += term;
  }
  h.set_hermitian_hint(true);
  return h;
}

double max_pi_pair_deviation(std::span<const double> phases) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double worst = 0.0;
  for (double p : phases) {
    double best = std::numeric_limits<double>::infinity();
    for (double q : phases) {
      double d = std::fmod(std::abs(q - p - std::numbers::pi), two_pi);
      best = std::min(best, std::min(d, two_pi - d));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace ftl
