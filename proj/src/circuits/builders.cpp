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

#include "ftl/circuits/builders.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ftl/circuits/euler.hpp"

namespace ftl {

namespace {

void append_cnot(Circuit& c, int control, int target) {
  c.add(Gate::h(target));
  c.add(Gate::cz(control, target));
  c.add(Gate::h(target));
}

}  // namespace

DenseMatrix drive_single_qubit_unitary(const Vec3& field) {
  // exp(-i n.sigma) = cos|n| I - i sin|n| (n/|n|).sigma
  const double nx = std::numbers::pi / 2.0 + field[0];
  const double ny = field[1];
  const double nz = field[2];
  const double r = std::sqrt(nx * nx + ny * ny + nz * nz);
  const double c = std::cos(r);
  const double s = r > 0.0 ? std::sin(r) / r : 1.0;
  const cplx i{0.0, 1.0};
  return DenseMatrix(2, {c - i * s * nz, -i * s * nx - s * ny, -i * s * nx + s * ny, c + i * s * nz});
}

Circuit build_u1_circuit(const Lattice& lattice, const DisorderRealization& realization) {
  validate_realization(lattice, realization);
  Circuit c(lattice.num_qubits());
  for (int k = 0; k < lattice.num_qubits(); ++k) {
    const EulerAngles e = euler_decompose(drive_single_qubit_unitary(realization.field[static_cast<std::size_t>(k)]));
    c.add(Gate::u3(k, e.alpha, e.phi, e.theta));
  }
  return c;
}

void append_zstring_evolution(Circuit& circuit, std::span<const int> qubits, double angle) {
  // RZ(phi) on the parity qubit gives exp(-i phi/2 Z...Z); we want exp(+i angle Z...Z).
  const double phi = -2.0 * angle;
  if (qubits.size() == 2) {
    append_cnot(circuit, qubits[0], qubits[1]);
    circuit.add(Gate::rz(qubits[1], phi));
    append_cnot(circuit, qubits[0], qubits[1]);
    return;
  }
  if (qubits.size() == 4) {
    const int tl = qubits[0], tr = qubits[1], bl = qubits[2], br = qubits[3];
    append_cnot(circuit, tl, bl);
    append_cnot(circuit, tr, br);
    append_cnot(circuit, bl, br);
    circuit.add(Gate::rz(br, phi));
    append_cnot(circuit, bl, br);
    append_cnot(circuit, tr, br);
    append_cnot(circuit, tl, bl);
    return;
  }
  throw std::invalid_argument("append_zstring_evolution: weight must be 2 or 4, got " +
                              std::to_string(qubits.size()));
}

Circuit build_plaquette_evolution(const Plaquette& plaquette, double angle, int num_qubits) {
  Circuit c(num_qubits);
  append_zstring_evolution(c, plaquette.qubits, angle);
  return c;
}

Circuit build_u2_circuit(const Lattice& lattice, const DisorderRealization& realization) {
  validate_realization(lattice, realization);
  Circuit c(lattice.num_qubits());
  const auto& plaquettes = lattice.plaquettes();
  for (int group = 0; group < 4; ++group) {
    for (std::size_t p = 0; p < plaquettes.size(); ++p) {
      const Plaquette& pl = plaquettes[p];
      if (pl.group != group) continue;
      const bool x_type = pl.kind == PlaquetteKind::X;
      if (x_type)
        for (int q : pl.qubits) c.add(Gate::h(q));
      append_zstring_evolution(c, pl.qubits, realization.coupling[p]);
      if (x_type)
        for (int q : pl.qubits) c.add(Gate::h(q));
    }
  }
  return c;
}

Circuit build_floquet_circuit(const Lattice& lattice, const DisorderRealization& realization) {
  Circuit c = build_u1_circuit(lattice, realization);
  c.append(build_u2_circuit(lattice, realization));
  return c;
}

Circuit build_eigenstate_circuit(const Lattice& lattice) {
  const int n = lattice.num_qubits();
  Circuit c(n);
  std::vector<bool> touched(static_cast<std::size_t>(n), false);

  // Cat state on the row-1 logical X support: H then a CNOT chain along the row.
  const int cat_row = 1;
  std::vector<int> row;
  for (int col = 0; col < lattice.cols(); ++col) row.push_back(lattice.qubit_at(cat_row, col));
  std::sort(row.begin(), row.end());
  c.add(Gate::h(row.front()));
  for (std::size_t k = 0; k + 1 < row.size(); ++k) c.add(Gate::cnot(row[k], row[k + 1]));
  for (int q : row) touched[static_cast<std::size_t>(q)] = true;

  // Each (1 + B_q) is an H + CNOT fan-out from a qubit still in |0>.
  std::vector<const Plaquette*> xs;
  for (const auto& p : lattice.plaquettes())
    if (p.kind == PlaquetteKind::X) xs.push_back(&p);
  std::stable_sort(xs.begin(), xs.end(), [](const Plaquette* a, const Plaquette* b) {
    return a->square_row != b->square_row ? a->square_row < b->square_row : a->square_col < b->square_col;
  });
  for (const Plaquette* p : xs) {
    std::vector<int> qs = p->qubits;
    std::sort(qs.begin(), qs.end());
    const auto fresh = std::find_if(qs.begin(), qs.end(), [&](int q) { return !touched[static_cast<std::size_t>(q)]; });
    if (fresh == qs.end()) {
      throw std::runtime_error("build_eigenstate_circuit: no untouched control qubit for X plaquette at square (" +
                               std::to_string(p->square_row) + ", " + std::to_string(p->square_col) + ")");
    }
    const int control = *fresh;
    c.add(Gate::h(control));
    for (int q : qs)
      if (q != control) c.add(Gate::cnot(control, q));
    for (int q : qs) touched[static_cast<std::size_t>(q)] = true;
  }
  return c;
}

std::function<int(int, int)> coupler_orientation(const Lattice& lattice) {
  return [lattice](int a, int b) {
    if (!lattice.adjacent(a, b)) {
      throw std::invalid_argument("coupler_orientation: qubits " + std::to_string(a) + " and " + std::to_string(b) +
                                  " are not lattice neighbours");
    }
    return lattice.row_of(a) == lattice.row_of(b) ? 0 : 1;
  };
}

DenseMatrix pauli_evolution_matrix(const PauliString& p, double angle) {
  DenseMatrix m = p.dense();
  m *= cplx{0.0, std::sin(angle)};
  const std::size_t dim = m.dim();
  for (std::size_t i = 0; i < dim; ++i) m(i, i) += std::cos(angle);
  return m;
}

}  // namespace ftl
