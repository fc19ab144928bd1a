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

#include "ftl/lattice/lattice.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace ftl {

int Lattice::qubit_at(int row, int col) const {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
    throw std::out_of_range("Lattice::qubit_at: cell out of range");
  }
  return row * cols_ + (row % 2 == 0 ? col : cols_ - 1 - col);
}

int Lattice::row_of(int qubit) const { return qubit / cols_; }

int Lattice::col_of(int qubit) const {
  const int r = row_of(qubit);
  const int off = qubit - r * cols_;
  return r % 2 == 0 ? off : cols_ - 1 - off;
}

PauliString Lattice::plaquette_operator(std::size_t index) const {
  const Plaquette& p = plaquettes_.at(index);
  return PauliString::uniform(num_qubits(), p.qubits, p.kind == PlaquetteKind::Z ? Pauli::Z : Pauli::X);
}

std::vector<PauliString> Lattice::stabilizers() const {
  std::vector<PauliString> out;
  out.reserve(plaquettes_.size());
  for (std::size_t i = 0; i < plaquettes_.size(); ++i) out.push_back(plaquette_operator(i));
  return out;
}

bool Lattice::adjacent(int a, int b) const {
  return std::abs(row_of(a) - row_of(b)) + std::abs(col_of(a) - col_of(b)) == 1;
}

std::string Lattice::describe() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << " rotated surface code, " << num_qubits() << " qubits, "
     << plaquettes_.size() << " plaquettes";
  return os.str();
}

Lattice build_lattice(int rows, int cols) {
  if (rows < 2 || cols < 2) {
    throw std::invalid_argument("build_lattice: rows and cols must be >= 2 (got " + std::to_string(rows) +
                                "x" + std::to_string(cols) + ")");
  }
  if (rows * cols > 63) throw std::invalid_argument("build_lattice: at most 63 qubits supported");

  Lattice lat;
  lat.rows_ = rows;
  lat.cols_ = cols;

  for (int i = -1; i < rows; ++i) {
    for (int j = -1; j < cols; ++j) {
      const bool z_type = ((i + j) % 2 + 2) % 2 == 1;
      std::vector<int> qubits;
      std::vector<std::pair<int, int>> cells;
      for (int r = i; r <= i + 1; ++r)
        for (int c = j; c <= j + 1; ++c)
          if (r >= 0 && r < rows && c >= 0 && c < cols) cells.emplace_back(r, c);
      if (cells.size() == 2) {
        const bool horizontal = cells[0].first == cells[1].first;
        // Z semicircles on top/bottom edges, X semicircles on left/right edges.
        if (horizontal != z_type) continue;
      } else if (cells.size() != 4) {
        continue;
      }
      for (const auto& [r, c] : cells) qubits.push_back(lat.qubit_at(r, c));
      Plaquette p;
      p.kind = z_type ? PlaquetteKind::Z : PlaquetteKind::X;
      p.qubits = std::move(qubits);
      p.group = 2 * (z_type ? 0 : 1) + (i + 1) % 2;
      p.square_row = i;
      p.square_col = j;
      lat.plaquettes_.push_back(std::move(p));
    }
  }

  const int n = lat.num_qubits();
  for (int c = 0; c < cols; ++c) {
    std::vector<int> q;
    for (int r = 0; r < rows; ++r) q.push_back(lat.qubit_at(r, c));
    lat.logical_z_.push_back(PauliString::uniform(n, q, Pauli::Z));
  }
  for (int r = 0; r < rows; ++r) {
    std::vector<int> q;
    for (int c = 0; c < cols; ++c) q.push_back(lat.qubit_at(r, c));
    lat.logical_x_.push_back(PauliString::uniform(n, q, Pauli::X));
  }
  return lat;
}

LogicalOperators logical_operators(const Lattice& lattice) {
  return {lattice.logical_z(), lattice.logical_x()};
}

namespace {

std::vector<std::uint64_t> symplectic_row(const PauliString& p) {
  // Bits [0, n) hold x, bits [n, 2n) hold z.
  const int n = p.num_qubits();
  std::vector<std::uint64_t> row(static_cast<std::size_t>((2 * n + 63) / 64), 0);
  for (int q = 0; q < n; ++q) {
    if ((p.x_mask() >> q) & 1u) row[static_cast<std::size_t>(q / 64)] |= std::uint64_t{1} << (q % 64);
    if ((p.z_mask() >> q) & 1u) {
      const int b = n + q;
      row[static_cast<std::size_t>(b / 64)] |= std::uint64_t{1} << (b % 64);
    }
  }
  return row;
}

}  // namespace

int gf2_rank(const std::vector<PauliString>& ops) {
  if (ops.empty()) return 0;
  const int n = ops.front().num_qubits();
  std::vector<std::vector<std::uint64_t>> m;
  for (const auto& p : ops) {
    if (p.num_qubits() != n) throw std::invalid_argument("gf2_rank: mixed qubit counts");
    m.push_back(symplectic_row(p));
  }
  int rank = 0;
  const int cols = 2 * n;
  for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    const std::size_t w = static_cast<std::size_t>(c / 64);
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = m.size();
    for (std::size_t r = static_cast<std::size_t>(rank); r < m.size(); ++r)
      if (m[r][w] & bit) {
        pivot = r;
        break;
      }
    if (pivot == m.size()) continue;
    std::swap(m[static_cast<std::size_t>(rank)], m[pivot]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != static_cast<std::size_t>(rank) && (m[r][w] & bit)) {
        for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] ^= m[static_cast<std::size_t>(rank)][k];
      }
    }
    ++rank;
  }
  return rank;
}

bool in_group(const std::vector<PauliString>& generators, const PauliString& op) {
  auto extended = generators;
  extended.push_back(op);
  return gf2_rank(extended) == gf2_rank(generators);
}

}  // namespace ftl
