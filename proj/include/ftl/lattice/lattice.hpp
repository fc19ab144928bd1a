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
#include <string>
#include <vector>

#include "ftl/core/pauli.hpp"

namespace ftl {

enum class PlaquetteKind { Z, X };

/// One stabilizer term: A_p (product of Z) or B_q (product of X).
struct Plaquette {
  PlaquetteKind kind;
  std::vector<int> qubits;  // 2 or 4 entries
  int group = 0;            // parallel-application group, 0..3
  int square_row = 0;       // position of the (possibly virtual) square
  int square_col = 0;

  int weight() const { return static_cast<int>(qubits.size()); }
};

/// Rotated surface code on a rows x cols qubit grid with open boundaries.
///
/// Qubits are numbered along a serpentine path: even rows run left to right,
/// odd rows right to left. For 3x6 this reproduces the usual device labels
/// minus one (label 12 sits below label 1, label 13 below label 12).
///
/// Squares (i, j) with i in [-1, rows), j in [-1, cols) cover grid cells
/// (i..i+1, j..j+1). Square (i, j) is Z-type when i + j is odd. Bulk squares
/// give four-body terms; virtual squares on the top and bottom edges give
/// two-body Z terms and those on the left and right edges two-body X terms.
class Lattice {
 public:
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int num_qubits() const { return rows_ * cols_; }

  int qubit_at(int row, int col) const;
  int row_of(int qubit) const;
  int col_of(int qubit) const;

  const std::vector<Plaquette>& plaquettes() const { return plaquettes_; }
  /// Vertical Z strings, one per column, ordered by column.
  const std::vector<PauliString>& logical_z() const { return logical_z_; }
  /// Horizontal X strings, one per row, ordered by row.
  const std::vector<PauliString>& logical_x() const { return logical_x_; }

  PauliString plaquette_operator(std::size_t index) const;
  std::vector<PauliString> stabilizers() const;

  /// Lattice neighbors (Manhattan distance 1).
  bool adjacent(int a, int b) const;

  std::string describe() const;

 private:
  friend Lattice build_lattice(int rows, int cols);

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Plaquette> plaquettes_;
  std::vector<PauliString> logical_z_;
  std::vector<PauliString> logical_x_;
};

Lattice build_lattice(int rows, int cols);

struct LogicalOperators {
  std::vector<PauliString> z;
  std::vector<PauliString> x;
};

LogicalOperators logical_operators(const Lattice& lattice);

/// Rank over GF(2) of Pauli strings in symplectic form.
int gf2_rank(const std::vector<PauliString>& ops);

/// True when `op` is a product of `generators`, ignoring phases.
bool in_group(const std::vector<PauliString>& generators, const PauliString& op);

}  // namespace ftl
