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
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ftl/core/dense_matrix.hpp"

namespace ftl {

enum class Pauli : std::uint8_t { I, X, Y, Z };

char pauli_char(Pauli p);

/// Tensor product of single-qubit Paulis, stored in symplectic form.
/// A qubit carries X if its x bit is set, Z if its z bit is set, Y if both.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int num_qubits);
  PauliString(int num_qubits, std::initializer_list<std::pair<int, Pauli>> factors);

  static PauliString uniform(int num_qubits, std::span<const int> qubits, Pauli p);
  /// Parse "ZZIY" style strings; character k is qubit k.
  static PauliString parse(const std::string& text);

  int num_qubits() const { return n_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  int weight() const;
  std::vector<int> support() const;

  Pauli factor(int qubit) const;
  void set(int qubit, Pauli p);

  bool commutes_with(const PauliString& o) const;
  bool is_identity() const { return x_ == 0 && z_ == 0; }
  bool is_diagonal() const { return x_ == 0; }

  std::string to_string() const;

  /// Dense 2^n x 2^n operator; test and oracle use only.
  DenseMatrix dense() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  int n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

/// Phase (1, i, -1, -i) and output index of P|index>.
struct PauliAction {
  std::uint64_t x_mask;
  std::uint64_t z_mask;
  int y_count;

  explicit PauliAction(const PauliString& p);

  cplx phase(std::uint64_t index) const;
};

}  // namespace ftl
