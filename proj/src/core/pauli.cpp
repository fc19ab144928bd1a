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

#include "ftl/core/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace ftl {

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

PauliString::PauliString(int num_qubits) : n_(num_qubits) {
  if (num_qubits < 0 || num_qubits > 63) {
    throw std::invalid_argument("PauliString: qubit count must be in [0, 63]");
  }
}

PauliString::PauliString(int num_qubits, std::initializer_list<std::pair<int, Pauli>> factors)
    : PauliString(num_qubits) {
  for (const auto& [q, p] : factors) set(q, p);
}

PauliString PauliString::uniform(int num_qubits, std::span<const int> qubits, Pauli p) {
  PauliString s(num_qubits);
  for (int q : qubits) s.set(q, p);
  return s;
}

PauliString PauliString::parse(const std::string& text) {
  PauliString s(static_cast<int>(text.size()));
  for (std::size_t k = 0; k < text.size(); ++k) {
    switch (text[k]) {
      case 'I': case 'i': break;
      case 'X': case 'x': s.set(static_cast<int>(k), Pauli::X); break;
      case 'Y': case 'y': s.set(static_cast<int>(k), Pauli::Y); break;
      case 'Z': case 'z': s.set(static_cast<int>(k), Pauli::Z); break;
      default: throw std::invalid_argument("PauliString::parse: bad character in '" + text + "'");
    }
  }
  return s;
}

int PauliString::weight() const { return std::popcount(x_ | z_); }

std::vector<int> PauliString::support() const {
  std::vector<int> out;
  for (int q = 0; q < n_; ++q)
    if (((x_ | z_) >> q) & 1u) out.push_back(q);
  return out;
}

Pauli PauliString::factor(int qubit) const {
  if (qubit < 0 || qubit >= n_) throw std::out_of_range("PauliString: qubit out of range");
  const bool x = (x_ >> qubit) & 1u;
  const bool z = (z_ >> qubit) & 1u;
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  if (z) return Pauli::Z;
  return Pauli::I;
}

void PauliString::set(int qubit, Pauli p) {
  if (qubit < 0 || qubit >= n_) {
    throw std::out_of_range("PauliString: qubit " + std::to_string(qubit) + " out of range for " +
                            std::to_string(n_) + " qubits");
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  x_ &= ~bit;
  z_ &= ~bit;
  if (p == Pauli::X || p == Pauli::Y) x_ |= bit;
  if (p == Pauli::Z || p == Pauli::Y) z_ |= bit;
}

bool PauliString::commutes_with(const PauliString& o) const {
  return (std::popcount(x_ & o.z_) + std::popcount(z_ & o.x_)) % 2 == 0;
}

std::string PauliString::to_string() const {
  std::string s(static_cast<std::size_t>(n_), 'I');
  for (int q = 0; q < n_; ++q) s[static_cast<std::size_t>(q)] = pauli_char(factor(q));
  return s;
}

DenseMatrix PauliString::dense() const {
  if (n_ > 14) throw std::invalid_argument("PauliString::dense: too many qubits");
  const std::size_t dim = std::size_t{1} << n_;
  DenseMatrix m(dim, true);
  const PauliAction act(*this);
  for (std::uint64_t i = 0; i < dim; ++i) m(i ^ act.x_mask, i) = act.phase(i);
  return m;
}

PauliAction::PauliAction(const PauliString& p)
    : x_mask(p.x_mask()), z_mask(p.z_mask()), y_count(std::popcount(p.x_mask() & p.z_mask())) {}

cplx PauliAction::phase(std::uint64_t index) const {
  // Y|b> = i (-1)^b |b^1>, so P|i> = i^{#Y} (-1)^{|i & z|} |i ^ x>.
  int k = y_count + 2 * (std::popcount(index & z_mask) & 1);
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace ftl
