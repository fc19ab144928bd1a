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
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ftl/core/dense_matrix.hpp"

namespace ftl {

enum class GateKind { RX, RY, RZ, H, U3, CZ, CRZ, CNOT, BARRIER };

std::string gate_name(GateKind k);
GateKind gate_kind_from_name(const std::string& name);
int gate_arity(GateKind k);
int gate_param_count(GateKind k);
bool is_rotation(GateKind k);

/// One gate of the fixed gate set.
///
/// Rotations follow R_a(theta) = exp(-i theta sigma^a / 2). U3 carries
/// (alpha, phi, theta) and equals R_xy(alpha, phi) R_z(theta) with
/// R_z(theta) = diag(1, e^{i theta}). CRZ and CNOT list the control first.
struct Gate {
  GateKind kind = GateKind::H;
  std::array<int, 2> qubits{0, -1};
  std::array<double, 3> params{0.0, 0.0, 0.0};

  int arity() const { return gate_arity(kind); }
  bool acts_on(int q) const { return qubits[0] == q || (arity() == 2 && qubits[1] == q); }
  bool is_two_qubit() const { return arity() == 2; }

  static Gate rx(int q, double theta) { return {GateKind::RX, {q, -1}, {theta, 0, 0}}; }
  static Gate ry(int q, double theta) { return {GateKind::RY, {q, -1}, {theta, 0, 0}}; }
  static Gate rz(int q, double theta) { return {GateKind::RZ, {q, -1}, {theta, 0, 0}}; }
  static Gate h(int q) { return {GateKind::H, {q, -1}, {0, 0, 0}}; }
  static Gate u3(int q, double alpha, double phi, double theta) {
    return {GateKind::U3, {q, -1}, {alpha, phi, theta}};
  }
  static Gate cz(int a, int b) { return {GateKind::CZ, {a, b}, {0, 0, 0}}; }
  static Gate crz(int control, int target, double theta) {
    return {GateKind::CRZ, {control, target}, {theta, 0, 0}};
  }
  static Gate cnot(int control, int target) { return {GateKind::CNOT, {control, target}, {0, 0, 0}}; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// 2x2 or 4x4 matrix of a gate. Two-qubit matrices index |b(q0) b(q1)>
/// with q0 as the more significant bit.
DenseMatrix gate_matrix(const Gate& g);

/// U3(alpha, phi, theta) as a 2x2 matrix.
DenseMatrix u3_matrix(double alpha, double phi, double theta);

/// Ordered gate program. When `layer_marks` is non-empty the circuit is
/// layered: the marks are exclusive layer ends, so layer k spans gates
/// [layer_marks[k-1], layer_marks[k]) with an implicit leading 0.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int num_qubits);

  int num_qubits() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::vector<Gate>& mutable_gates() { return gates_; }
  std::size_t size() const { return gates_.size(); }

  /// Appends a gate after validating qubit indices and parameter finiteness.
  /// A BARRIER closes the current layer instead of being stored.
  void add(const Gate& g);
  void append(const Circuit& other);

  bool layered() const { return !layer_marks_.empty(); }
  const std::vector<std::size_t>& layer_marks() const { return layer_marks_; }
  std::size_t num_layers() const { return layer_marks_.size(); }
  std::span<const Gate> layer(std::size_t k) const;
  /// Closes the current layer at the present gate count.
  void mark_layer_end() { layer_marks_.push_back(gates_.size()); }
  void clear_layers() { layer_marks_.clear(); }
  void set_layer_marks(std::vector<std::size_t> marks);

  std::size_t count(GateKind k) const;
  /// Number of free rotation angles (RX, RY, RZ, CRZ); U3, H and CZ count as fixed.
  std::size_t variational_param_count() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int n_ = 0;
  std::vector<Gate> gates_;
  std::vector<std::size_t> layer_marks_;
};

void validate_gate(const Gate& g, int num_qubits);

}  // namespace ftl
