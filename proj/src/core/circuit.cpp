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

#include "ftl/core/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ftl {

std::string gate_name(GateKind k) {
  switch (k) {
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::H: return "h";
    case GateKind::U3: return "u3";
    case GateKind::CZ: return "cz";
    case GateKind::CRZ: return "crz";
    case GateKind::CNOT: return "cnot";
    case GateKind::BARRIER: return "barrier";
  }
  return "?";
}

GateKind gate_kind_from_name(const std::string& name) {
  static const std::pair<const char*, GateKind> table[] = {
      {"rx", GateKind::RX}, {"ry", GateKind::RY},   {"rz", GateKind::RZ},
      {"h", GateKind::H},   {"u3", GateKind::U3},   {"cz", GateKind::CZ},
      {"crz", GateKind::CRZ}, {"cnot", GateKind::CNOT}, {"barrier", GateKind::BARRIER}};
  for (const auto& [n, k] : table)
    if (name == n) return k;
  throw std::invalid_argument("unknown gate kind '" + name + "'");
}

int gate_arity(GateKind k) {
  switch (k) {
    case GateKind::CZ:
    case GateKind::CRZ:
    case GateKind::CNOT: return 2;
    case GateKind::BARRIER: return 0;
    default: return 1;
  }
}

int gate_param_count(GateKind k) {
  switch (k) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::CRZ: return 1;
    case GateKind::U3: return 3;
    default: return 0;
  }
}

bool is_rotation(GateKind k) {
  return k == GateKind::RX || k == GateKind::RY || k == GateKind::RZ || k == GateKind::CRZ;
}

DenseMatrix u3_matrix(double alpha, double phi, double theta) {
  const double c = std::cos(alpha / 2.0);
  const double s = std::sin(alpha / 2.0);
  const cplx mi{0.0, -1.0};
  DenseMatrix m(2);
  m(0, 0) = c;
  m(0, 1) = mi * std::polar(1.0, theta - phi) * s;
  m(1, 0) = mi * std::polar(1.0, phi) * s;
  m(1, 1) = std::polar(c, theta);
  return m;
}

DenseMatrix gate_matrix(const Gate& g) {
  const double t = g.params[0];
  const double c = std::cos(t / 2.0);
  const double s = std::sin(t / 2.0);
  const cplx i{0.0, 1.0};
  switch (g.kind) {
    case GateKind::RX: return DenseMatrix(2, {c, -i * s, -i * s, c});
    case GateKind::RY: return DenseMatrix(2, {c, -s, s, c});
    case GateKind::RZ: return DenseMatrix(2, {std::polar(1.0, -t / 2.0), 0.0, 0.0, std::polar(1.0, t / 2.0)});
    case GateKind::H: {
      const double r = 1.0 / std::numbers::sqrt2;
      return DenseMatrix(2, {r, r, r, -r}, true);
    }
    case GateKind::U3: return u3_matrix(g.params[0], g.params[1], g.params[2]);
    case GateKind::CZ: {
      const cplx d[] = {1.0, 1.0, 1.0, -1.0};
      return DenseMatrix::diagonal(d);
    }
    case GateKind::CRZ: {
      const cplx d[] = {1.0, 1.0, std::polar(1.0, -t / 2.0), std::polar(1.0, t / 2.0)};
      return DenseMatrix::diagonal(d);
    }
    case GateKind::CNOT: {
      DenseMatrix m(4);
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      m(2, 3) = 1.0;
      m(3, 2) = 1.0;
      return m;
    }
    case GateKind::BARRIER: break;
  }
  throw std::invalid_argument("gate_matrix: barrier has no matrix");
}

void validate_gate(const Gate& g, int num_qubits) {
  if (g.kind == GateKind::BARRIER) return;
  const int a = g.arity();
  for (int k = 0; k < a; ++k) {
    const int q = g.qubits[static_cast<std::size_t>(k)];
    if (q < 0 || q >= num_qubits) {
      throw std::out_of_range(gate_name(g.kind) + ": qubit index " + std::to_string(q) +
                              " out of range for " + std::to_string(num_qubits) + " qubits");
    }
  }
  if (a == 2 && g.qubits[0] == g.qubits[1]) {
    throw std::invalid_argument(gate_name(g.kind) + ": duplicate qubit index " +
                                std::to_string(g.qubits[0]));
  }
  for (int k = 0; k < gate_param_count(g.kind); ++k) {
    if (!std::isfinite(g.params[static_cast<std::size_t>(k)])) {
      throw std::invalid_argument(gate_name(g.kind) + ": non-finite parameter");
    }
  }
}

Circuit::Circuit(int num_qubits) : n_(num_qubits) {
  if (num_qubits < 0) throw std::invalid_argument("Circuit: negative qubit count");
}

void Circuit::add(const Gate& g) {
  if (g.kind == GateKind::BARRIER) {
    mark_layer_end();
    return;
  }
  validate_gate(g, n_);
  Gate stored = g;
  if (stored.arity() == 1) stored.qubits[1] = -1;
  gates_.push_back(stored);
}

void Circuit::append(const Circuit& other) {
  if (other.n_ != n_) throw std::invalid_argument("Circuit::append: qubit count mismatch");
  const std::size_t offset = gates_.size();
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  for (std::size_t m : other.layer_marks_) layer_marks_.push_back(m + offset);
}

std::span<const Gate> Circuit::layer(std::size_t k) const {
  if (k >= layer_marks_.size()) throw std::out_of_range("Circuit::layer: index out of range");
  const std::size_t begin = k == 0 ? 0 : layer_marks_[k - 1];
  const std::size_t end = layer_marks_[k];
  return std::span<const Gate>(gates_).subspan(begin, end - begin);
}

void Circuit::set_layer_marks(std::vector<std::size_t> marks) {
  std::size_t prev = 0;
  for (std::size_t m : marks) {
    if (m < prev || m > gates_.size()) throw std::invalid_argument("Circuit: invalid layer marks");
    prev = m;
  }
  layer_marks_ = std::move(marks);
}

std::size_t Circuit::count(GateKind k) const {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(), [k](const Gate& g) { return g.kind == k; }));
}

std::size_t Circuit::variational_param_count() const {
  std::size_t n = 0;
  for (const auto& g : gates_)
    if (is_rotation(g.kind)) ++n;
  return n;
}

}  // namespace ftl
