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

#include <algorithm>
#include "ftl/core/state_vector.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ftl {

namespace {

void check_qubit(const StateVector& s, int q) {
  if (q < 0 || q >= s.num_qubits()) {
    throw std::out_of_range("qubit index " + std::to_string(q) + " out of range for " +
                            std::to_string(s.num_qubits()) + " qubits");
  }
}

void check_pauli(const StateVector& s, const PauliString& p) {
  if (p.num_qubits() != s.num_qubits()) {
    throw std::invalid_argument("Pauli string on " + std::to_string(p.num_qubits()) +
                                " qubits applied to a " + std::to_string(s.num_qubits()) +
                                "-qubit state");
  }
}

void apply_diag_1q(std::span<cplx> a, int q, cplx d0, cplx d1) {
  const std::uint64_t bit = std::uint64_t{1} << q;
  for (std::uint64_t i = 0; i < a.size(); ++i) a[i] *= (i & bit) ? d1 : d0;
}

}  // namespace

StateVector::StateVector(int num_qubits) : n_(num_qubits) {
  if (num_qubits < 0 || num_qubits > kMaxStateQubits) {
    throw std::invalid_argument("StateVector: qubit count must be in [0, " +
                                std::to_string(kMaxStateQubits) + "]");
  }
  amp_.assign(std::size_t{1} << num_qubits, cplx{0.0, 0.0});
  amp_[0] = 1.0;
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
  StateVector s(num_qubits);
  if (index >= s.dim()) throw std::out_of_range("StateVector::basis: index out of range");
  s.amp_[0] = 0.0;
  s.amp_[index] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(std::vector<cplx> amplitudes) {
  const std::size_t n = amplitudes.size();
  if (n == 0 || !std::has_single_bit(n)) {
    throw std::invalid_argument("StateVector: amplitude count must be a power of two");
  }
  StateVector s;
  s.n_ = std::countr_zero(n);
  if (s.n_ > kMaxStateQubits) throw std::invalid_argument("StateVector: too many qubits");
  s.amp_ = std::move(amplitudes);
  return s;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& x : amp_) s += std::norm(x);
  return std::sqrt(s);
}

void StateVector::normalize() {
  const double nrm = norm();
  if (nrm == 0.0) throw std::domain_error("StateVector::normalize: zero vector");
  for (auto& x : amp_) x /= nrm;
}

void apply_1q(StateVector& state, int qubit, const DenseMatrix& m) {
  check_qubit(state, qubit);
  if (m.dim() != 2) throw std::invalid_argument("apply_1q: expected a 2x2 matrix");
  const cplx m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
  auto a = state.amplitudes();
  if (m01 == cplx{0.0} && m10 == cplx{0.0}) {
    apply_diag_1q(a, qubit, m00, m11);
    return;
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const std::uint64_t dim = a.size();
  for (std::uint64_t base = 0; base < dim; base += 2 * bit) {
    for (std::uint64_t off = 0; off < bit; ++off) {
      const std::uint64_t i0 = base + off;
      const std::uint64_t i1 = i0 + bit;
      const cplx x0 = a[i0], x1 = a[i1];
      a[i0] = m00 * x0 + m01 * x1;
      a[i1] = m10 * x0 + m11 * x1;
    }
  }
}

void apply_2q(StateVector& state, int q0, int q1, const DenseMatrix& m) {
  check_qubit(state, q0);
  check_qubit(state, q1);
  if (q0 == q1) throw std::invalid_argument("apply_2q: duplicate qubit index");
  if (m.dim() != 4) throw std::invalid_argument("apply_2q: expected a 4x4 matrix");
  auto a = state.amplitudes();
  const std::uint64_t b0 = std::uint64_t{1} << q0;
  const std::uint64_t b1 = std::uint64_t{1} << q1;
  const std::uint64_t mask = b0 | b1;
  // Local index 2*b(q0) + b(q1).
  const std::uint64_t offs[4] = {0, b1, b0, b0 | b1};
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    if (i & mask) continue;
    cplx x[4];
    for (int k = 0; k < 4; ++k) x[k] = a[i | offs[k]];
    for (int r = 0; r < 4; ++r) {
      cplx acc{0.0, 0.0};
      for (int c = 0; c < 4; ++c) acc += m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) * x[c];
      a[i | offs[r]] = acc;
    }
  }
}

void apply_gate(StateVector& state, const Gate& gate) {
  validate_gate(gate, state.num_qubits());
  auto a = state.amplitudes();
  switch (gate.kind) {
    case GateKind::BARRIER: return;
    case GateKind::RZ: {
      const double t = gate.params[0];
      apply_diag_1q(a, gate.qubits[0], std::polar(1.0, -t / 2.0), std::polar(1.0, t / 2.0));
      return;
    }
    case GateKind::CZ: {
      // Visit only the quarter of indices with both bits set.
      const int lo = std::min(gate.qubits[0], gate.qubits[1]), hi = std::max(gate.qubits[0], gate.qubits[1]);
      const std::uint64_t mask = (std::uint64_t{1} << lo) | (std::uint64_t{1} << hi);
      const std::uint64_t quarter = a.size() >> 2;
      for (std::uint64_t k = 0; k < quarter; ++k) {
        std::uint64_t i = ((k >> lo) << (lo + 1)) | (k & ((std::uint64_t{1} << lo) - 1));
        i = ((i >> hi) << (hi + 1)) | (i & ((std::uint64_t{1} << hi) - 1));
        a[i | mask] = -a[i | mask];
      }
      return;
    }
    case GateKind::CRZ: {
      const std::uint64_t c = std::uint64_t{1} << gate.qubits[0];
      const std::uint64_t t = std::uint64_t{1} << gate.qubits[1];
      const cplx p0 = std::polar(1.0, -gate.params[0] / 2.0);
      const cplx p1 = std::polar(1.0, gate.params[0] / 2.0);
      for (std::uint64_t i = 0; i < a.size(); ++i)
        if (i & c) a[i] *= (i & t) ? p1 : p0;
      return;
    }
    case GateKind::CNOT: {
      const std::uint64_t c = std::uint64_t{1} << gate.qubits[0];
      const std::uint64_t t = std::uint64_t{1} << gate.qubits[1];
      for (std::uint64_t i = 0; i < a.size(); ++i)
        if ((i & c) && !(i & t)) std::swap(a[i], a[i | t]);
      return;
    }
    default: break;
  }
  apply_1q(state, gate.qubits[0], gate_matrix(gate));
}

void apply_circuit(StateVector& state, const Circuit& circuit) {
  if (circuit.num_qubits() != state.num_qubits()) {
    throw std::invalid_argument("apply_circuit: circuit has " + std::to_string(circuit.num_qubits()) +
                                " qubits, state has " + std::to_string(state.num_qubits()));
  }
  for (const auto& g : circuit.gates()) apply_gate(state, g);
}

void apply_pauli(StateVector& state, const PauliString& p) {
  check_pauli(state, p);
  const PauliAction act(p);
  auto a = state.amplitudes();
  if (act.x_mask == 0) {
    for (std::uint64_t i = 0; i < a.size(); ++i) a[i] *= act.phase(i);
    return;
  }
  const std::uint64_t top = std::uint64_t{1} << (std::bit_width(act.x_mask) - 1);
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    if (i & top) continue;
    const std::uint64_t j = i ^ act.x_mask;
    // P|i> = ph(i)|j>, P|j> = ph(j)|i>
    const cplx ai = a[i], aj = a[j];
    a[j] = act.phase(i) * ai;
    a[i] = act.phase(j) * aj;
  }
}

void apply_pauli_rotation(StateVector& state, const PauliString& p, double angle) {
  check_pauli(state, p);
  const PauliAction act(p);
  auto a = state.amplitudes();
  const double c = std::cos(angle);
  const cplx is{0.0, std::sin(angle)};
  if (act.x_mask == 0) {
    for (std::uint64_t i = 0; i < a.size(); ++i) a[i] *= c + is * act.phase(i);
    return;
  }
  const std::uint64_t top = std::uint64_t{1} << (std::bit_width(act.x_mask) - 1);
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    if (i & top) continue;
    const std::uint64_t j = i ^ act.x_mask;
    const cplx ai = a[i], aj = a[j];
    a[i] = c * ai + is * act.phase(j) * aj;
    a[j] = c * aj + is * act.phase(i) * ai;
  }
}

double pauli_expectation(const StateVector& state, const PauliString& p) {
  check_pauli(state, p);
  const PauliAction act(p);
  const auto a = state.amplitudes();
  cplx acc{0.0, 0.0};
  for (std::uint64_t i = 0; i < a.size(); ++i) acc += std::conj(a[i ^ act.x_mask]) * act.phase(i) * a[i];
  return acc.real();
}

double z_expectation(const StateVector& state, int qubit) {
  check_qubit(state, qubit);
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const auto a = state.amplitudes();
  double acc = 0.0;
  for (std::uint64_t i = 0; i < a.size(); ++i) acc += (i & bit) ? -std::norm(a[i]) : std::norm(a[i]);
  return acc;
}

DenseMatrix partial_trace(const StateVector& state, std::span<const int> keep) {
  if (keep.size() > 12) {
    throw std::invalid_argument("partial_trace: at most 12 kept qubits supported, got " +
                                std::to_string(keep.size()));
  }
  std::uint64_t keep_mask = 0;
  for (int q : keep) {
    check_qubit(state, q);
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (keep_mask & bit) throw std::invalid_argument("partial_trace: duplicate qubit in keep set");
    keep_mask |= bit;
  }
  const std::size_t sub = std::size_t{1} << keep.size();
  std::vector<std::uint64_t> scatter(sub, 0);
  for (std::size_t local = 0; local < sub; ++local)
    for (std::size_t j = 0; j < keep.size(); ++j)
      if ((local >> j) & 1u) scatter[local] |= std::uint64_t{1} << keep[j];

  DenseMatrix rho(sub, true);
  const auto a = state.amplitudes();
  std::vector<cplx> v(sub);
  for (std::uint64_t env = 0; env < a.size(); ++env) {
    if (env & keep_mask) continue;
    for (std::size_t k = 0; k < sub; ++k) v[k] = a[env | scatter[k]];
    for (std::size_t r = 0; r < sub; ++r) {
      if (v[r] == cplx{0.0, 0.0}) continue;
      for (std::size_t c = 0; c < sub; ++c) rho(r, c) += v[r] * std::conj(v[c]);
    }
  }
  return rho;
}

DenseMatrix circuit_unitary(const Circuit& circuit) {
  if (circuit.num_qubits() > 12) {
    throw std::invalid_argument("circuit_unitary: dense form limited to 12 qubits, circuit has " +
                                std::to_string(circuit.num_qubits()));
  }
  // Evolve all basis columns at once: column c lives in the high bits of a
  // register twice as wide, so each gate runs through the kernels only once.
  const int n = circuit.num_qubits();
  const std::size_t dim = std::size_t{1} << n;
  std::vector<cplx> cols(dim * dim, cplx{0.0, 0.0});
  for (std::size_t c = 0; c < dim; ++c) cols[c * dim + c] = 1.0;
  StateVector block = StateVector::from_amplitudes(std::move(cols));
  for (const auto& g : circuit.gates()) {
    validate_gate(g, n);
    apply_gate(block, g);
  }
  DenseMatrix u(dim);
  const auto a = block.amplitudes();
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t r = 0; r < dim; ++r) u(r, c) = a[c * dim + r];
  return u;
}

cplx inner_product(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner_product: dimension mismatch");
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

}  // namespace ftl
