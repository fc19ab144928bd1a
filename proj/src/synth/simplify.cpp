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


#include "ftl/synth/simplify.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ftl/circuits/circuit_io.hpp"
#include "ftl/circuits/euler.hpp"

namespace ftl {

namespace {

constexpr double pi = std::numbers::pi;

bool is_single_rotation(GateKind k) { return k == GateKind::RX || k == GateKind::RY || k == GateKind::RZ; }

bool is_diagonal(const Gate& g) {
  switch (g.kind) {
    case GateKind::RZ:
    case GateKind::CZ:
    case GateKind::CRZ: return true;
    case GateKind::U3: return std::abs(wrap_angle(g.params[0])) == 0.0;
    default: return false;
  }
}

bool same_support(const Gate& a, const Gate& b) {
  if (a.arity() != b.arity()) return false;
  if (a.arity() == 1) return a.qubits[0] == b.qubits[0];
  return a.qubits == b.qubits;
}

bool disjoint(const Gate& a, const Gate& b) {
  for (int j = 0; j < a.arity(); ++j)
    if (b.acts_on(a.qubits[static_cast<std::size_t>(j)])) return false;
  return true;
}

bool commute(const Gate& a, const Gate& b) { return disjoint(a, b) || (is_diagonal(a) && is_diagonal(b)); }

// Two gates that combine into at most one gate.
bool mergeable(const Gate& a, const Gate& b) {
  if (!same_support(a, b)) return false;
  if (a.kind == b.kind) return a.kind != GateKind::CNOT;
  return a.arity() == 1 && (a.kind == GateKind::U3 || b.kind == GateKind::U3) && !is_rotation(a.kind) &&
         !is_rotation(b.kind);
}

Gate fixed_u3(int q, const DenseMatrix& m) {
  const EulerAngles e = euler_decompose(m);
  return Gate::u3(q, e.alpha, e.phi, e.theta);
}

// Distance of x to the nearest multiple of `step`, and that multiple's index.
std::pair<double, long> nearest_multiple(double x, double step) {
  const double k = std::round(x / step);
  return {std::abs(x - k * step), static_cast<long>(k)};
}

// CRZ angles are periodic modulo 4 pi.
double wrap_crz(double t) {
  double w = std::remainder(t, 4.0 * pi);
  if (w <= -2.0 * pi) w += 4.0 * pi;
  return w;
}

}  // namespace

bool drop_identity_gates(Circuit& c, const SimplifyTolerances& tol) {
  std::vector<Gate> out;
  bool changed = false;
  for (const auto& g : c.gates()) {
    bool drop = false;
    if (is_single_rotation(g.kind)) drop = std::abs(wrap_angle(g.params[0])) < tol.drop;
    else if (g.kind == GateKind::CRZ) drop = std::abs(wrap_crz(g.params[0])) < tol.drop;
    else if (g.kind == GateKind::U3)
      drop = std::abs(wrap_angle(g.params[0])) < tol.drop && std::abs(wrap_angle(g.params[2])) < tol.drop;
    if (drop) changed = true;
    else out.push_back(g);
  }
  if (changed) c.mutable_gates() = std::move(out);
  return changed;
}

bool fix_special_gates(Circuit& c, const SimplifyTolerances& tol) {
  Circuit out(c.num_qubits());
  bool changed = false;
  for (const auto& g : c.gates()) {
    if (is_single_rotation(g.kind)) {
      const auto [dist, k] = nearest_multiple(g.params[0], pi / 2);
      if (dist < tol.snap && k % 4 != 0) {
        Gate exact = g;
        exact.params[0] = static_cast<double>(k) * pi / 2;
        out.add(fixed_u3(g.qubits[0], gate_matrix(exact)));
        changed = true;
        continue;
      }
    } else if (g.kind == GateKind::CRZ) {
      const auto [dist, k] = nearest_multiple(wrap_crz(g.params[0]), pi);
      const int ctl = g.qubits[0];
      if (dist < tol.snap && k != 0) {
        // CRZ(pi) = CZ . diag(1, -i) on the control; CRZ(-pi) likewise with +i;
        // CRZ(+-2 pi) = Z on the control.
        if (k == 1 || k == -1) {
          out.add(Gate::cz(g.qubits[0], g.qubits[1]));
          out.add(Gate::u3(ctl, 0.0, 0.0, k == 1 ? -pi / 2 : pi / 2));
        } else {
          out.add(Gate::u3(ctl, 0.0, 0.0, pi));
        }
        changed = true;
        continue;
      }
    }
    out.add(g);
  }
  if (changed) c = std::move(out);
  return changed;
}

bool reorder_commuting_gates(Circuit& c) {
  auto& gs = c.mutable_gates();
  bool changed = false;
  for (std::size_t i = 1; i < gs.size(); ++i) {
    if (mergeable(gs[i - 1], gs[i])) continue;
    // Walk left while the gate commutes with its neighbour; stop at a merge partner.
    std::size_t j = i;
    while (j > 0 && !mergeable(gs[j - 1], gs[i]) && commute(gs[j - 1], gs[i])) --j;
    if (j > 0 && j < i && mergeable(gs[j - 1], gs[i])) {
      const Gate g = gs[i];
      gs.erase(gs.begin() + static_cast<std::ptrdiff_t>(i));
      gs.insert(gs.begin() + static_cast<std::ptrdiff_t>(j), g);
      changed = true;
    }
  }
  return changed;
}

bool split_or_combine_gates(Circuit& c, const SimplifyTolerances& tol) {
  (void)tol;
  Circuit out(c.num_qubits());
  std::vector<Gate> stack;
  bool changed = false;
  for (const Gate& g0 : c.gates()) {
    Gate g = g0;
    // Split: wrap single rotations into (-pi, pi] (global phase only) and
    // move CRZ angles beyond pi onto a fixed Z on the control.
    if (is_single_rotation(g.kind)) {
      const double w = wrap_angle(g.params[0]);
      if (w != g.params[0]) {
        g.params[0] = w;
        changed = true;
      }
    } else if (g.kind == GateKind::CRZ) {
      double w = wrap_crz(g.params[0]);
      if (std::abs(w) > pi) {
        stack.push_back(Gate::u3(g.qubits[0], 0.0, 0.0, pi));
        w -= std::copysign(2.0 * pi, w);
      }
      if (w != g.params[0]) {
        g.params[0] = w;
        changed = true;
      }
    }
    if (!stack.empty() && mergeable(stack.back(), g)) {
      Gate& prev = stack.back();
      changed = true;
      if (is_rotation(g.kind)) {
        prev.params[0] += g.params[0];
      } else if (g.kind == GateKind::CZ || g.kind == GateKind::H) {
        stack.pop_back();
      } else {
        // Fixed single-qubit gates: fuse matrices (g applied after prev).
        const Gate fused = fixed_u3(g.qubits[0], gate_matrix(g) * gate_matrix(prev));
        stack.pop_back();
        stack.push_back(fused);
      }
      continue;
    }
    stack.push_back(g);
  }
  for (const auto& g : stack) out.add(g);
  if (changed) c = std::move(out);
  return changed;
}

Circuit simplify(const Circuit& c, const SimplifyTolerances& tol) {
  Circuit cur(c.num_qubits());
  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::BARRIER) continue;
    cur.add(g);
  }
  for (int round = 0; round < tol.max_rounds; ++round) {
    bool changed = false;
    changed |= drop_identity_gates(cur, tol);
    changed |= fix_special_gates(cur, tol);
    changed |= reorder_commuting_gates(cur);
    changed |= split_or_combine_gates(cur, tol);
    if (!changed) break;
  }
  return cur;
}

std::pair<Circuit, std::vector<double>> simplify(const Circuit& c, std::span<const double> params,
                                                 const SimplifyTolerances& tol) {
  Circuit bound = c;
  std::size_t k = 0;
  for (auto& g : bound.mutable_gates()) {
    if (!is_rotation(g.kind)) continue;
    if (k >= params.size()) throw std::invalid_argument("simplify: fewer parameters than rotation gates");
    g.params[0] = params[k++];
  }
  if (k != params.size()) throw std::invalid_argument("simplify: more parameters than rotation gates");
  Circuit out = simplify(bound, tol);
  std::vector<double> p = rotation_params(out);
  return {std::move(out), std::move(p)};
}

}  // namespace ftl
