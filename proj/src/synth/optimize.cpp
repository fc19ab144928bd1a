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


#include "ftl/synth/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ftl/core/state_vector.hpp"

namespace ftl {

namespace {

// Matrix columns stored one after another in a register of 2n qubits.
StateVector column_block(const DenseMatrix& m) {
  const std::size_t dim = m.dim();
  std::vector<cplx> cols(dim * dim);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t r = 0; r < dim; ++r) cols[c * dim + r] = m(r, c);
  return StateVector::from_amplitudes(std::move(cols));
}

void apply_gate_adjoint(StateVector& s, Gate g) {
  if (is_rotation(g.kind)) {
    g.params[0] = -g.params[0];
    apply_gate(s, g);
  } else if (g.arity() == 1) {
    apply_1q(s, g.qubits[0], gate_matrix(g).adjoint());
  } else {
    apply_2q(s, g.qubits[0], g.qubits[1], gate_matrix(g).adjoint());
  }
}

}  // namespace

std::vector<double> loss_gradient(std::span<const double> params, const BlockGraph& graph, const AnsatzPath& path,
                                  const DenseMatrix& target, LossForm form, GradMode mode, double fd_step) {
  const double d = static_cast<double>(target.dim());
  std::vector<double> p(params.begin(), params.end());
  std::vector<double> grad(p.size(), 0.0);
  if (mode == GradMode::FiniteDifference) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      const double x = p[k];
      p[k] = x + fd_step;
      const double up = path_loss(p, graph, path, target, form);
      p[k] = x - fd_step;
      const double dn = path_loss(p, graph, path, target, form);
      p[k] = x;
      grad[k] = (up - dn) / (2.0 * fd_step);
    }
    return grad;
  }
  // Shift rule evaluated with one backward and one forward sweep. With
  // A_k = S_k^dagger T (S_k the gates after k) and P_k the gates before k,
  // each shifted overlap is <A_k, G_k(theta +- pi) P_k>.
  const Circuit c = instantiate(graph, path, p);
  const auto& gates = c.gates();
  StateVector back = column_block(target);
  std::vector<StateVector> adjoints(gates.size());
  for (std::size_t k = gates.size(); k-- > 0;) {
    if (is_rotation(gates[k].kind)) adjoints[k] = back;
    apply_gate_adjoint(back, gates[k]);
  }
  StateVector fwd = column_block(DenseMatrix::identity(target.dim()));
  std::vector<cplx> dz(p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (is_rotation(gates[i].kind)) {
      Gate g = gates[i];
      const double x = g.params[0];
      StateVector up = fwd, dn = fwd;
      g.params[0] = x + std::numbers::pi;
      apply_gate(up, g);
      g.params[0] = x - std::numbers::pi;
      apply_gate(dn, g);
      dz[k++] = (inner_product(adjoints[i], up) - inner_product(adjoints[i], dn)) / 4.0;
    }
    apply_gate(fwd, gates[i]);
  }
  const cplx z = inner_product(column_block(target), fwd);
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (form == LossForm::Real) {
      grad[j] = -dz[j].real() / d;
    } else {
      const double az = std::abs(z);
      grad[j] = az > 0.0 ? -(std::conj(z) * dz[j]).real() / (az * d) : 0.0;
    }
  }
  return grad;
}

OptimizeResult optimize(const BlockGraph& graph, const AnsatzPath& path, const DenseMatrix& target,
                        std::vector<double> initial, const OptimizeOptions& options) {
  if (!path.valid(graph)) throw std::invalid_argument("optimize: path is not a walk in the block graph");
  OptimizeResult r;
  r.params = std::move(initial);
  r.loss = path_loss(r.params, graph, path, target, options.form);
  if (!std::isfinite(r.loss)) throw std::runtime_error("optimize: initial loss is not finite");
  if (r.params.empty()) return r;

  double step = options.lr;
  constexpr double armijo = 1e-4;
  double window_start = r.loss;
  for (int it = 0; it < options.max_iters && r.loss > options.loss_tol; ++it) {
    if (options.stall_iters > 0 && it > 0 && it % options.stall_iters == 0) {
      if (window_start - r.loss < options.stall_tol * std::max(r.loss, 1e-300)) break;
      window_start = r.loss;
    }
    const auto g = loss_gradient(r.params, graph, path, target, options.form, options.grad_mode, options.fd_step);
    double g2 = 0.0;
    for (double v : g) g2 += v * v;
    if (std::sqrt(g2) < options.grad_tol) break;
    r.iterations = it + 1;

    bool accepted = false;
    std::vector<double> trial(r.params.size());
    for (int halving = 0; halving < 40; ++halving) {
      for (std::size_t k = 0; k < trial.size(); ++k) trial[k] = r.params[k] - step * g[k];
      const double l = path_loss(trial, graph, path, target, options.form);
      if (!std::isfinite(l)) throw std::runtime_error("optimize: loss diverged (non-finite value)");
      if (l <= r.loss - armijo * step * g2) {
        r.params = trial;
        r.loss = l;
        accepted = true;
        step *= 2.0;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
  }
  return r;
}

}  // namespace ftl
