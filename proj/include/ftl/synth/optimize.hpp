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

#include <span>
#include <vector>

#include "ftl/core/dense_matrix.hpp"
#include "ftl/synth/block_graph.hpp"
#include "ftl/synth/loss.hpp"

namespace ftl {

enum class GradMode { ParameterShift, FiniteDifference };

struct OptimizeOptions {
  int max_iters = 500;
  double lr = 0.1;
  GradMode grad_mode = GradMode::ParameterShift;
  LossForm form = LossForm::Real;
  double fd_step = 1e-5;
  /// Stop once the loss is below this value.
  double loss_tol = 1e-12;
  double grad_tol = 1e-10;
  /// Stop when a window of this many iterations improves the loss by less
  /// than stall_tol relative to its value (0 disables the check).
  int stall_iters = 100;
  double stall_tol = 1e-3;
};

struct OptimizeResult {
  std::vector<double> params;
  double loss = 0.0;
  int iterations = 0;
};

/// Gradient of the loss. With parameter shift every angle enters the
/// circuit through exp(-i theta G / 2) with G having eigenvalues in
/// {-1, 0, 1}, so Tr(T^dagger U) is a trigonometric polynomial of frequency
/// 1/2 in each angle and a shift of +-pi is exact.
std::vector<double> loss_gradient(std::span<const double> params, const BlockGraph& graph, const AnsatzPath& path,
                                  const DenseMatrix& target, LossForm form, GradMode mode, double fd_step = 1e-5);

/// Gradient descent with a backtracking (Armijo) line search. The step
/// grows after each accepted move and shrinks on rejection, so the loss
/// never increases. Throws std::runtime_error if the loss becomes
/// non-finite.
OptimizeResult optimize(const BlockGraph& graph, const AnsatzPath& path, const DenseMatrix& target,
                        std::vector<double> initial, const OptimizeOptions& options = {});

}  // namespace ftl
