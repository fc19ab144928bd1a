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

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ftl/core/circuit.hpp"
#include "ftl/core/dense_matrix.hpp"
#include "ftl/synth/block_graph.hpp"
#include "ftl/synth/optimize.hpp"

namespace ftl {

struct SearchOptions {
  int population = 8;
  int initial_depth = 2;
  int depth_step = 1;
  int generations = 12;
  std::uint64_t seed = 1;
  /// Best-loss relative change below which a generation counts as stalled.
  double converge_rel = 1e-8;
  /// Stalled generations in a row before the search stops.
  int patience = 3;
  /// The search stops as soon as the best loss drops below this value.
  double stop_loss = 1e-10;
  /// Fraction of new angles started near a multiple of pi/2 instead of
  /// uniformly on the circle.
  double special_init = 0.5;
  /// Perturb-and-reoptimize rounds per member after the first descent, and
  /// the half-width of the uniform kick applied to every angle.
  int restarts = 2;
  double restart_kick = 1.5;
  /// Allowed CRZ pairs; empty means a linear chain.
  std::vector<std::pair<int, int>> pairs;
  std::size_t workers = 1;
  OptimizeOptions optimize;
};

struct SynthesisResult {
  Circuit circuit;
  std::vector<double> params;
  double loss = 0.0;
  /// Best loss after each generation; non-increasing.
  std::vector<double> history;
  LossForm form = LossForm::Real;
  AnsatzPath path;
};

/// Evolutionary search over block-graph paths: sample paths of a fixed
/// depth, optimize each, keep the best quarter, extend the survivors and
/// repeat. Returns the best circuit found even if the target is not met.
SynthesisResult neuroevolution_search(const DenseMatrix& target, const SearchOptions& options = {});

}  // namespace ftl
