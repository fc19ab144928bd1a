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
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ftl/core/circuit.hpp"

namespace ftl {

enum class LayerKind { SQ, CZ };

struct CompileStats {
  std::map<std::string, std::size_t> gate_counts;
  std::size_t sq_layers = 0;  // non-empty
  std::size_t cz_layers = 0;  // non-empty
  std::size_t dd_gates = 0;
  std::size_t max_cz_groups = 0;
  double estimated_ns = 0.0;
};

/// Layered circuit alternating SQ and CZ layers, starting with SQ.
struct CompiledCircuit {
  Circuit circuit;
  CompileStats stats;
  /// Per gate: CZ group inside its layer, -1 for single-qubit gates.
  std::vector<int> cz_group;
  /// Per gate: true for dynamical-decoupling insertions.
  std::vector<bool> dd_gate;

  LayerKind layer_kind(std::size_t k) const { return k % 2 == 0 ? LayerKind::SQ : LayerKind::CZ; }
};

struct CompileOptions {
  /// Durations used for the wall-time estimate.
  double sq_layer_ns = 24.0;
  double cz_layer_ns = 52.5;
  /// CZ coupler orientation (0 or 1) used by the grouping pass; unset puts
  /// every CZ of a layer into group 0.
  std::function<int(int, int)> coupler_orientation;
};

/// Standard pipeline: decompose, merge_u3, layerize, group_cz.
std::vector<std::string> default_passes();

/// Runs the named passes in order. Known passes: decompose, merge_u3,
/// layerize, align_right, group_cz, dd. Throws std::invalid_argument on an
/// unknown name.
CompiledCircuit compile(const Circuit& circuit, const std::vector<std::string>& passes,
                        const CompileOptions& options = {});

// Individual passes.

/// CNOT -> H CZ H; CRZ -> RZ, CNOT, RZ, CNOT (then expanded).
Circuit decompose_to_cz(const Circuit& c);
/// Fuses each run of single-qubit gates on a qubit into one U3.
Circuit merge_single_qubit(const Circuit& c);
/// ASAP (or ALAP when align_right) scheduling into alternating SQ/CZ layers.
Circuit layerize(const Circuit& c, bool align_right = false);
/// X-X pairs in idle windows that span at least two CZ layers.
Circuit insert_dynamical_decoupling(const Circuit& c, std::size_t* inserted = nullptr);

/// Fills stats (and default group / DD annotations) for a layered circuit.
void refresh_stats(CompiledCircuit& cc, const CompileOptions& options);

/// Checks the SQ/CZ alternation and per-layer disjointness.
bool is_valid_layering(const Circuit& c);

}  // namespace ftl
