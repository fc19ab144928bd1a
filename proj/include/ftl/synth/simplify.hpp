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
#include <utility>
#include <vector>

#include "ftl/core/circuit.hpp"

namespace ftl {

struct SimplifyTolerances {
  /// Rotations with |angle| below this are dropped.
  double drop = 1e-6;
  /// Angles within this of a multiple of pi/2 are snapped to a fixed gate.
  double snap = 1e-6;
  int max_rounds = 100;
};

// The four reduction passes. Each returns true when it changed the circuit.

/// Removes rotations (and U3 gates) that are the identity within tolerance.
bool drop_identity_gates(Circuit& c, const SimplifyTolerances& tol);
/// Replaces rotations at special angles by fixed U3 / CZ gates.
bool fix_special_gates(Circuit& c, const SimplifyTolerances& tol);
/// Moves gates past commuting neighbours so mergeable pairs become adjacent.
bool reorder_commuting_gates(Circuit& c);
/// Combines adjacent gates on the same qubits and splits CRZ angles beyond
/// pi into a fixed phase gate plus a smaller CRZ.
bool split_or_combine_gates(Circuit& c, const SimplifyTolerances& tol);

/// All four passes repeated until nothing changes. Bound angles live in the
/// circuit; the free parameters are the rotation angles in gate order.
Circuit simplify(const Circuit& c, const SimplifyTolerances& tol = {});

/// Binds `params` to the rotation gates of `c` (in order), simplifies and
/// returns the new circuit with its remaining free angles.
std::pair<Circuit, std::vector<double>> simplify(const Circuit& c, std::span<const double> params,
                                                 const SimplifyTolerances& tol = {});

}  // namespace ftl
