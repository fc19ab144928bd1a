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

#include <cstdint>
#include <map>
#include <vector>

#include "ftl/core/rng.hpp"
#include "ftl/core/state_vector.hpp"
#include "ftl/noise/noise_model.hpp"

namespace ftl {

using Counts = std::map<std::uint64_t, std::uint64_t>;

/// Born-rule samples of the full register, each measured bit b flipped with
/// probability 1 - F_b.
Counts sample_readout(const StateVector& state, const NoiseModel& model, std::uint64_t shots, CounterRng& rng);

/// Applies the inverse of the per-qubit confusion matrices to the empirical
/// distribution. Returns quasi-probabilities over all 2^n bitstrings (they
/// may be slightly negative). Throws when some F0 + F1 <= 1.
std::vector<double> correct_readout(const Counts& counts, const NoiseModel& model, int num_qubits);

}  // namespace ftl
