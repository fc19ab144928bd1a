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
#include <optional>
#include <string>
#include <vector>

#include "ftl/core/dense_matrix.hpp"

namespace ftl {

/// Per-qubit readout fidelities: F0 = P(read 0 | 0), F1 = P(read 1 | 1).
struct ReadoutFidelity {
  double f0 = 1.0;
  double f1 = 1.0;
  friend bool operator==(const ReadoutFidelity&, const ReadoutFidelity&) = default;
};

/// Device-level noise description. Durations in ns, coherence times in us.
/// T2 is the spin-echo value and has no default; it must be supplied.
struct NoiseModel {
  bool enabled = true;
  double t1_us = 163.0;
  std::optional<double> t2_us;
  double sq_layer_ns = 24.0;
  double cz_layer_ns = 52.5;
  /// Median Pauli error per gate class (single-qubit, CZ, idle during CZ).
  double eps_sq = 0.48e-3;
  double eps_cz = 6.4e-3;
  double eps_cz_idle = 1.10e-3;
  /// Empty means ideal readout; one entry applies to every qubit.
  std::vector<ReadoutFidelity> readout;

  /// Throws std::invalid_argument naming the first violated constraint.
  void validate() const;
  double t2() const;
  ReadoutFidelity readout_for(int qubit) const;

  /// Median device numbers; circuits with eigenstate preparation use the
  /// longer CZ layer and the larger idle error.
  static NoiseModel device_defaults(double t2_us, bool with_eigenstate_prep = false);

  friend bool operator==(const NoiseModel&, const NoiseModel&) = default;
};

struct DecoherenceProbabilities {
  double p0 = 0.0;  // reset
  double p1 = 0.0;  // sigma^z
};

/// p0 = 1 - exp(-t/T1), p1 = exp(-t/T1) [1 - exp(-t (1/T2 - 1/T1))] / 2.
/// Requires T2 <= T1 so that the mixture is a valid channel. Infinite
/// coherence times are allowed.
DecoherenceProbabilities decoherence_probabilities(double t_ns, double t1_us, double t2_us);

/// Pauli error of the mixture channel, 1 - F_e = (3/4) p0 + p1.
double decoherence_error_rate(const DecoherenceProbabilities& p);

/// Kraus operators M0..M3 of the mixture channel.
std::array<DenseMatrix, 4> thermal_kraus(const DecoherenceProbabilities& p);

struct DepolarizingRates {
  double sq = 0.0;
  double cz = 0.0;
  double cz_idle = 0.0;
  /// Gate classes whose rate was clamped at zero.
  std::vector<std::string> clamped;
};

/// e_p = max(0, eps - r_dec) per class; the CZ class subtracts the
/// decoherence of both qubits.
DepolarizingRates derive_depolarizing_rates(const NoiseModel& model);

}  // namespace ftl
