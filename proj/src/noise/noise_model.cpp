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


#include "ftl/noise/noise_model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ftl {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("noise model: " + what);
}

bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }

}  // namespace

void NoiseModel::validate() const {
  require(t1_us > 0.0, "t1_us must be > 0");
  require(t2_us.has_value(), "t2_us is required (spin-echo T2, no default)");
  require(*t2_us > 0.0, "t2_us must be > 0");
  require(*t2_us <= t1_us,
          "t2_us must not exceed t1_us, otherwise the reset/dephasing mixture has negative weight");
  require(sq_layer_ns > 0.0 && cz_layer_ns > 0.0, "layer durations must be > 0");
  require(in_unit(eps_sq) && in_unit(eps_cz) && in_unit(eps_cz_idle), "Pauli errors must lie in [0, 1]");
  for (const auto& r : readout) {
    require(in_unit(r.f0) && in_unit(r.f1), "readout fidelities must lie in [0, 1]");
  }
}

double NoiseModel::t2() const {
  if (!t2_us) throw std::invalid_argument("noise model: t2_us is required (spin-echo T2, no default)");
  return *t2_us;
}

ReadoutFidelity NoiseModel::readout_for(int qubit) const {
  if (readout.empty()) return {};
  if (readout.size() == 1) return readout.front();
  return readout.at(static_cast<std::size_t>(qubit));
}

NoiseModel NoiseModel::device_defaults(double t2_us, bool with_eigenstate_prep) {
  NoiseModel m;
  m.t2_us = t2_us;
  if (with_eigenstate_prep) {
    m.cz_layer_ns = 62.6;
    m.eps_cz_idle = 1.37e-3;
  }
  return m;
}

DecoherenceProbabilities decoherence_probabilities(double t_ns, double t1_us, double t2_us) {
  if (!(t_ns >= 0.0)) throw std::invalid_argument("decoherence_probabilities: t must be >= 0");
  if (!(t1_us > 0.0) || !(t2_us > 0.0)) throw std::invalid_argument("decoherence_probabilities: T1, T2 must be > 0");
  if (t2_us > t1_us) {
    throw std::invalid_argument(
        "decoherence_probabilities: T2 > T1 makes p1 negative; the reset/dephasing mixture needs T2 <= T1");
  }
  const double t_us = t_ns * 1e-3;
  const double decay = std::isinf(t1_us) ? 1.0 : std::exp(-t_us / t1_us);
  const double rate = (std::isinf(t2_us) ? 0.0 : 1.0 / t2_us) - (std::isinf(t1_us) ? 0.0 : 1.0 / t1_us);
  DecoherenceProbabilities p;
  p.p0 = -std::expm1(-t_us / t1_us);
  p.p1 = 0.5 * decay * -std::expm1(-t_us * rate);
  return p;
}

double decoherence_error_rate(const DecoherenceProbabilities& p) { return 0.75 * p.p0 + p.p1; }

std::array<DenseMatrix, 4> thermal_kraus(const DecoherenceProbabilities& p) {
  const double a = std::sqrt(1.0 - p.p0 - p.p1);
  const double b = std::sqrt(p.p0);
  const double c = std::sqrt(p.p1);
  return {DenseMatrix(2, {a, 0.0, 0.0, a}), DenseMatrix(2, {b, 0.0, 0.0, 0.0}), DenseMatrix(2, {0.0, b, 0.0, 0.0}),
          DenseMatrix(2, {c, 0.0, 0.0, -c})};
}

DepolarizingRates derive_depolarizing_rates(const NoiseModel& model) {
  model.validate();
  const double r_sq = decoherence_error_rate(decoherence_probabilities(model.sq_layer_ns, model.t1_us, model.t2()));
  const double r_cz = decoherence_error_rate(decoherence_probabilities(model.cz_layer_ns, model.t1_us, model.t2()));
  DepolarizingRates out;
  auto clamp = [&out](double v, const char* name) {
    if (v < 0.0) {
      out.clamped.emplace_back(name);
      return 0.0;
    }
    return v;
  };
  out.sq = clamp(model.eps_sq - r_sq, "sq");
  out.cz = clamp(model.eps_cz - 2.0 * r_cz, "cz");
  out.cz_idle = clamp(model.eps_cz_idle - r_cz, "cz_idle");
  return out;
}

}  // namespace ftl
