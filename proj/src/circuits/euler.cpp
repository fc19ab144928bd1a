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

#include "ftl/circuits/euler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ftl {

double wrap_angle(double a) {
  constexpr double pi = std::numbers::pi;
  double w = std::remainder(a, 2.0 * pi);  // [-pi, pi]
  if (w <= -pi) w += 2.0 * pi;
  return w;
}

EulerAngles euler_decompose(const DenseMatrix& u) {
  if (u.dim() != 2) throw std::invalid_argument("euler_decompose: expected a 2x2 matrix");
  if (u.unitarity_error() > 1e-10) {
    throw std::invalid_argument("euler_decompose: input is not unitary");
  }
  constexpr double half_pi = std::numbers::pi / 2.0;
  // Remove the determinant phase so rounding in |u00| stays symmetric.
  const double c = std::clamp(std::hypot(std::abs(u(0, 0)), std::abs(u(1, 1))) / std::numbers::sqrt2, 0.0, 1.0);
  const double s = std::clamp(std::hypot(std::abs(u(0, 1)), std::abs(u(1, 0))) / std::numbers::sqrt2, 0.0, 1.0);
  EulerAngles e;
  e.alpha = 2.0 * std::atan2(s, c);
  // u00 = e^{ig} c, u11 = e^{i(g+theta)} c, u10 = e^{i(g+phi-pi/2)} s,
  // u01 = e^{i(g+theta-phi-pi/2)} s.
  constexpr double tiny = 1e-9;
  if (s < tiny) {
    e.global_phase = std::arg(u(0, 0));
    e.theta = std::arg(u(1, 1)) - e.global_phase;
    e.phi = 0.0;
  } else if (c < tiny) {
    e.theta = 0.0;
    const double a10 = std::arg(u(1, 0));
    const double a01 = std::arg(u(0, 1));
    e.global_phase = 0.5 * (a10 + a01) + half_pi;
    e.phi = 0.5 * (a10 - a01);
  } else {
    e.global_phase = std::arg(u(0, 0));
    e.theta = std::arg(u(1, 1)) - e.global_phase;
    e.phi = std::arg(u(1, 0)) - e.global_phase + half_pi;
  }
  e.theta = wrap_angle(e.theta);
  e.phi = wrap_angle(e.phi);
  e.global_phase = wrap_angle(e.global_phase);
  return e;
}

}  // namespace ftl
