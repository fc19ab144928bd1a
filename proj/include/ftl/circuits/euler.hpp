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

#include "ftl/core/circuit.hpp"
#include "ftl/core/dense_matrix.hpp"

namespace ftl {

/// u = e^{i global_phase} U3(alpha, phi, theta), alpha in [0, pi].
struct EulerAngles {
  double alpha = 0.0;
  double phi = 0.0;
  double theta = 0.0;
  double global_phase = 0.0;
};

EulerAngles euler_decompose(const DenseMatrix& u);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double a);

}  // namespace ftl
