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
#include <string>
#include <vector>

namespace ftl {

/// Per-period series of one observable, n = 0..n_max.
struct Signal {
  std::string label;
  std::vector<double> values;
  int realization = -1;  // -1 for averaged series
};

/// sign(s0 * v(n)) |v(n)|^(1/d). Throws std::invalid_argument for d <= 0 or
/// s0 not in {-1, +1}.
std::vector<double> autocorrelator(int s0, std::span<const double> values, int d);

struct Spectrum {
  std::vector<double> omega_ratios;  // k / (n_max + 1), units of the drive frequency
  std::vector<double> amplitudes;    // |DFT| / (n_max + 1)
};

/// Throws std::invalid_argument for fewer than two samples.
Spectrum fourier_spectrum(std::span<const double> values);

/// Amplitude at half the drive frequency. Needs an even sample count so the
/// point lies on the grid; throws std::invalid_argument otherwise.
double subharmonic_amplitude(const Spectrum& spectrum);

struct SeriesStats {
  std::vector<double> mean;
  std::vector<double> stderr_;  // sample stddev / sqrt(R); zero for R = 1
};

/// Pointwise mean and standard error over equally long series.
SeriesStats mean_and_stderr(const std::vector<std::vector<double>>& series);

}  // namespace ftl
