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


#include "ftl/analysis/signal.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace ftl {

std::vector<double> autocorrelator(int s0, std::span<const double> values, int d) {
  if (d <= 0) throw std::invalid_argument("autocorrelator: string weight d must be positive");
  if (s0 != 1 && s0 != -1) throw std::invalid_argument("autocorrelator: initial sign must be +1 or -1");
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) {
    const double x = s0 * v;
    const double mag = std::pow(std::abs(v), 1.0 / d);
    out.push_back(x > 0.0 ? mag : (x < 0.0 ? -mag : 0.0));
  }
  return out;
}

Spectrum fourier_spectrum(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) throw std::invalid_argument("fourier_spectrum: need at least two samples");
  Spectrum s;
  s.omega_ratios.resize(n);
  s.amplitudes.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t t = 0; t < n; ++t) {
      // Reduce k*t first so the phase stays exact for large indices.
      const double phase = -2.0 * std::numbers::pi * static_cast<double>((k * t) % n) / static_cast<double>(n);
      acc += values[t] * std::polar(1.0, phase);
    }
    s.omega_ratios[k] = static_cast<double>(k) / static_cast<double>(n);
    s.amplitudes[k] = std::abs(acc) / static_cast<double>(n);
  }
  return s;
}

double subharmonic_amplitude(const Spectrum& spectrum) {
  const std::size_t n = spectrum.amplitudes.size();
  if (n == 0 || n % 2 != 0)
    throw std::invalid_argument("subharmonic_amplitude: sample count must be even to hit omega/omega0 = 0.5");
  return spectrum.amplitudes[n / 2];
}

SeriesStats mean_and_stderr(const std::vector<std::vector<double>>& series) {
  if (series.empty()) throw std::invalid_argument("mean_and_stderr: no series");
  const std::size_t len = series.front().size();
  for (const auto& s : series)
    if (s.size() != len) throw std::invalid_argument("mean_and_stderr: series lengths differ");
  const double r = static_cast<double>(series.size());
  SeriesStats out;
  out.mean.assign(len, 0.0);
  out.stderr_.assign(len, 0.0);
  for (const auto& s : series)
    for (std::size_t i = 0; i < len; ++i) out.mean[i] += s[i];
  for (auto& m : out.mean) m /= r;
  if (series.size() < 2) return out;
  for (std::size_t i = 0; i < len; ++i) {
    double ss = 0.0;
    for (const auto& s : series) ss += (s[i] - out.mean[i]) * (s[i] - out.mean[i]);
    out.stderr_[i] = std::sqrt(ss / (r - 1.0)) / std::sqrt(r);
  }
  return out;
}

}  // namespace ftl
