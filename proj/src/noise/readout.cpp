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


#include "ftl/noise/readout.hpp"

#include <algorithm>
#include <stdexcept>

namespace ftl {

Counts sample_readout(const StateVector& state, const NoiseModel& model, std::uint64_t shots, CounterRng& rng) {
  const auto a = state.amplitudes();
  std::vector<double> cdf(a.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += std::norm(a[i]);
    cdf[i] = acc;
  }
  const int n = state.num_qubits();
  Counts counts;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::uint64_t x = static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(it - cdf.begin(), cdf.size() - 1));
    if (!model.readout.empty()) {
      for (int q = 0; q < n; ++q) {
        const auto f = model.readout_for(q);
        const bool bit = (x >> q) & 1U;
        if (rng.uniform() >= (bit ? f.f1 : f.f0)) x ^= std::uint64_t{1} << q;
      }
    }
    ++counts[x];
  }
  return counts;
}

std::vector<double> correct_readout(const Counts& counts, const NoiseModel& model, int num_qubits) {
  if (num_qubits < 1 || num_qubits > 24) throw std::invalid_argument("correct_readout: 1 to 24 qubits supported");
  const std::size_t dim = std::size_t{1} << num_qubits;
  std::vector<double> p(dim, 0.0);
  std::uint64_t total = 0;
  for (const auto& [x, c] : counts) {
    if (x >= dim) throw std::invalid_argument("correct_readout: bitstring wider than the register");
    p[x] += static_cast<double>(c);
    total += c;
  }
  if (total == 0) throw std::invalid_argument("correct_readout: no shots");
  for (auto& v : p) v /= static_cast<double>(total);
  if (model.readout.empty()) return p;

  for (int q = 0; q < num_qubits; ++q) {
    const auto f = model.readout_for(q);
    const double det = f.f0 + f.f1 - 1.0;
    if (det <= 1e-12) {
      throw std::invalid_argument("correct_readout: confusion matrix of qubit " + std::to_string(q) +
                                  " is singular (F0 + F1 <= 1)");
    }
    // A = [[F0, 1-F1], [1-F0, F1]] maps true to measured; apply A^-1.
    const double i00 = f.f1 / det, i01 = -(1.0 - f.f1) / det;
    const double i10 = -(1.0 - f.f0) / det, i11 = f.f0 / det;
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i & bit) continue;
      const double m0 = p[i], m1 = p[i | bit];
      p[i] = i00 * m0 + i01 * m1;
      p[i | bit] = i10 * m0 + i11 * m1;
    }
  }
  return p;
}

}  // namespace ftl
