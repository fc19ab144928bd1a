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


#include "ftl/analysis/lifetime.hpp"

#include <cmath>
#include <stdexcept>

namespace ftl {

LifetimeResult extract_lifetime(std::span<const double> abs_mean, double threshold) {
  if (abs_mean.empty()) throw std::invalid_argument("extract_lifetime: empty signal");
  for (std::size_t n = 0; n < abs_mean.size(); ++n)
    if (abs_mean[n] <= threshold) return {static_cast<int>(n), false};
  return {static_cast<int>(abs_mean.size()) - 1, true};
}

LifetimeFit fit_exponential(std::span<const int> sizes, std::span<const double> tau_star,
                            const std::vector<bool>& censored) {
  if (sizes.size() != tau_star.size() || (!censored.empty() && censored.size() != sizes.size()))
    throw std::invalid_argument("fit_exponential: input lengths differ");
  LifetimeFit fit;
  fit.sizes.assign(sizes.begin(), sizes.end());
  fit.tau_star.assign(tau_star.begin(), tau_star.end());
  fit.censored.assign(sizes.size(), false);
  if (!censored.empty()) fit.censored = censored;

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (fit.censored[i]) continue;
    if (!(tau_star[i] > 0.0)) throw std::invalid_argument("fit_exponential: tau* must be positive");
    const double x = sizes[i], y = std::log(tau_star[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) throw std::invalid_argument("fit_exponential: need at least two uncensored points");
  const double den = m * sxx - sx * sx;
  if (den == 0.0) throw std::invalid_argument("fit_exponential: all uncensored sizes are equal");
  fit.slope = (m * sxy - sx * sy) / den;
  fit.intercept = (sy - fit.slope * sx) / m;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (!fit.censored[i]) fit.residuals.push_back(std::log(tau_star[i]) - (fit.intercept + fit.slope * sizes[i]));
  return fit;
}

}  // namespace ftl
