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
#include <vector>

namespace ftl {

struct LifetimeResult {
  int tau_star = 0;  // periods; the horizon when censored
  bool censored = false;
};

/// First period n with value(n) <= threshold, scanning stroboscopically.
/// The input is the absolute value of the disorder-averaged series. Throws
/// std::invalid_argument for an empty series.
LifetimeResult extract_lifetime(std::span<const double> abs_mean, double threshold = 0.5);

struct LifetimeFit {
  std::vector<int> sizes;
  std::vector<double> tau_star;
  std::vector<bool> censored;
  double slope = 0.0;      // d ln(tau*) / dN
  double intercept = 0.0;
  std::vector<double> residuals;  // uncensored points only
};

/// Least squares of ln(tau*) against N over the uncensored points. Throws
/// std::invalid_argument with fewer than two of them.
LifetimeFit fit_exponential(std::span<const int> sizes, std::span<const double> tau_star,
                            const std::vector<bool>& censored = {});

}  // namespace ftl
