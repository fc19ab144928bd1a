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
#include <optional>
#include <string>
#include <vector>

#include "ftl/noise/noise_model.hpp"

namespace ftl {

/// Everything a subcommand needs, read from a flat INI file. Defaults give a
/// noiseless 3x6 run with 24 realizations and 20 periods.
struct ExperimentConfig {
  // [lattice]
  int rows = 3;
  int cols = 6;
  // [drive]
  double b_radius = 0.0;
  int periods = 20;
  // [disorder]
  int realizations = 24;
  std::uint64_t master_seed = 1;
  // [noise]
  NoiseModel noise = [] {
    NoiseModel m;
    m.enabled = false;
    return m;
  }();
  int trajectories = 16;
  bool cz_layer_ns_set = false;
  bool eps_cz_idle_set = false;
  // [compile]
  bool dynamical_decoupling = false;
  // [observables]
  std::vector<std::string> observables{"ZL", "XL"};
  // [tee]
  std::string tee_division = "both";  // four | six | both | custom
  std::vector<int> region_a, region_b, region_c;
  bool quench = false;
  // [sweep]
  std::vector<double> b_values{0.0, 0.1, 0.25, 0.5, 1.0, 2.0, 3.0};
  int sweep_periods = 7;
  // [lifetime]
  std::vector<int> lifetime_sizes{6, 9};
  int horizon = 10000;
  double threshold = 0.5;
  // [synth]
  std::string synth_target = "ZZ";
  double synth_angle = 0.37;
  std::string synth_name = "synth";
  std::string synth_form = "real";
  int synth_population = 8;
  int synth_generations = 12;
  int synth_initial_depth = 2;
  int synth_depth_step = 1;
  int synth_patience = 3;
  int synth_max_iters = 500;
  // [output]
  std::string output_dir = "out";
  bool write_svg = true;

  /// Throws std::invalid_argument naming the offending key.
  void validate() const;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Parses INI text. Unknown sections or keys and malformed values throw
/// std::invalid_argument with the key name.
ExperimentConfig parse_config(const std::string& ini_text);

/// Reads an INI file, or a manifest.json from an earlier run (its embedded
/// configuration is used).
ExperimentConfig load_config(const std::string& path);

/// Canonical INI text of a configuration; parse_config(to_ini(c)) == c.
std::string to_ini(const ExperimentConfig& c);

/// Lattice for a lifetime size N (3 rows, N / 3 columns).
std::pair<int, int> lifetime_lattice_shape(int n);

}  // namespace ftl
