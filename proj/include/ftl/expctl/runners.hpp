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

#include <cstddef>
#include <string>
#include <vector>

#include "ftl/analysis/entropy.hpp"
#include "ftl/analysis/lifetime.hpp"
#include "ftl/analysis/signal.hpp"
#include "ftl/core/circuit.hpp"
#include "ftl/expctl/config.hpp"
#include "ftl/synth/search.hpp"

namespace ftl {

struct RunOptions {
  std::size_t workers = 1;
  /// Skip all file output (used by in-process checks).
  bool write_files = true;
};

struct DynamicsResult {
  std::vector<std::string> operators;
  /// values[r][o][n]: raw expectation per realization.
  std::vector<std::vector<std::vector<double>>> values;
  /// Initial-state sign per realization and operator (1 for off-diagonal).
  std::vector<std::vector<int>> signs;
  /// Sign-aligned mean and standard error per operator.
  std::vector<SeriesStats> summary;
  std::vector<Spectrum> spectra;
};

struct TeePoint {
  std::string division;
  int n = 0;
  TeeResult mean;       // entropies averaged over realizations
  double s_topo_stderr = 0.0;
  double fidelity = -1.0;  // Uhlmann fidelity of region ABC, noisy runs only
};

struct EigenstateResult {
  std::vector<std::string> operators;  // stabilizers then logical strings
  std::vector<SeriesStats> values;     // per operator, n = 0..periods
  std::vector<TeePoint> tee;
};

struct SweepResult {
  std::vector<double> b_values;
  std::vector<double> amplitude;  // subharmonic amplitude of the averaged signal
  std::vector<double> stddev;     // spread of per-realization amplitudes
  std::vector<double> stderr_;    // standard error of the signed amplitude
  std::vector<std::vector<double>> mean_signal;
};

struct LifetimeRun {
  std::vector<int> sizes;
  std::vector<LifetimeResult> lifetimes;
  std::vector<std::vector<double>> abs_mean;  // |mean aligned Z_L| per size
  bool fitted = false;
  LifetimeFit fit;
  std::string diagnostic;
};

struct SynthRun {
  SynthesisResult search;
  Circuit circuit;  // simplified
  std::vector<double> params;
  double verified_loss = 0.0;
  bool round_trip = false;
};

DynamicsResult run_dynamics(const ExperimentConfig& config, const RunOptions& options = {});
EigenstateResult run_eigenstate_tee(const ExperimentConfig& config, const RunOptions& options = {});
SweepResult run_bfield_sweep(const ExperimentConfig& config, const RunOptions& options = {});
LifetimeRun run_lifetime_scaling(const ExperimentConfig& config, const RunOptions& options = {});
SynthRun run_synth(const ExperimentConfig& config, const RunOptions& options = {});
/// Recomputes spectrum.csv from the summary.csv in the output directory.
std::vector<std::pair<std::string, Spectrum>> run_spectrum(const ExperimentConfig& config,
                                                           const RunOptions& options = {});

/// Noise model used by the eigenstate protocol: the longer CZ layer and the
/// larger idle error unless the configuration sets them.
NoiseModel eigenstate_noise_model(const ExperimentConfig& config);

}  // namespace ftl
