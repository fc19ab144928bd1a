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


#include "ftl/expctl/evolution.hpp"

#include <stdexcept>

#include "ftl/circuits/builders.hpp"
#include "ftl/core/rng.hpp"
#include "ftl/noise/channels.hpp"

namespace ftl {

std::uint64_t realization_seed(std::uint64_t master_seed, std::uint64_t r) {
  return derive_seed(master_seed, r, 0xd150);
}

FloquetKernel::FloquetKernel(const Lattice& lattice, const DisorderRealization& realization) {
  validate_realization(lattice, realization);
  for (const auto& f : realization.field) drive_.push_back(drive_single_qubit_unitary(f));
  const auto& plaquettes = lattice.plaquettes();
  const int n = lattice.num_qubits();
  for (int group = 0; group < 4; ++group) {
    for (std::size_t p = 0; p < plaquettes.size(); ++p) {
      if (plaquettes[p].group != group) continue;
      const Pauli kind = plaquettes[p].kind == PlaquetteKind::X ? Pauli::X : Pauli::Z;
      terms_.emplace_back(PauliString::uniform(n, plaquettes[p].qubits, kind), realization.coupling[p]);
    }
  }
}

void FloquetKernel::step(StateVector& state) const {
  for (std::size_t k = 0; k < drive_.size(); ++k) apply_1q(state, static_cast<int>(k), drive_[k]);
  for (const auto& [op, angle] : terms_) apply_pauli_rotation(state, op, angle);
}

std::vector<Observable> make_observables(const Lattice& lattice, const std::vector<std::string>& specs) {
  const int n = lattice.num_qubits();
  std::vector<Observable> out;
  auto add_strings = [&](const std::vector<PauliString>& ops, const std::string& prefix, int only) {
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (only > 0 && static_cast<int>(i) + 1 != only) continue;
      out.push_back({prefix + std::to_string(i + 1), ops[i]});
    }
    if (only > static_cast<int>(ops.size()))
      throw std::invalid_argument("observables: " + prefix + std::to_string(only) + " does not exist on " +
                                  lattice.describe());
  };
  auto add_sz = [&](int only) {
    if (only >= n) throw std::invalid_argument("observables: sz" + std::to_string(only) + " is beyond the lattice");
    for (int k = 0; k < n; ++k)
      if (only < 0 || k == only) out.push_back({"sz_" + std::to_string(k), PauliString(n, {{k, Pauli::Z}})});
  };
  auto index_of = [](const std::string& spec, std::size_t prefix) {
    const std::string digits = spec.substr(prefix);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("observables: cannot parse '" + spec + "'");
    return std::stoi(digits);
  };
  for (const auto& spec : specs) {
    if (spec == "all") {
      add_strings(lattice.logical_z(), "Z_L", 0);
      add_strings(lattice.logical_x(), "X_L", 0);
      add_sz(-1);
    } else if (spec.rfind("ZL", 0) == 0) {
      add_strings(lattice.logical_z(), "Z_L", spec.size() == 2 ? 0 : index_of(spec, 2));
    } else if (spec.rfind("XL", 0) == 0) {
      add_strings(lattice.logical_x(), "X_L", spec.size() == 2 ? 0 : index_of(spec, 2));
    } else if (spec.rfind("sz", 0) == 0) {
      add_sz(spec.size() == 2 ? -1 : index_of(spec, 2));
    } else {
      throw std::invalid_argument("observables: unknown spec '" + spec + "' (use ZL, XL, ZL<i>, XL<i>, sz, sz<k>, all)");
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (out[i].label == out[j].label) throw std::invalid_argument("observables: '" + out[i].label + "' listed twice");
  return out;
}

int initial_sign(const PauliString& op, std::uint64_t bits) {
  if (!op.is_diagonal()) return 0;
  return __builtin_popcountll(op.z_mask() & bits) % 2 == 0 ? 1 : -1;
}

namespace {

void record(const StateVector& s, const std::vector<Observable>& obs, ObservableSeries& out, std::size_t n,
            double weight) {
  for (std::size_t o = 0; o < obs.size(); ++o) out[o][n] += weight * pauli_expectation(s, obs[o].op);
}

ObservableSeries zero_series(std::size_t obs, int periods) {
  return ObservableSeries(obs, std::vector<double>(static_cast<std::size_t>(periods) + 1, 0.0));
}

}  // namespace

ObservableSeries evolve_noiseless(const Lattice& lattice, const DisorderRealization& realization,
                                  const std::vector<Observable>& observables, int periods) {
  if (periods < 0) throw std::invalid_argument("evolve_noiseless: periods must be >= 0");
  const FloquetKernel kernel(lattice, realization);
  StateVector s = StateVector::basis(lattice.num_qubits(), realization.initial_bits);
  ObservableSeries out = zero_series(observables.size(), periods);
  record(s, observables, out, 0, 1.0);
  for (int n = 1; n <= periods; ++n) {
    kernel.step(s);
    record(s, observables, out, static_cast<std::size_t>(n), 1.0);
  }
  return out;
}

CompiledCircuit compile_floquet_period(const Lattice& lattice, const DisorderRealization& realization,
                                       const NoiseModel& model, bool dynamical_decoupling) {
  CompileOptions opts;
  opts.sq_layer_ns = model.sq_layer_ns;
  opts.cz_layer_ns = model.cz_layer_ns;
  opts.coupler_orientation = coupler_orientation(lattice);
  auto passes = default_passes();
  if (dynamical_decoupling) passes.push_back("dd");
  return compile(build_floquet_circuit(lattice, realization), passes, opts);
}

ObservableSeries evolve_noisy(const Lattice& lattice, const DisorderRealization& realization,
                              const std::vector<Observable>& observables, int periods, const NoiseModel& model,
                              int trajectories, std::uint64_t master_seed, std::uint64_t realization_index,
                              bool dynamical_decoupling) {
  if (periods < 0) throw std::invalid_argument("evolve_noisy: periods must be >= 0");
  if (trajectories < 1) throw std::invalid_argument("evolve_noisy: need at least one trajectory");
  model.validate();
  const CompiledCircuit period = compile_floquet_period(lattice, realization, model, dynamical_decoupling);
  const LayerNoise noise = LayerNoise::from_model(model);
  ObservableSeries out = zero_series(observables.size(), periods);
  const double w = 1.0 / trajectories;
  for (int t = 0; t < trajectories; ++t) {
    CounterRng rng = trajectory_rng(master_seed, realization_index, static_cast<std::uint64_t>(t));
    StateVector s = StateVector::basis(lattice.num_qubits(), realization.initial_bits);
    record(s, observables, out, 0, w);
    for (int n = 1; n <= periods; ++n) {
      apply_noisy_circuit(s, period, noise, rng);
      record(s, observables, out, static_cast<std::size_t>(n), w);
    }
  }
  return out;
}

}  // namespace ftl
