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


// Command-line front end: one subcommand per experiment.

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include "ftl/core/parallel.hpp"
#include "ftl/expctl/config.hpp"
#include "ftl/expctl/runners.hpp"

namespace {

struct CommonArgs {
  std::string config;
  std::string out;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::size_t workers = 0;
  bool no_noise = false;
};

void add_common(CLI::App* sub, CommonArgs& a) {
  sub->add_option("--config", a.config, "INI configuration file (or a manifest.json)")->required();
  sub->add_option("--out", a.out, "Output directory (overrides [output] directory)");
  sub->add_option("--seed", a.seed, "Master seed (overrides [disorder] master_seed)");
  sub->add_option("--workers", a.workers, "Worker threads (falls back to FTL_WORKERS, then 1)");
  sub->add_flag("--no-noise", a.no_noise, "Force the noiseless simulator");
}

ftl::ExperimentConfig resolve(const CommonArgs& a, const CLI::App* sub) {
  ftl::ExperimentConfig c = ftl::load_config(a.config);
  if (!a.out.empty()) c.output_dir = a.out;
  if (sub->count("--seed") > 0) c.master_seed = a.seed;
  if (a.no_noise) c.noise.enabled = false;
  c.validate();
  return c;
}

int run(const std::string& name, const ftl::ExperimentConfig& c, const ftl::RunOptions& opt) {
  if (name == "dynamics") {
    const auto r = ftl::run_dynamics(c, opt);
    for (std::size_t o = 0; o < r.operators.size(); ++o)
      if (!r.summary[o].mean.empty())
        std::cout << r.operators[o] << ": mean at final period " << r.summary[o].mean.back() << "\n";
  } else if (name == "eigenstate") {
    const auto r = ftl::run_eigenstate_tee(c, opt);
    for (const auto& p : r.tee)
      if (p.n == 0 || p.n == static_cast<int>(r.values.front().mean.size()) - 1)
        std::cout << "S_topo[" << p.division << "] n=" << p.n << ": " << p.mean.s_topo << " +- "
                  << p.s_topo_stderr << "\n";
  } else if (name == "sweep") {
    const auto r = ftl::run_bfield_sweep(c, opt);
    for (std::size_t b = 0; b < r.b_values.size(); ++b)
      std::cout << "B=" << r.b_values[b] << " amplitude " << r.amplitude[b] << "\n";
  } else if (name == "lifetime") {
    const auto r = ftl::run_lifetime_scaling(c, opt);
    for (std::size_t s = 0; s < r.sizes.size(); ++s)
      std::cout << "N=" << r.sizes[s] << " tau*=" << r.lifetimes[s].tau_star
                << (r.lifetimes[s].censored ? " (censored)" : "") << "\n";
    if (!r.fitted) std::cout << r.diagnostic << "\n";
  } else if (name == "synth") {
    const auto r = ftl::run_synth(c, opt);
    std::cout << "loss " << r.verified_loss << ", " << r.circuit.size() << " gates\n";
    if (!r.round_trip) {
      std::cerr << "ftl: synthesized circuit failed the text round trip\n";
      return 1;
    }
  } else if (name == "spectrum") {
    const auto r = ftl::run_spectrum(c, opt);
    std::cout << r.size() << " spectra written\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Floquet topological lattice experiments"};
  app.require_subcommand(1);
  CommonArgs args;
  const char* names[][2] = {
      {"dynamics", "Disordered Floquet dynamics of logical strings"},
      {"eigenstate", "Stabilizer eigenstate preparation and topological entanglement entropy"},
      {"sweep", "Subharmonic amplitude versus field strength"},
      {"lifetime", "Lifetime of the logical string versus system size"},
      {"synth", "Circuit synthesis for a Pauli evolution target"},
      {"spectrum", "Recompute spectra from an existing summary.csv"},
  };
  for (const auto& n : names) add_common(app.add_subcommand(n[0], n[1]), args);
  CLI11_PARSE(app, argc, argv);

  const CLI::App* sub = app.get_subcommands().front();
  try {
    const ftl::ExperimentConfig c = resolve(args, sub);
    ftl::RunOptions opt;
    opt.workers = ftl::resolve_workers(args.workers);
    return run(sub->get_name(), c, opt);
  } catch (const std::exception& e) {
    std::cerr << "ftl: " << e.what() << "\n";
    return 1;
  }
}
