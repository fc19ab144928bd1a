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


// Acceptance run: one PASS or FAIL line per criterion, with the measured
// numbers next to the thresholds.
//
//   acceptance [--only 1,3,...] [--known-red 7,...]
//
// The exit status counts failures that are not listed in --known-red, so a
// documented red criterion keeps its FAIL line without breaking the build.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ftl/analysis/floquet_spectrum.hpp"
#include "ftl/circuits/builders.hpp"
#include "ftl/circuits/circuit_io.hpp"
#include "ftl/circuits/compile.hpp"
#include "ftl/core/parallel.hpp"
#include "ftl/core/state_vector.hpp"
#include "ftl/expctl/config.hpp"
#include "ftl/expctl/evolution.hpp"
#include "ftl/expctl/runners.hpp"
#include "ftl/expctl/tables.hpp"
#include "ftl/lattice/disorder.hpp"
#include "ftl/noise/channels.hpp"
#include "ftl/noise/noise_model.hpp"
#include "ftl/synth/block_graph.hpp"
#include "ftl/synth/optimize.hpp"
#include "support.hpp"

using namespace ftl;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::size_t g_workers = 1;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RunOptions in_memory() { return {g_workers, false}; }

// 1 ------------------------------------------------------------------------
void subharmonic_exactness(Outcome& o) {
  ExperimentConfig c;
  c.realizations = 4;
  c.periods = 20;
  const auto r = run_dynamics(c, in_memory());
  double z_err = 0.0, x_err = 0.0;
  for (std::size_t rr = 0; rr < r.values.size(); ++rr)
    for (std::size_t k = 0; k < r.values[rr].size(); ++k)
      for (std::size_t n = 0; n < r.values[rr][k].size(); ++n) {
        const double v = r.values[rr][k][n];
        if (r.operators[k].rfind("Z_L", 0) == 0)
          z_err = std::max(z_err, std::abs(r.signs[rr][k] * v - (n % 2 == 0 ? 1.0 : -1.0)));
        else
          x_err = std::max(x_err, std::abs(v));
      }
  o.detail << "max |Z_L - (-1)^n| = " << z_err << ", max |X_L| = " << x_err;
  o.require(z_err < 1e-8, "Z_L error < 1e-8");
  o.require(x_err < 1e-8, "X_L error < 1e-8");
}

// 2 ------------------------------------------------------------------------
void pi_pairing(Outcome& o) {
  const Lattice lat = build_lattice(3, 2);
  double worst = 0.0;
  std::size_t count = 0;
  for (std::uint64_t r = 0; r < 5; ++r) {
    const auto phases = floquet_eigenphases(lat, sample_disorder(lat, 0.0, realization_seed(1, r)));
    count = phases.size();
    worst = std::max(worst, max_pi_pair_deviation(phases));
  }
  o.detail << count << " eigenphases, worst pi-pair deviation " << worst;
  o.require(count == 64, "64 eigenphases");
  o.require(worst < 1e-8, "deviation < 1e-8");
}

// 3 ------------------------------------------------------------------------
void eigenstate_tee(Outcome& o) {
  ExperimentConfig c;
  const auto r = run_eigenstate_tee(c, in_memory());
  double stab = 0.0, xl = 0.0, zl = 0.0;
  int stabilizers = 0;
  for (std::size_t k = 0; k < r.operators.size(); ++k) {
    const double v = r.values[k].mean[0];
    const std::string& name = r.operators[k];
    if (name.rfind("X_L", 0) == 0) {
      xl = std::max(xl, std::abs(v - 1.0));
    } else if (name.rfind("Z_L", 0) == 0) {
      zl = std::max(zl, std::abs(v));
    } else {
      ++stabilizers;
      stab = std::max(stab, std::abs(v - 1.0));
    }
  }
  o.detail << stabilizers << " stabilizers (worst " << stab << "), |X_L - 1| " << xl << ", |Z_L| " << zl;
  o.require(stabilizers == 17 && stab < 1e-10, "17 stabilizers at +1");
  o.require(xl < 1e-10 && zl < 1e-10, "logical strings");
  for (const auto& p : r.tee) {
    const double err = std::abs(p.mean.s_topo - TeeResult::expected);
    o.detail << "; S_topo[" << p.division << "] = " << std::setprecision(12) << p.mean.s_topo << std::setprecision(6);
    o.require(err < 1e-8, "S_topo = -ln 2 (" + p.division + ")");
  }
  o.require(r.tee.size() == 2, "both divisions");
}

// 4 ------------------------------------------------------------------------
void compiler_soundness(Outcome& o) {
  const Lattice l = build_lattice(3, 3);
  const int n = l.num_qubits();
  CounterRng rng(5);
  double worst_builder = 0.0;
  for (int weight : {2, 4}) {
    const auto it = std::find_if(l.plaquettes().begin(), l.plaquettes().end(),
                                 [&](const Plaquette& p) { return p.weight() == weight; });
    const PauliString zs = PauliString::uniform(n, it->qubits, Pauli::Z);
    for (int k = 0; k < 20; ++k) {
      const double a = testing::random_angle(rng);
      const DenseMatrix u = circuit_unitary(build_plaquette_evolution(*it, a, n));
      worst_builder = std::max(worst_builder, phase_distance(u, pauli_evolution_matrix(zs, a)));
    }
  }
  const std::vector<std::vector<std::string>> pipelines{
      {"decompose"}, {"merge_u3"}, {"layerize"}, {"align_right"}, {"layerize", "group_cz"}, {"layerize", "dd"},
      {"decompose", "merge_u3", "layerize", "group_cz", "dd"}};
  double worst_pass = 0.0;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const Circuit c = testing::random_circuit(seed == 1 ? 10 : 6, 60, seed);
    const DenseMatrix u = circuit_unitary(c);
    for (const auto& p : pipelines)
      worst_pass = std::max(worst_pass, phase_distance(circuit_unitary(compile(c, p).circuit), u));
  }
  const Lattice big = build_lattice(3, 6);
  CompileOptions opt;
  opt.coupler_orientation = coupler_orientation(big);
  const auto cc = compile(build_floquet_circuit(big, sample_disorder(big, 0.1, 2)), default_passes(), opt);
  const std::size_t cz = cc.stats.gate_counts.at("cz");
  o.detail << "builder distance " << worst_builder << ", pass distance " << worst_pass << ", CZ per period " << cz;
  o.require(worst_builder < 1e-9, "builder vs exponential");
  o.require(worst_pass < 1e-9, "passes preserve the unitary");
  o.require(cz <= 80, "<= 80 CZ");
}

// 5 ------------------------------------------------------------------------
void synthesis(Outcome& o) {
  int successes = 0;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    ExperimentConfig c;
    c.master_seed = seed;
    c.synth_target = "ZZ";
    const auto r = run_synth(c, in_memory());
    o.detail << "seed " << seed << " loss " << r.verified_loss << "; ";
    if (r.verified_loss < 1e-4) ++successes;
  }
  const BlockGraph g = build_block_graph(3);
  const AnsatzPath p{{1, 4, 2, 5, 3, 4}};
  CounterRng rng(12);
  std::vector<double> theta(static_cast<std::size_t>(p.param_count(g)));
  for (auto& t : theta) t = testing::random_angle(rng);
  const DenseMatrix target = testing::random_unitary(8, 5);
  double worst = 0.0;
  for (LossForm f : {LossForm::Real, LossForm::Modulus}) {
    const auto ps = loss_gradient(theta, g, p, target, f, GradMode::ParameterShift);
    const auto fd = loss_gradient(theta, g, p, target, f, GradMode::FiniteDifference, 1e-5);
    for (std::size_t k = 0; k < ps.size(); ++k) worst = std::max(worst, std::abs(ps[k] - fd[k]));
  }
  o.detail << successes << "/3 seeds below 1e-4, gradient mismatch " << worst;
  o.require(successes >= 2, ">= 2 of 3 seeds");
  o.require(worst < 1e-6, "parameter shift vs finite differences");
}

// 6 ------------------------------------------------------------------------
void noise_channels(Outcome& o) {
  CounterRng rng(21);
  double kraus = 0.0;
  for (int k = 0; k < 200; ++k) {
    DecoherenceProbabilities p;
    p.p0 = rng.uniform();
    p.p1 = (1.0 - p.p0) * rng.uniform();
    DenseMatrix sum(2);
    for (const auto& m : thermal_kraus(p)) sum += m.adjoint() * m;
    kraus = std::max(kraus, testing::max_abs_diff(sum.data(), DenseMatrix::identity(2).data()));
  }
  o.detail << "Kraus normalization " << kraus;
  o.require(kraus < 1e-12, "Kraus normalization");

  const int trajectories = 10000;
  const double t1 = 163.0;
  for (double t_us : {20.0, 100.0, 300.0}) {
    const auto p = decoherence_probabilities(t_us * 1000.0, t1, 100.0);
    double sum = 0.0, sum2 = 0.0;
    for (int t = 0; t < trajectories; ++t) {
      CounterRng r = trajectory_rng(31, 0, static_cast<std::uint64_t>(t));
      StateVector s = StateVector::basis(1, 1);
      apply_stochastic_decoherence(s, 0, p, r);
      // Excited state counted as +1 here, matching the decay formula below.
      const double z = -z_expectation(s, 0);
      sum += z;
      sum2 += z * z;
    }
    const double mean = sum / trajectories;
    const double se = std::sqrt((sum2 / trajectories - mean * mean) / (trajectories - 1));
    const double expected = 2.0 * std::exp(-t_us / t1) - 1.0;
    o.detail << "; T1 t=" << t_us << "us: " << mean << " vs " << expected << " (se " << se << ")";
    o.require(std::abs(mean - expected) < 3.0 * se, "T1 decay within 3 se");
  }

  const double e_p = 0.2;
  const int trials = 10000;
  double sum = 0.0, sum2 = 0.0;
  for (int t = 0; t < trials; ++t) {
    CounterRng r(41, static_cast<std::uint64_t>(t));
    StateVector s(1);
    const int qs[1] = {0};
    apply_stochastic_depolarizing(s, qs, e_p, r);
    const double z = z_expectation(s, 0);
    sum += z;
    sum2 += z * z;
  }
  const double mean = sum / trials;
  const double se = std::sqrt((sum2 / trials - mean * mean) / (trials - 1));
  o.detail << "; depolarizing <sz> " << mean << " vs " << 1.0 - 4.0 / 3.0 * e_p << " (se " << se << ")";
  o.require(std::abs(mean - (1.0 - 4.0 / 3.0 * e_p)) < 3.0 * se, "depolarizing within 3 se");
}

// 7 ------------------------------------------------------------------------
void crossover(Outcome& o) {
  ExperimentConfig c;
  c.realizations = 24;
  const auto r = run_bfield_sweep(c, in_memory());
  for (std::size_t b = 0; b < r.b_values.size(); ++b)
    o.detail << "B=" << r.b_values[b] << ":" << std::setprecision(4) << r.amplitude[b] << " ";
  o.detail << std::setprecision(6);
  for (std::size_t b = 0; b + 1 < r.b_values.size(); ++b) {
    const double pooled = std::hypot(r.stderr_[b], r.stderr_[b + 1]);
    o.require(r.amplitude[b + 1] <= r.amplitude[b] + 2.0 * pooled,
              "non-increasing at B=" + format_double(r.b_values[b + 1]));
  }
  auto at = [&](double b) {
    const auto it = std::find(r.b_values.begin(), r.b_values.end(), b);
    return r.amplitude[static_cast<std::size_t>(it - r.b_values.begin())];
  };
  o.require(at(0.1) >= 0.95 * at(0.0), "plateau amplitude(0.1) >= 0.95 amplitude(0)");
  o.require(at(3.0) <= 0.15, "amplitude(3.0) <= 0.15");
}

// 8 ------------------------------------------------------------------------
void lifetime_ordering(Outcome& o) {
  ExperimentConfig c;
  c.b_radius = 0.1;
  c.realizations = 200;
  c.lifetime_sizes = {6, 9};
  c.horizon = 10000;
  const auto r = run_lifetime_scaling(c, in_memory());
  for (std::size_t s = 0; s < r.sizes.size(); ++s)
    o.detail << "tau*(" << r.sizes[s] << ") = " << r.lifetimes[s].tau_star << (r.lifetimes[s].censored ? "+" : "")
             << ", ";
  o.require(r.lifetimes[1].tau_star > r.lifetimes[0].tau_star, "tau*(9) > tau*(6)");
  o.require(r.fitted, "fit available");
  if (r.fitted) o.detail << "slope " << r.fit.slope;
  o.require(r.fitted && r.fit.slope > 0.0, "slope > 0");
}

// 9 ------------------------------------------------------------------------
void noisy_match(Outcome& o) {
  ExperimentConfig c;
  c.realizations = 4;
  c.periods = 20;
  c.observables = {"ZL1"};
  c.noise = NoiseModel::device_defaults(100.0);
  c.trajectories = 24;
  const auto r = run_dynamics(c, in_memory());
  const auto& s = r.summary[0];
  bool alternating = true, monotone = true;
  for (std::size_t n = 0; n < s.mean.size(); ++n) {
    if ((s.mean[n] > 0.0) != (n % 2 == 0)) alternating = false;
    if (n > 0 && std::abs(s.mean[n]) > std::abs(s.mean[n - 1]) + 2.0 * std::hypot(s.stderr_[n], s.stderr_[n - 1]))
      monotone = false;
  }
  const auto& sp = r.spectra[0];
  const auto peak = static_cast<std::size_t>(
      std::max_element(sp.amplitudes.begin(), sp.amplitudes.end()) - sp.amplitudes.begin());
  const double bin = 1.0 / static_cast<double>(sp.amplitudes.size());
  o.detail << "|Z_L1| " << s.mean[0] << " -> " << std::abs(s.mean.back()) << ", dominant omega/omega0 = "
           << sp.omega_ratios[peak];
  o.require(alternating, "sign alternation through n = 20");
  o.require(monotone, "monotone envelope within 2 se");
  o.require(std::abs(sp.omega_ratios[peak] - 0.5) <= bin, "subharmonic peak dominates");
}

// 10 -----------------------------------------------------------------------
std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file()) files[fs::relative(e.path(), dir).string()] = read_text_file(e.path().string());
  return files;
}

void determinism(Outcome& o) {
  ::setenv("SOURCE_DATE_EPOCH", "1700000000", 1);
  const fs::path root = fs::temp_directory_path() / "ftl_acceptance_determinism";
  fs::remove_all(root);
  ExperimentConfig base;
  base.rows = 3;
  base.cols = 2;
  base.realizations = 3;
  base.periods = 6;
  base.b_radius = 0.3;
  base.b_values = {0.0, 0.5, 2.0};
  base.horizon = 300;
  base.realizations = 4;

  struct Job {
    std::string name;
    std::function<void(ExperimentConfig&, const RunOptions&)> run;
  };
  const std::vector<Job> jobs{
      {"dynamics", [](ExperimentConfig& c, const RunOptions& r) { run_dynamics(c, r); }},
      {"spectrum", [](ExperimentConfig& c, const RunOptions& r) { run_dynamics(c, r); run_spectrum(c, r); }},
      {"noisy-dynamics",
       [](ExperimentConfig& c, const RunOptions& r) {
         c.noise = NoiseModel::device_defaults(100.0);
         c.trajectories = 4;
         run_dynamics(c, r);
       }},
      {"eigenstate",
       [](ExperimentConfig& c, const RunOptions& r) {
         c.rows = 3;
         c.cols = 6;
         c.quench = true;
         c.periods = 1;
         c.realizations = 2;
         run_eigenstate_tee(c, r);
       }},
      {"sweep", [](ExperimentConfig& c, const RunOptions& r) { run_bfield_sweep(c, r); }},
      {"lifetime", [](ExperimentConfig& c, const RunOptions& r) { run_lifetime_scaling(c, r); }},
      {"synth", [](ExperimentConfig& c, const RunOptions& r) { run_synth(c, r); }},
  };
  for (const auto& job : jobs) {
    std::vector<std::map<std::string, std::string>> runs;
    for (std::size_t workers : {1, 3}) {
      ExperimentConfig c = base;
      c.output_dir = (root / (job.name + "_w" + std::to_string(workers))).string();
      job.run(c, {workers, true});
      auto files = snapshot(c.output_dir);
      // Manifests name their own output directory.
      for (auto& [name, m] : files) {
        if (name.ends_with(".json"))
          for (std::size_t pos; (pos = m.find(c.output_dir)) != std::string::npos;)
            m.replace(pos, c.output_dir.size(), "<out>");
      }
      runs.push_back(std::move(files));
    }
    const bool same = runs[0] == runs[1] && !runs[0].empty();
    o.detail << job.name << ":" << (same ? "same" : "DIFFERENT") << "(" << runs[0].size() << " files) ";
    o.require(same, job.name + " identical across 1 and 3 workers");
  }
  fs::remove_all(root);
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;  // 0 means no runtime bound
  void (*run)(Outcome&);
};

std::set<int> parse_list(const std::string& s) {
  std::set<int> out;
  std::stringstream in(s);
  for (std::string tok; std::getline(in, tok, ',');)
    if (!tok.empty()) out.insert(std::stoi(tok));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only, known_red;
  for (int a = 1; a + 1 < argc; a += 2) {
    const std::string flag = argv[a];
    if (flag == "--only") only = parse_list(argv[a + 1]);
    else if (flag == "--known-red") known_red = parse_list(argv[a + 1]);
    else {
      std::cerr << "acceptance: unknown option " << flag << "\n";
      return 2;
    }
  }
  g_workers = resolve_workers(0);
  const std::vector<Criterion> criteria{
      {1, "subharmonic exactness", 120, subharmonic_exactness},
      {2, "pi-paired Floquet spectrum", 60, pi_pairing},
      {3, "eigenstate and TEE", 60, eigenstate_tee},
      {4, "builder and compiler soundness", 0, compiler_soundness},
      {5, "synthesis", 0, synthesis},
      {6, "noise-channel fidelity", 120, noise_channels},
      {7, "crossover trend", 600, crossover},
      {8, "lifetime ordering", 3600, lifetime_ordering},
      {9, "noisy qualitative match", 0, noisy_match},
      {10, "determinism across worker counts", 0, determinism},
  };
  int unexpected = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(t0);
    if (c.limit_s > 0) o.require(secs < c.limit_s, "runtime under " + format_double(c.limit_s) + " s");
    const bool red = known_red.count(c.id) > 0;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << ", "
              << std::fixed << std::setprecision(1) << secs << " s)" << std::defaultfloat << std::setprecision(6)
              << ": " << o.detail.str() << (!o.pass && red ? " (known red)" : "") << std::endl;
    if (!o.pass && !red) ++unexpected;
  }
  return unexpected;
}
