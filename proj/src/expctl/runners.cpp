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


#include "ftl/expctl/runners.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ftl/circuits/builders.hpp"
#include "ftl/circuits/circuit_io.hpp"
#include "ftl/core/parallel.hpp"
#include "ftl/core/state_vector.hpp"
#include "ftl/expctl/evolution.hpp"
#include "ftl/expctl/manifest.hpp"
#include "ftl/expctl/svg.hpp"
#include "ftl/expctl/tables.hpp"
#include "ftl/noise/channels.hpp"
#include "ftl/synth/loss.hpp"
#include "ftl/synth/simplify.hpp"

namespace ftl {

namespace {

std::string f(double x) { return format_double(x); }
std::string i(long long x) { return std::to_string(x); }

void record_noise(Manifest& m, const NoiseModel& model) {
  if (!model.enabled) {
    m.derived()["noise"] = "disabled";
    return;
  }
  const auto rates = derive_depolarizing_rates(model);
  auto& d = m.derived()["depolarizing_e_p"];
  d["sq"] = rates.sq;
  d["cz"] = rates.cz;
  d["cz_idle"] = rates.cz_idle;
  const auto sq = decoherence_probabilities(model.sq_layer_ns, model.t1_us, model.t2());
  const auto cz = decoherence_probabilities(model.cz_layer_ns, model.t1_us, model.t2());
  m.derived()["decoherence"] = {{"sq_p0", sq.p0}, {"sq_p1", sq.p1}, {"cz_p0", cz.p0}, {"cz_p1", cz.p1}};
  for (const auto& c : rates.clamped)
    m.add_deviation("depolarizing rate for gate class " + c + " clamped at 0 (decoherence alone exceeds the median)");
}

void write_table(const RunOptions& opt, Manifest& m, const std::string& dir, const std::string& name,
                 const Table& t) {
  if (!opt.write_files) return;
  write_text_file(dir + "/" + name, t.to_csv());
  m.add_output(name);
}

void write_plot(const ExperimentConfig& cfg, const RunOptions& opt, Manifest& m, const std::string& name,
                const std::string& title, const std::string& xl, const std::string& yl,
                const std::vector<PlotSeries>& series) {
  if (!opt.write_files || !cfg.write_svg) return;
  write_text_file(cfg.output_dir + "/plots/" + name, line_chart_svg(title, xl, yl, series));
  m.add_output("plots/" + name);
}

std::vector<std::uint64_t> seeds_for(std::uint64_t master, int count) {
  std::vector<std::uint64_t> s;
  for (int r = 0; r < count; ++r) s.push_back(realization_seed(master, static_cast<std::uint64_t>(r)));
  return s;
}

std::vector<double> index_axis(std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = static_cast<double>(k);
  return x;
}

ObservableSeries evolve(const ExperimentConfig& cfg, const Lattice& lat, const DisorderRealization& dis,
                        const std::vector<Observable>& obs, int periods, std::uint64_t r) {
  if (cfg.noise.enabled)
    return evolve_noisy(lat, dis, obs, periods, cfg.noise, cfg.trajectories, cfg.master_seed, r,
                        cfg.dynamical_decoupling);
  return evolve_noiseless(lat, dis, obs, periods);
}

}  // namespace

NoiseModel eigenstate_noise_model(const ExperimentConfig& config) {
  NoiseModel m = config.noise;
  const NoiseModel prep = NoiseModel::device_defaults(1.0, true);
  if (!config.cz_layer_ns_set) m.cz_layer_ns = prep.cz_layer_ns;
  if (!config.eps_cz_idle_set) m.eps_cz_idle = prep.eps_cz_idle;
  return m;
}

// ---------------------------------------------------------------------------

DynamicsResult run_dynamics(const ExperimentConfig& cfg, const RunOptions& opt) {
  cfg.validate();
  const Lattice lat = build_lattice(cfg.rows, cfg.cols);
  const auto obs = make_observables(lat, cfg.observables);
  const auto R = static_cast<std::size_t>(cfg.realizations);
  Manifest manifest("dynamics", cfg);
  record_noise(manifest, cfg.noise);
  manifest.add_seed_list("realizations", seeds_for(cfg.master_seed, cfg.realizations));

  DynamicsResult res;
  res.values.resize(R);
  res.signs.assign(R, std::vector<int>(obs.size(), 1));
  parallel_for(R, opt.workers, [&](std::size_t r) {
    const auto dis = sample_disorder(lat, cfg.b_radius, realization_seed(cfg.master_seed, r));
    res.values[r] = evolve(cfg, lat, dis, obs, cfg.periods, r);
    for (std::size_t o = 0; o < obs.size(); ++o) {
      const int s = initial_sign(obs[o].op, dis.initial_bits);
      res.signs[r][o] = s == 0 ? 1 : s;
    }
  });

  for (const auto& o : obs) res.operators.push_back(o.label);
  for (std::size_t o = 0; o < obs.size(); ++o) {
    std::vector<std::vector<double>> aligned(R);
    for (std::size_t r = 0; r < R; ++r) {
      aligned[r] = res.values[r][o];
      for (double& v : aligned[r]) v *= res.signs[r][o];
    }
    res.summary.push_back(mean_and_stderr(aligned));
  }
  // Weight-rooted autocorrelators of the diagonal strings.
  for (std::size_t o = 0; o < obs.size(); ++o) {
    if (!obs[o].op.is_diagonal()) continue;
    std::vector<std::vector<double>> a(R);
    for (std::size_t r = 0; r < R; ++r) a[r] = autocorrelator(res.signs[r][o], res.values[r][o], obs[o].op.weight());
    res.operators.push_back("A[" + obs[o].label + "]");
    res.summary.push_back(mean_and_stderr(a));
  }
  if (cfg.periods >= 1)
    for (const auto& s : res.summary) res.spectra.push_back(fourier_spectrum(s.mean));

  Table real({"realization", "operator", "n", "value"});
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t o = 0; o < obs.size(); ++o)
      for (std::size_t n = 0; n < res.values[r][o].size(); ++n)
        real.add({i(static_cast<long long>(r)), obs[o].label, i(static_cast<long long>(n)), f(res.values[r][o][n])});
  Table summary({"operator", "n", "mean", "stderr"});
  for (std::size_t o = 0; o < res.operators.size(); ++o)
    for (std::size_t n = 0; n < res.summary[o].mean.size(); ++n)
      summary.add({res.operators[o], i(static_cast<long long>(n)), f(res.summary[o].mean[n]),
                   f(res.summary[o].stderr_[n])});
  Table spectrum({"operator", "omega_ratio", "amplitude"});
  for (std::size_t o = 0; o < res.spectra.size(); ++o)
    for (std::size_t k = 0; k < res.spectra[o].amplitudes.size(); ++k)
      spectrum.add({res.operators[o], f(res.spectra[o].omega_ratios[k]), f(res.spectra[o].amplitudes[k])});
  if (cfg.periods < 1) manifest.add_deviation("spectrum skipped: fewer than two samples per operator");

  const std::string& dir = cfg.output_dir;
  write_table(opt, manifest, dir, "realizations.csv", real);
  write_table(opt, manifest, dir, "summary.csv", summary);
  write_table(opt, manifest, dir, "spectrum.csv", spectrum);
  std::vector<PlotSeries> series;
  for (std::size_t o = 0; o < res.operators.size() && series.size() < 8; ++o)
    if (res.operators[o].rfind("A[", 0) != 0)
      series.push_back({res.operators[o], index_axis(res.summary[o].mean.size()), res.summary[o].mean});
  write_plot(cfg, opt, manifest, "dynamics.svg", "Sign-aligned expectation values", "period n", "mean", series);
  if (opt.write_files) manifest.write(dir);
  return res;
}

// ---------------------------------------------------------------------------

namespace {

struct RegionSets {
  std::string division;
  TeeRegions regions;
  std::vector<std::vector<int>> sets;  // A, B, C, AB, AC, BC, ABC
};

RegionSets make_sets(const std::string& name, const TeeRegions& r) {
  auto cat = [](std::initializer_list<const std::vector<int>*> parts) {
    std::vector<int> out;
    for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
    return out;
  };
  return {name, r, {r.a, r.b, r.c, cat({&r.a, &r.b}), cat({&r.a, &r.c}), cat({&r.b, &r.c}), cat({&r.a, &r.b, &r.c})}};
}

TeeResult tee_from(const RegionSets& rs, const std::vector<DenseMatrix>& rdms) {
  return topo_entropy(
      [&](std::span<const int> keep) {
        for (std::size_t k = 0; k < rs.sets.size(); ++k)
          if (std::equal(keep.begin(), keep.end(), rs.sets[k].begin(), rs.sets[k].end())) return rdms[k];
        throw std::logic_error("tee_from: unexpected region request");
      },
      rs.regions);
}

}  // namespace

EigenstateResult run_eigenstate_tee(const ExperimentConfig& cfg, const RunOptions& opt) {
  cfg.validate();
  const Lattice lat = build_lattice(cfg.rows, cfg.cols);
  const int nq = lat.num_qubits();
  std::vector<RegionSets> divisions;
  if (cfg.tee_division == "custom") {
    divisions.push_back(make_sets("custom", {cfg.region_a, cfg.region_b, cfg.region_c}));
  } else {
    if (cfg.tee_division != "six") divisions.push_back(make_sets("four", default_tee_regions(lat, "four")));
    if (cfg.tee_division != "four") divisions.push_back(make_sets("six", default_tee_regions(lat, "six")));
  }
  for (const auto& d : divisions) {
    for (int q : d.sets.back())
      if (q < 0 || q >= nq) throw std::invalid_argument("eigenstate: region qubit " + std::to_string(q) + " is off the lattice");
    if (d.sets.back().size() > 12)
      throw std::invalid_argument("eigenstate: division " + d.division + " exceeds the 12-qubit dense-trace limit");
  }

  std::vector<Observable> ops;
  for (std::size_t p = 0; p < lat.plaquettes().size(); ++p)
    ops.push_back({(lat.plaquettes()[p].kind == PlaquetteKind::Z ? "A_" : "B_") + std::to_string(p),
                   lat.plaquette_operator(p)});
  for (const auto& o : make_observables(lat, {"ZL", "XL"})) ops.push_back(o);

  const int P = cfg.quench ? cfg.periods : 0;
  const std::size_t R = cfg.quench ? static_cast<std::size_t>(cfg.realizations) : 1;
  const bool noisy = cfg.noise.enabled;
  const NoiseModel model = noisy ? eigenstate_noise_model(cfg) : cfg.noise;
  const Circuit prep = build_eigenstate_circuit(lat);

  Manifest manifest("eigenstate", cfg);
  record_noise(manifest, model);
  if (cfg.quench) manifest.add_seed_list("realizations", seeds_for(cfg.master_seed, cfg.realizations));

  // per realization: values[o][n], tee[d][n], fidelity[d][n]
  struct PerRealization {
    std::vector<std::vector<double>> values;
    std::vector<std::vector<TeeResult>> tee;
    std::vector<std::vector<double>> fidelity;
  };
  std::vector<PerRealization> per(R);
  const std::size_t steps = static_cast<std::size_t>(P) + 1;

  parallel_for(R, opt.workers, [&](std::size_t r) {
    const auto dis = sample_disorder(lat, cfg.quench ? cfg.b_radius : 0.0, realization_seed(cfg.master_seed, r));
    const FloquetKernel kernel(lat, dis);
    PerRealization& out = per[r];
    out.values.assign(ops.size(), std::vector<double>(steps, 0.0));
    out.tee.assign(divisions.size(), std::vector<TeeResult>(steps));
    out.fidelity.assign(divisions.size(), std::vector<double>(steps, -1.0));

    // Ideal reduced states, also the reference for fidelities.
    std::vector<std::vector<std::vector<DenseMatrix>>> ideal(divisions.size(),
                                                             std::vector<std::vector<DenseMatrix>>(steps));
    StateVector s(nq);
    apply_circuit(s, prep);
    for (std::size_t n = 0; n < steps; ++n) {
      if (n > 0) kernel.step(s);
      for (std::size_t d = 0; d < divisions.size(); ++d)
        for (const auto& set : divisions[d].sets) ideal[d][n].push_back(partial_trace(s, set));
      if (!noisy)
        for (std::size_t o = 0; o < ops.size(); ++o) out.values[o][n] = pauli_expectation(s, ops[o].op);
    }
    if (!noisy) {
      for (std::size_t d = 0; d < divisions.size(); ++d)
        for (std::size_t n = 0; n < steps; ++n) out.tee[d][n] = tee_from(divisions[d], ideal[d][n]);
      return;
    }

    CompileOptions copts;
    copts.sq_layer_ns = model.sq_layer_ns;
    copts.cz_layer_ns = model.cz_layer_ns;
    copts.coupler_orientation = coupler_orientation(lat);
    auto passes = default_passes();
    if (cfg.dynamical_decoupling) passes.push_back("dd");
    const CompiledCircuit cprep = compile(prep, passes, copts);
    const CompiledCircuit cperiod = compile_floquet_period(lat, dis, model, cfg.dynamical_decoupling);
    const LayerNoise noise = LayerNoise::from_model(model);
    std::vector<std::vector<std::vector<DenseMatrix>>> avg(divisions.size(), std::vector<std::vector<DenseMatrix>>(steps));
    for (std::size_t d = 0; d < divisions.size(); ++d)
      for (std::size_t n = 0; n < steps; ++n)
        for (const auto& set : divisions[d].sets) avg[d][n].emplace_back(std::size_t{1} << set.size());
    const double w = 1.0 / cfg.trajectories;
    for (int t = 0; t < cfg.trajectories; ++t) {
      CounterRng rng = trajectory_rng(cfg.master_seed, r, static_cast<std::uint64_t>(t));
      StateVector q(nq);
      apply_noisy_circuit(q, cprep, noise, rng);
      for (std::size_t n = 0; n < steps; ++n) {
        if (n > 0) apply_noisy_circuit(q, cperiod, noise, rng);
        for (std::size_t o = 0; o < ops.size(); ++o) out.values[o][n] += w * pauli_expectation(q, ops[o].op);
        for (std::size_t d = 0; d < divisions.size(); ++d)
          for (std::size_t k = 0; k < divisions[d].sets.size(); ++k) {
            DenseMatrix rho = partial_trace(q, divisions[d].sets[k]);
            rho *= cplx{w, 0.0};
            avg[d][n][k] += rho;
          }
      }
    }
    for (std::size_t d = 0; d < divisions.size(); ++d)
      for (std::size_t n = 0; n < steps; ++n) {
        for (auto& m : avg[d][n]) m.set_hermitian_hint(true);
        out.tee[d][n] = tee_from(divisions[d], avg[d][n]);
        out.fidelity[d][n] = uhlmann_fidelity(avg[d][n].back(), ideal[d][n].back());
      }
  });

  EigenstateResult res;
  for (std::size_t o = 0; o < ops.size(); ++o) {
    res.operators.push_back(ops[o].label);
    std::vector<std::vector<double>> series(R);
    for (std::size_t r = 0; r < R; ++r) series[r] = per[r].values[o];
    res.values.push_back(mean_and_stderr(series));
  }
  for (std::size_t d = 0; d < divisions.size(); ++d)
    for (std::size_t n = 0; n < steps; ++n) {
      TeePoint pt;
      pt.division = divisions[d].division;
      pt.n = static_cast<int>(n);
      std::vector<std::vector<double>> topo(R);
      double fid = 0.0;
      for (std::size_t r = 0; r < R; ++r) {
        const TeeResult& t = per[r].tee[d][n];
        pt.mean.s_a += t.s_a / R;
        pt.mean.s_b += t.s_b / R;
        pt.mean.s_c += t.s_c / R;
        pt.mean.s_ab += t.s_ab / R;
        pt.mean.s_ac += t.s_ac / R;
        pt.mean.s_bc += t.s_bc / R;
        pt.mean.s_abc += t.s_abc / R;
        topo[r] = {t.s_topo};
        fid += per[r].fidelity[d][n] / R;
      }
      const auto st = mean_and_stderr(topo);
      pt.mean.s_topo = st.mean[0];
      pt.s_topo_stderr = st.stderr_[0];
      pt.fidelity = noisy ? fid : -1.0;
      res.tee.push_back(pt);
    }

  Table summary({"operator", "n", "mean", "stderr"});
  for (std::size_t o = 0; o < res.operators.size(); ++o)
    for (std::size_t n = 0; n < steps; ++n)
      summary.add({res.operators[o], i(static_cast<long long>(n)), f(res.values[o].mean[n]), f(res.values[o].stderr_[n])});
  Table tee({"division", "n", "region_label", "entropy_nats"});
  for (const auto& pt : res.tee) {
    const std::pair<const char*, double> rows[] = {{"A", pt.mean.s_a},   {"B", pt.mean.s_b},   {"C", pt.mean.s_c},
                                                   {"AB", pt.mean.s_ab}, {"AC", pt.mean.s_ac}, {"BC", pt.mean.s_bc},
                                                   {"ABC", pt.mean.s_abc}, {"s_topo", pt.mean.s_topo}};
    for (const auto& [label, v] : rows) tee.add({pt.division, i(pt.n), label, f(v)});
    summary.add({"S_topo[" + pt.division + "]", i(pt.n), f(pt.mean.s_topo), f(pt.s_topo_stderr)});
    if (noisy) summary.add({"F_ABC[" + pt.division + "]", i(pt.n), f(pt.fidelity), f(0.0)});
  }
  const std::string& dir = cfg.output_dir;
  write_table(opt, manifest, dir, "summary.csv", summary);
  write_table(opt, manifest, dir, "tee.csv", tee);
  if (P >= 1) {
    std::vector<PlotSeries> series;
    for (const auto& d : divisions) {
      PlotSeries s{"S_topo " + d.division, {}, {}};
      for (const auto& pt : res.tee)
        if (pt.division == d.division) {
          s.x.push_back(pt.n);
          s.y.push_back(pt.mean.s_topo);
        }
      series.push_back(s);
    }
    write_plot(cfg, opt, manifest, "tee.svg", "Topological entanglement entropy after the quench", "period n",
               "S_topo (nats)", series);
  }
  if (opt.write_files) manifest.write(dir);
  return res;
}

// ---------------------------------------------------------------------------

SweepResult run_bfield_sweep(const ExperimentConfig& cfg, const RunOptions& opt) {
  cfg.validate();
  if ((cfg.sweep_periods + 1) % 2 != 0)
    throw std::invalid_argument("sweep: sweep.periods must be odd so that n = 0..periods has an even sample count");
  const Lattice lat = build_lattice(cfg.rows, cfg.cols);
  const auto strings = make_observables(lat, {"ZL"});
  const std::size_t B = cfg.b_values.size(), R = static_cast<std::size_t>(cfg.realizations);
  const std::size_t N = static_cast<std::size_t>(cfg.sweep_periods) + 1;
  Manifest manifest("sweep", cfg);
  record_noise(manifest, cfg.noise);
  manifest.add_seed_list("realizations", seeds_for(cfg.master_seed, cfg.realizations));

  std::vector<std::vector<double>> signal(B * R);
  parallel_for(B * R, opt.workers, [&](std::size_t task) {
    const std::size_t b = task / R, r = task % R;
    const auto dis = sample_disorder(lat, cfg.b_values[b], realization_seed(cfg.master_seed, r));
    const auto v = evolve(cfg, lat, dis, strings, cfg.sweep_periods, r);
    std::vector<double> s(N, 0.0);
    for (std::size_t o = 0; o < strings.size(); ++o) {
      const int sign = initial_sign(strings[o].op, dis.initial_bits);
      for (std::size_t n = 0; n < N; ++n) s[n] += sign * v[o][n] / static_cast<double>(strings.size());
    }
    signal[task] = std::move(s);
  });

  SweepResult res;
  res.b_values = cfg.b_values;
  for (std::size_t b = 0; b < B; ++b) {
    std::vector<std::vector<double>> per(signal.begin() + static_cast<std::ptrdiff_t>(b * R),
                                         signal.begin() + static_cast<std::ptrdiff_t>((b + 1) * R));
    std::vector<std::vector<double>> amps(R), signed_amp(R);
    for (std::size_t r = 0; r < R; ++r) {
      amps[r] = {subharmonic_amplitude(fourier_spectrum(per[r]))};
      double c = 0.0;
      for (std::size_t n = 0; n < N; ++n) c += (n % 2 == 0 ? 1.0 : -1.0) * per[r][n];
      signed_amp[r] = {c / static_cast<double>(N)};
    }
    const auto mean = mean_and_stderr(per).mean;
    res.mean_signal.push_back(mean);
    res.amplitude.push_back(subharmonic_amplitude(fourier_spectrum(mean)));
    const auto a = mean_and_stderr(amps);
    res.stddev.push_back(a.stderr_[0] * std::sqrt(static_cast<double>(R)));
    res.stderr_.push_back(mean_and_stderr(signed_amp).stderr_[0]);
  }

  Table sweep({"b", "amplitude", "stddev", "stderr"});
  for (std::size_t b = 0; b < B; ++b)
    sweep.add({f(res.b_values[b]), f(res.amplitude[b]), f(res.stddev[b]), f(res.stderr_[b])});
  Table summary({"operator", "n", "mean", "stderr"});
  for (std::size_t b = 0; b < B; ++b)
    for (std::size_t n = 0; n < N; ++n)
      summary.add({"Z_L_avg[B=" + f(res.b_values[b]) + "]", i(static_cast<long long>(n)), f(res.mean_signal[b][n]),
                   f(0.0)});
  const std::string& dir = cfg.output_dir;
  write_table(opt, manifest, dir, "sweep.csv", sweep);
  write_table(opt, manifest, dir, "summary.csv", summary);
  write_plot(cfg, opt, manifest, "sweep.svg", "Subharmonic amplitude versus field strength", "B",
             "amplitude at omega/omega0 = 0.5", {{"amplitude", res.b_values, res.amplitude}});
  if (opt.write_files) manifest.write(dir);
  return res;
}

// ---------------------------------------------------------------------------

LifetimeRun run_lifetime_scaling(const ExperimentConfig& cfg, const RunOptions& opt) {
  cfg.validate();
  const std::size_t S = cfg.lifetime_sizes.size(), R = static_cast<std::size_t>(cfg.realizations);
  Manifest manifest("lifetime", cfg);
  record_noise(manifest, cfg.noise);
  manifest.add_seed_list("realizations", seeds_for(cfg.master_seed, cfg.realizations));

  std::vector<Lattice> lattices;
  std::vector<std::vector<Observable>> op;
  for (int n : cfg.lifetime_sizes) {
    const auto [rows, cols] = lifetime_lattice_shape(n);
    lattices.push_back(build_lattice(rows, cols));
    const auto& z = lattices.back().logical_z().front();
    op.push_back({{"Z_L1", z}});
    if (z.weight() != 3)
      manifest.add_deviation("size " + std::to_string(n) + ": logical Z string has weight " +
                             std::to_string(z.weight()) + ", not 3");
  }

  std::vector<std::vector<double>> aligned(S * R);
  parallel_for(S * R, opt.workers, [&](std::size_t task) {
    const std::size_t s = task / R, r = task % R;
    const auto dis = sample_disorder(lattices[s], cfg.b_radius, realization_seed(cfg.master_seed, r));
    auto v = evolve(cfg, lattices[s], dis, op[s], cfg.horizon, r)[0];
    const int sign = initial_sign(op[s][0].op, dis.initial_bits);
    for (double& x : v) x *= sign;
    aligned[task] = std::move(v);
  });

  LifetimeRun res;
  res.sizes = cfg.lifetime_sizes;
  Table summary({"operator", "n", "mean", "stderr"});
  std::vector<int> fit_sizes;
  std::vector<double> fit_tau;
  std::vector<bool> fit_cens;
  for (std::size_t s = 0; s < S; ++s) {
    std::vector<std::vector<double>> per(aligned.begin() + static_cast<std::ptrdiff_t>(s * R),
                                         aligned.begin() + static_cast<std::ptrdiff_t>((s + 1) * R));
    const auto st = mean_and_stderr(per);
    std::vector<double> abs_mean(st.mean.size());
    for (std::size_t n = 0; n < abs_mean.size(); ++n) abs_mean[n] = std::abs(st.mean[n]);
    res.lifetimes.push_back(extract_lifetime(abs_mean, cfg.threshold));
    const std::string label = "|Z_L|[N=" + std::to_string(res.sizes[s]) + "]";
    for (std::size_t n = 0; n < abs_mean.size(); ++n)
      summary.add({label, i(static_cast<long long>(n)), f(abs_mean[n]), f(st.stderr_[n])});
    res.abs_mean.push_back(std::move(abs_mean));
    fit_sizes.push_back(res.sizes[s]);
    fit_tau.push_back(std::max(res.lifetimes.back().tau_star, 1));
    fit_cens.push_back(res.lifetimes.back().censored);
  }
  try {
    res.fit = fit_exponential(fit_sizes, fit_tau, fit_cens);
    res.fitted = true;
  } catch (const std::invalid_argument& e) {
    res.diagnostic = std::string("exponential fit skipped: ") + e.what();
    manifest.add_deviation(res.diagnostic);
  }

  Table life({"N", "tau_star", "censored"});
  for (std::size_t s = 0; s < S; ++s)
    life.add({i(res.sizes[s]), i(res.lifetimes[s].tau_star), res.lifetimes[s].censored ? "true" : "false"});
  const std::string& dir = cfg.output_dir;
  write_table(opt, manifest, dir, "lifetime.csv", life);
  if (res.fitted) {
    Table fit({"slope", "intercept", "points"});
    fit.add({f(res.fit.slope), f(res.fit.intercept), i(static_cast<long long>(res.fit.residuals.size()))});
    write_table(opt, manifest, dir, "lifetime_fit.csv", fit);
    manifest.derived()["fit"] = {{"slope", res.fit.slope}, {"intercept", res.fit.intercept}};
  }
  write_table(opt, manifest, dir, "summary.csv", summary);
  std::vector<PlotSeries> series;
  for (std::size_t s = 0; s < S; ++s)
    series.push_back({"N=" + std::to_string(res.sizes[s]), index_axis(res.abs_mean[s].size()), res.abs_mean[s]});
  write_plot(cfg, opt, manifest, "lifetime.svg", "Averaged logical string magnitude", "period n", "|<Z_L>|", series);
  if (opt.write_files) manifest.write(dir);
  return res;
}

// ---------------------------------------------------------------------------

SynthRun run_synth(const ExperimentConfig& cfg, const RunOptions& opt) {
  cfg.validate();
  const PauliString p = PauliString::parse(cfg.synth_target);
  const DenseMatrix target = pauli_evolution_matrix(p, cfg.synth_angle);
  SearchOptions so;
  so.seed = cfg.master_seed;
  so.population = cfg.synth_population;
  so.generations = cfg.synth_generations;
  so.initial_depth = cfg.synth_initial_depth;
  so.depth_step = cfg.synth_depth_step;
  so.patience = cfg.synth_patience;
  so.workers = opt.workers;
  so.optimize.max_iters = cfg.synth_max_iters;
  so.optimize.form = loss_form_from_name(cfg.synth_form);

  Manifest manifest("synth", cfg);
  SynthRun res;
  res.search = neuroevolution_search(target, so);
  std::tie(res.circuit, res.params) = simplify(res.search.circuit, res.search.params);
  res.verified_loss = unitary_loss(circuit_unitary(res.circuit), target, so.optimize.form);

  const std::string text = circuit_to_string(res.circuit);
  res.round_trip = circuit_to_string(circuit_from_string(text)) == text;
  std::ostringstream params;
  write_params(params, res.params);

  manifest.derived()["search_loss"] = res.search.loss;
  manifest.derived()["verified_loss"] = res.verified_loss;
  manifest.derived()["loss_form"] = loss_form_name(res.search.form);
  manifest.derived()["generations"] = res.search.history.size();
  manifest.derived()["entangling_gates"] = res.circuit.count(GateKind::CZ) + res.circuit.count(GateKind::CRZ);
  manifest.derived()["round_trip"] = res.round_trip;
  if (res.verified_loss >= 1e-4) manifest.add_deviation("synthesized circuit did not reach loss 1e-4");

  Table hist({"generation", "best_loss"});
  for (std::size_t g = 0; g < res.search.history.size(); ++g)
    hist.add({i(static_cast<long long>(g)), f(res.search.history[g])});
  if (opt.write_files) {
    const std::string& dir = cfg.output_dir;
    write_text_file(dir + "/" + cfg.synth_name + ".circuit", text);
    write_text_file(dir + "/" + cfg.synth_name + ".params", params.str());
    manifest.add_output(cfg.synth_name + ".circuit");
    manifest.add_output(cfg.synth_name + ".params");
    write_table(opt, manifest, dir, "synth.csv", hist);
    manifest.write(dir);
  }
  return res;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<std::string, Spectrum>> run_spectrum(const ExperimentConfig& cfg, const RunOptions& opt) {
  const std::string& dir = cfg.output_dir;
  const Table summary = Table::from_csv(read_text_file(dir + "/summary.csv"));
  const std::size_t c_op = summary.column("operator"), c_n = summary.column("n"), c_mean = summary.column("mean");
  std::vector<std::string> order;
  std::map<std::string, std::map<long long, double>> series;
  for (const auto& row : summary.rows) {
    if (!series.count(row[c_op])) order.push_back(row[c_op]);
    series[row[c_op]][std::stoll(row[c_n])] = std::stod(row[c_mean]);
  }
  std::vector<std::pair<std::string, Spectrum>> out;
  Table spectrum({"operator", "omega_ratio", "amplitude"});
  for (const auto& name : order) {
    const auto& s = series[name];
    if (s.size() < 2) continue;
    std::vector<double> v;
    long long expect = 0;
    for (const auto& [n, x] : s) {
      if (n != expect++) throw std::invalid_argument("spectrum: operator " + name + " has gaps in n");
      v.push_back(x);
    }
    out.emplace_back(name, fourier_spectrum(v));
    for (std::size_t k = 0; k < v.size(); ++k)
      spectrum.add({name, f(out.back().second.omega_ratios[k]), f(out.back().second.amplitudes[k])});
  }
  Manifest manifest("spectrum", cfg);
  write_table(opt, manifest, dir, "spectrum.csv", spectrum);
  if (opt.write_files) {
    // Keep the producing run's manifest; record this pass separately.
    write_text_file(dir + "/spectrum_manifest.json", manifest.document().dump(2) + "\n");
  }
  return out;
}

}  // namespace ftl
