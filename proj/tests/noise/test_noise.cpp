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


#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "ftl/circuits/compile.hpp"
#include "ftl/core/state_vector.hpp"
#include "ftl/noise/channels.hpp"
#include "ftl/noise/noise_model.hpp"
#include "ftl/noise/readout.hpp"
#include "ftl/noise/trajectory.hpp"
#include "support.hpp"

using namespace ftl;

namespace {

DenseMatrix pauli2(int p) {
  switch (p) {
    case 1: return DenseMatrix(2, {0.0, 1.0, 1.0, 0.0});
    case 2: return DenseMatrix(2, {0.0, cplx{0, -1}, cplx{0, 1}, 0.0});
    case 3: return DenseMatrix(2, {1.0, 0.0, 0.0, -1.0});
    default: return DenseMatrix::identity(2);
  }
}

// Embeds a single-qubit operator of a two-qubit register (qubit 1 is the high bit).
DenseMatrix lift(const DenseMatrix& m, int q) {
  return q == 0 ? kron(DenseMatrix::identity(2), m) : kron(m, DenseMatrix::identity(2));
}

DenseMatrix conj_by(const DenseMatrix& k, const DenseMatrix& rho) { return k * rho * k.adjoint(); }

DenseMatrix depolarize1(const DenseMatrix& rho, int q, double e) {
  DenseMatrix out = cplx{1.0 - e} * rho;
  for (int p = 1; p < 4; ++p) out += cplx{e / 3.0} * conj_by(lift(pauli2(p), q), rho);
  return out;
}

DenseMatrix depolarize2(const DenseMatrix& rho, double e) {
  DenseMatrix out = cplx{1.0 - e} * rho;
  for (int p = 1; p < 16; ++p) out += cplx{e / 15.0} * conj_by(kron(pauli2(p % 4), pauli2(p / 4)), rho);
  return out;
}

// Density-matrix reference for the stochastic engine on two qubits.
DenseMatrix exact_channel(const CompiledCircuit& cc, const NoiseModel& model) {
  const LayerNoise noise = LayerNoise::from_model(model);
  DenseMatrix rho(4);
  rho(0, 0) = 1.0;
  const Circuit& c = cc.circuit;
  for (std::size_t k = 0; k < c.num_layers(); ++k) {
    const auto layer = c.layer(k);
    if (layer.empty()) continue;
    for (const auto& g : layer) {
      Circuit one(2);
      one.add(g);
      rho = conj_by(circuit_unitary(one), rho);
    }
    const bool cz_layer = cc.layer_kind(k) == LayerKind::CZ;
    const auto kraus = thermal_kraus(cz_layer ? noise.cz : noise.sq);
    for (int q = 0; q < 2; ++q) {
      DenseMatrix next(4);
      for (const auto& m : kraus) next += conj_by(lift(m, q), rho);
      rho = next;
    }
    std::array<bool, 2> busy{false, false};
    for (const auto& g : layer) {
      busy[static_cast<std::size_t>(g.qubits[0])] = true;
      if (g.arity() == 2) {
        busy[static_cast<std::size_t>(g.qubits[1])] = true;
        rho = depolarize2(rho, noise.rates.cz);
      } else {
        rho = depolarize1(rho, g.qubits[0], noise.rates.sq);
      }
    }
    if (cz_layer)
      for (int q = 0; q < 2; ++q)
        if (!busy[static_cast<std::size_t>(q)]) rho = depolarize1(rho, q, noise.rates.cz_idle);
  }
  return rho;
}

NoiseModel heavy_model() {
  NoiseModel m;
  m.t1_us = 1.0;
  m.t2_us = 0.8;
  m.eps_sq = 0.05;
  m.eps_cz = 0.1;
  m.eps_cz_idle = 0.05;
  return m;
}

}  // namespace

TEST_CASE("thermal Kraus operators are trace preserving") {
  for (double t : {24.0, 52.5, 62.6, 5000.0}) {
    const auto p = decoherence_probabilities(t, 163.0, 25.0);
    DenseMatrix sum(2);
    for (const auto& k : thermal_kraus(p)) sum += k.adjoint() * k;
    CHECK(testing::max_abs_diff(sum.data(), DenseMatrix::identity(2).data()) < 1e-14);
  }
}

TEST_CASE("decoherence probabilities at 62.6 ns with T1 = 163 us, T2 = 25 us") {
  const double t = 0.0626, t1 = 163.0, t2 = 25.0;
  const auto p = decoherence_probabilities(62.6, t1, t2);
  const double p0 = 1.0 - std::exp(-t / t1);
  const double p1 = 0.5 * std::exp(-t / t1) * (1.0 - std::exp(-t * (1.0 / t2 - 1.0 / t1)));
  CHECK(p.p0 == doctest::Approx(p0).epsilon(1e-10));
  CHECK(p.p1 == doctest::Approx(p1).epsilon(1e-10));
  CHECK(p.p0 == doctest::Approx(3.8397e-4).epsilon(1e-3));
  CHECK(p.p1 == doctest::Approx(1.0584e-3).epsilon(1e-3));
  CHECK(decoherence_error_rate(p) == doctest::Approx(0.75 * p0 + p1).epsilon(1e-12));
}

TEST_CASE("T2 above T1 is rejected") {
  CHECK_THROWS_AS(decoherence_probabilities(24.0, 20.0, 30.0), std::invalid_argument);
  NoiseModel m;
  m.t1_us = 20.0;
  m.t2_us = 30.0;
  CHECK_THROWS_WITH_AS(m.validate(), doctest::Contains("t2_us"), std::invalid_argument);
  NoiseModel no_t2;
  CHECK_THROWS_AS(no_t2.validate(), std::invalid_argument);
}

TEST_CASE("depolarizing rates subtract the decoherence share and clamp at zero") {
  NoiseModel m = NoiseModel::device_defaults(100.0);
  const auto r = derive_depolarizing_rates(m);
  const double r_sq = decoherence_error_rate(decoherence_probabilities(24.0, 163.0, 100.0));
  const double r_cz = decoherence_error_rate(decoherence_probabilities(52.5, 163.0, 100.0));
  CHECK(r.sq == doctest::Approx(0.48e-3 - r_sq));
  CHECK(r.cz == doctest::Approx(6.4e-3 - 2.0 * r_cz));
  CHECK(r.cz_idle == doctest::Approx(1.10e-3 - r_cz));
  CHECK(r.clamped.empty());

  m.eps_sq = 1e-6;
  const auto c = derive_depolarizing_rates(m);
  CHECK(c.sq == 0.0);
  REQUIRE(c.clamped.size() == 1);
  CHECK(c.clamped[0] == "sq");

  // A short T2 already exceeds the single-qubit and idle medians.
  const auto s = derive_depolarizing_rates(NoiseModel::device_defaults(25.0));
  CHECK(s.sq == 0.0);
  CHECK(s.cz_idle == 0.0);
  CHECK(s.cz > 0.0);
  CHECK(s.clamped == std::vector<std::string>{"sq", "cz_idle"});
}

TEST_CASE("infinite T1 and T2 leave the Pauli errors untouched") {
  NoiseModel m;
  m.t1_us = m.t2_us.emplace(std::numeric_limits<double>::infinity());
  const auto r = derive_depolarizing_rates(m);
  CHECK(r.sq == 0.48e-3);
  CHECK(r.cz == 6.4e-3);
  CHECK(r.cz_idle == 1.10e-3);
}

TEST_CASE("stochastic amplitude damping reproduces T1 decay") {
  const auto p = decoherence_probabilities(10000.0, 100.0, 100.0);  // 10 us steps
  const int steps = 10, trajectories = 10000;
  int survived = 0;
  for (int t = 0; t < trajectories; ++t) {
    CounterRng rng = trajectory_rng(11, 0, static_cast<std::uint64_t>(t));
    StateVector s = StateVector::basis(1, 1);
    for (int k = 0; k < steps; ++k) apply_stochastic_decoherence(s, 0, p, rng);
    if (std::norm(s[1]) > 0.5) ++survived;
  }
  const double expected = std::exp(-0.1 * steps);
  const double se = std::sqrt(expected * (1.0 - expected) / trajectories);
  CHECK(std::abs(survived / double(trajectories) - expected) < 3.0 * se);
}

TEST_CASE("single-qubit depolarizing picks X, Y, Z uniformly") {
  const double e_p = 0.3;
  const int trials = 30000;
  std::array<int, 4> hits{};
  double z_sum = 0.0;
  for (int t = 0; t < trials; ++t) {
    CounterRng rng(5, static_cast<std::uint64_t>(t));
    StateVector s(1);
    const int qs[1] = {0};
    ++hits[static_cast<std::size_t>(apply_stochastic_depolarizing(s, qs, e_p, rng))];
    z_sum += z_expectation(s, 0);
  }
  for (int p = 1; p < 4; ++p) {
    const double f = hits[static_cast<std::size_t>(p)] / double(trials);
    const double se = std::sqrt((e_p / 3) * (1 - e_p / 3) / trials);
    CHECK(std::abs(f - e_p / 3.0) < 3.0 * se);
  }
  const double z = z_sum / trials;
  const double se_z = std::sqrt(1.0 - std::pow(1.0 - 4.0 / 3.0 * e_p, 2)) / std::sqrt(double(trials));
  CHECK(std::abs(z - (1.0 - 4.0 / 3.0 * e_p)) < 3.0 * se_z);
}

TEST_CASE("zero-rate noise matches the noiseless run bit for bit") {
  const Circuit c = testing::random_circuit(4, 40, 3);
  const CompiledCircuit cc = compile(c, default_passes());
  NoiseModel m;
  m.t1_us = std::numeric_limits<double>::infinity();
  m.t2_us = std::numeric_limits<double>::infinity();
  m.eps_sq = m.eps_cz = m.eps_cz_idle = 0.0;
  CounterRng rng = trajectory_rng(1, 2, 3);
  const StateVector noisy = run_noisy_trajectory(cc, m, rng);
  StateVector clean(4);
  apply_circuit(clean, cc.circuit);
  CHECK(noisy == clean);

  m.enabled = false;
  CHECK_THROWS_AS(run_noisy_trajectory(cc, m, rng), std::logic_error);
}

TEST_CASE("trajectories are reproducible from the seed triple") {
  const CompiledCircuit cc = compile(testing::random_circuit(3, 30, 9), default_passes());
  const NoiseModel m = heavy_model();
  CounterRng a = trajectory_rng(7, 1, 4), b = trajectory_rng(7, 1, 4), c = trajectory_rng(7, 1, 5);
  const StateVector sa = run_noisy_trajectory(cc, m, a);
  CHECK(sa == run_noisy_trajectory(cc, m, b));
  CHECK_FALSE(sa == run_noisy_trajectory(cc, m, c));
}

TEST_CASE("trajectory average converges to the exact two-qubit channel") {
  Circuit c(2);
  c.add(Gate::h(0));
  c.add(Gate::cnot(0, 1));
  c.add(Gate::u3(1, 0.4, 1.1, -0.3));
  c.add(Gate::crz(1, 0, 0.9));
  c.add(Gate::rx(0, 0.7));
  const CompiledCircuit cc = compile(c, default_passes());
  const NoiseModel m = heavy_model();
  CHECK(derive_depolarizing_rates(m).clamped.empty());

  const DenseMatrix exact = exact_channel(cc, m);
  const int trajectories = 20000;
  DenseMatrix mean(4);
  for (int t = 0; t < trajectories; ++t) {
    CounterRng rng = trajectory_rng(3, 0, static_cast<std::uint64_t>(t));
    const StateVector s = run_noisy_trajectory(cc, m, rng);
    mean += DenseMatrix::outer(s.amplitudes());
  }
  mean *= cplx{1.0 / trajectories};
  // Each entry is a mean of bounded terms; 4/sqrt(N) is a loose 4-sigma bound.
  CHECK(testing::max_abs_diff(mean.data(), exact.data()) < 4.0 / std::sqrt(double(trajectories)));
  CHECK(std::abs(exact.trace() - 1.0) < 1e-12);
}

TEST_CASE("readout sampling and inverse-confusion correction") {
  NoiseModel m;
  m.t2_us = 25.0;
  m.readout = {{0.9, 0.8}};
  StateVector s(2);
  CounterRng rng(21);
  const std::uint64_t shots = 40000;
  const Counts counts = sample_readout(s, m, shots, rng);
  const double p00 = counts.count(0) ? counts.at(0) / double(shots) : 0.0;
  CHECK(std::abs(p00 - 0.81) < 0.01);
  const auto q = correct_readout(counts, m, 2);
  CHECK(std::abs(q[0] - 1.0) < 0.02);

  // Exact counts A p for p = (0.25, 0.75) on one qubit.
  NoiseModel one = m;
  const Counts exact{{0, 0.25 * 0.9 * 1000 + 0.75 * 0.2 * 1000}, {1, 0.25 * 0.1 * 1000 + 0.75 * 0.8 * 1000}};
  const auto r = correct_readout(exact, one, 1);
  CHECK(r[0] == doctest::Approx(0.25));
  CHECK(r[1] == doctest::Approx(0.75));

  one.readout = {{0.5, 0.5}};
  CHECK_THROWS_AS(correct_readout(exact, one, 1), std::invalid_argument);
  CHECK_THROWS_AS(correct_readout(Counts{{4, 1}}, m, 2), std::invalid_argument);
}
