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


#include <cmath>
#include <numbers>

#include "doctest.h"
#include "ftl/circuits/builders.hpp"
#include "ftl/circuits/circuit_io.hpp"
#include "ftl/core/state_vector.hpp"
#include "ftl/synth/block_graph.hpp"
#include "ftl/synth/loss.hpp"
#include "ftl/synth/optimize.hpp"
#include "ftl/synth/search.hpp"
#include "ftl/synth/simplify.hpp"
#include "support.hpp"

using namespace ftl;

namespace {

constexpr double pi = std::numbers::pi;

DenseMatrix zz_target(int n, double angle) {
  std::vector<int> all;
  for (int q = 0; q < n; ++q) all.push_back(q);
  return pauli_evolution_matrix(PauliString::uniform(n, all, Pauli::Z), angle);
}

int node_index(const BlockGraph& g, const std::string& label) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.node(i).label == label) return static_cast<int>(i);
  FAIL("no node " << label);
  return -1;
}

std::size_t entangler_count(const Circuit& c) { return c.count(GateKind::CZ) + c.count(GateKind::CRZ); }

}  // namespace

TEST_CASE("block graph: blocks are parallel and paths validate") {
  const BlockGraph g = build_block_graph(4);
  CHECK(g.node(0).gates.empty());
  CHECK(g.size() > 7);
  AnsatzPath p{{1, 2, 1}};
  CHECK(p.valid(g));
  CHECK(p.param_count(g) == 12);
  AnsatzPath repeat{{1, 1}};
  CHECK_FALSE(repeat.valid(g));
  CHECK_THROWS_AS(instantiate(g, p, std::vector<double>(3)), std::invalid_argument);
  CHECK_THROWS_AS(build_block_graph(7), std::invalid_argument);
}

TEST_CASE("loss: exact realization gives 0, orthogonal gives 1") {
  const BlockGraph g = build_block_graph(2);
  const AnsatzPath p{{node_index(g, "rx-layer")}};
  Circuit c(2);
  c.add(Gate::rx(0, 0.3));
  c.add(Gate::rx(1, -0.5));
  const DenseMatrix target = circuit_unitary(c);
  const std::vector<double> theta{0.3, -0.5};
  CHECK(std::abs(path_loss(theta, g, p, target)) < 1e-12);
  CHECK(std::abs(path_loss(theta, g, p, target, LossForm::Modulus)) < 1e-12);

  const BlockGraph g1 = build_block_graph(1);
  const AnsatzPath px{{node_index(g1, "rx-layer")}};
  // RX(pi) = -iX is Hilbert-Schmidt orthogonal to the identity.
  CHECK(path_loss(std::vector<double>{pi}, g1, px, DenseMatrix::identity(2)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("loss: matches the dense trace oracle, and forms differ only by phase") {
  const BlockGraph g = build_block_graph(2);
  const AnsatzPath p{{1, 4, 2, 3}};
  CounterRng rng(3);
  std::vector<double> theta(static_cast<std::size_t>(p.param_count(g)));
  for (auto& t : theta) t = testing::random_angle(rng);
  const DenseMatrix target = testing::random_unitary(4, 8);
  const DenseMatrix u = circuit_unitary(instantiate(g, p, theta));
  cplx tr{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) tr += std::conj(target(k, i)) * u(k, i);
  CHECK(std::abs(path_loss(theta, g, p, target) - (1.0 - tr.real() / 4.0)) < 1e-12);
  CHECK(std::abs(path_loss(theta, g, p, target, LossForm::Modulus) - (1.0 - std::abs(tr) / 4.0)) < 1e-12);

  // A global phase spoils the real form but not the modulus form.
  const DenseMatrix shifted = std::polar(1.0, 0.4) * u;
  CHECK(path_loss(theta, g, p, shifted) > 1e-3);
  CHECK(std::abs(path_loss(theta, g, p, shifted, LossForm::Modulus)) < 1e-12);
  CHECK_THROWS_AS(path_loss(theta, g, p, DenseMatrix::identity(8)), std::invalid_argument);
}

TEST_CASE("optimize: empty path on identity needs no iterations") {
  const BlockGraph g = build_block_graph(2);
  const auto r = optimize(g, AnsatzPath{}, DenseMatrix::identity(4), {});
  CHECK(r.loss == doctest::Approx(0.0));
  CHECK(r.iterations == 0);
}

TEST_CASE("optimize: ZZ evolution on the CRZ + RZ path") {
  const BlockGraph g = build_block_graph(2);
  const AnsatzPath p{{node_index(g, "crz0-1"), node_index(g, "rz-layer")}};
  const auto r = optimize(g, p, zz_target(2, 0.37), {0.1, 0.2, -0.3});
  CHECK(r.loss < 1e-4);
}

TEST_CASE("gradients: parameter shift agrees with central differences") {
  const BlockGraph g = build_block_graph(3);
  const AnsatzPath p{{1, 4, 2, 5, 3, 4}};
  CounterRng rng(12);
  std::vector<double> theta(static_cast<std::size_t>(p.param_count(g)));
  for (auto& t : theta) t = testing::random_angle(rng);
  const DenseMatrix target = testing::random_unitary(8, 5);
  for (LossForm f : {LossForm::Real, LossForm::Modulus}) {
    const auto ps = loss_gradient(theta, g, p, target, f, GradMode::ParameterShift);
    const auto fd = loss_gradient(theta, g, p, target, f, GradMode::FiniteDifference, 1e-5);
    double worst = 0.0;
    for (std::size_t k = 0; k < ps.size(); ++k) worst = std::max(worst, std::abs(ps[k] - fd[k]));
    CHECK(worst < 1e-6);
  }
}

TEST_CASE("optimize: loss never increases") {
  const BlockGraph g = build_block_graph(2);
  const AnsatzPath p{{1, 4, 2, 3}};
  std::vector<double> theta(static_cast<std::size_t>(p.param_count(g)), 0.3);
  const DenseMatrix target = testing::random_unitary(4, 2);
  double prev = path_loss(theta, g, p, target);
  for (int rounds = 0; rounds < 5; ++rounds) {
    OptimizeOptions o;
    o.max_iters = 5;
    const auto r = optimize(g, p, target, theta, o);
    CHECK(r.loss <= prev + 1e-15);
    prev = r.loss;
    theta = r.params;
  }
}

TEST_CASE("search: single-qubit RX in the first generation") {
  Circuit c(1);
  c.add(Gate::rx(0, 0.5));
  SearchOptions o;
  o.seed = 4;
  const auto r = neuroevolution_search(circuit_unitary(c), o);
  CHECK(r.loss < 1e-10);
  CHECK(r.history.size() == 1);
}

TEST_CASE("search: ZZ evolution, determinism and monotone history") {
  SearchOptions o;
  o.seed = 11;
  const DenseMatrix target = zz_target(2, 0.37);
  const auto a = neuroevolution_search(target, o);
  CHECK(a.loss < 1e-4);
  for (std::size_t i = 1; i < a.history.size(); ++i) CHECK(a.history[i] <= a.history[i - 1]);
  CHECK(std::abs(unitary_loss(circuit_unitary(a.circuit), target, a.form) - a.loss) < 1e-12);

  o.workers = 3;
  const auto b = neuroevolution_search(target, o);
  CHECK(a.circuit == b.circuit);
  CHECK(a.params == b.params);
  CHECK(a.history == b.history);
}

TEST_CASE("search: four-body ZZZZ evolution" * doctest::timeout(300)) {
  const DenseMatrix target = zz_target(4, 0.7);
  double best = 1.0;
  std::size_t entanglers = 0;
  for (std::uint64_t seed = 1; seed <= 3 && best >= 1e-4; ++seed) {
    SearchOptions o;
    o.seed = seed;
    o.population = 16;
    o.initial_depth = 4;
    o.depth_step = 2;
    o.patience = 6;
    o.optimize.max_iters = 500;
    const auto r = neuroevolution_search(target, o);
    const auto [s, params] = simplify(r.circuit, r.params);
    MESSAGE("seed " << seed << " loss " << r.loss << " entanglers " << entangler_count(s));
    if (r.loss < best) {
      best = r.loss;
      entanglers = entangler_count(s);
    }
  }
  CHECK(best < 1e-4);
  CHECK(entanglers <= 6);
}

TEST_CASE("simplify: near-identity rotations are dropped") {
  Circuit c(2);
  c.add(Gate::rx(0, 0.4));
  c.add(Gate::rz(1, 1e-9));
  c.add(Gate::crz(0, 1, 0.8));
  const Circuit s = simplify(c);
  CHECK(s.size() == 2);
  CHECK(phase_distance(circuit_unitary(s), circuit_unitary(c)) < 1e-8);
}

TEST_CASE("simplify: special angles snap to fixed gates") {
  Circuit c(1);
  c.add(Gate::rx(0, pi - 1e-7));
  const Circuit s = simplify(c);
  REQUIRE(s.size() == 1);
  CHECK(s.gates()[0].kind == GateKind::U3);
  CHECK(phase_distance(gate_matrix(s.gates()[0]), PauliString::parse("X").dense()) < 1e-12);
  CHECK(s.variational_param_count() == 0);

  Circuit cz(2);
  cz.add(Gate::crz(0, 1, pi));
  cz.add(Gate::crz(1, 0, -pi + 1e-8));
  cz.add(Gate::crz(0, 1, 2 * pi));
  const Circuit sz = simplify(cz);
  CHECK(sz.variational_param_count() == 0);
  CHECK(phase_distance(circuit_unitary(sz), circuit_unitary(cz)) < 1e-12);
}

TEST_CASE("simplify: commuting gates are reordered and combined") {
  Circuit c(2);
  c.add(Gate::rz(0, 0.2));
  c.add(Gate::crz(0, 1, 0.5));
  c.add(Gate::rz(0, 0.3));
  c.add(Gate::crz(0, 1, 7.0));  // beyond pi: split off a Z on the control
  const auto [s, params] = simplify(c, rotation_params(c));
  CHECK(s.count(GateKind::RZ) == 1);
  CHECK(s.count(GateKind::CRZ) == 1);
  CHECK(params.size() <= 4);
  CHECK(phase_distance(circuit_unitary(s), circuit_unitary(c)) < 1e-12);
}

TEST_CASE("simplify: random synthesized circuits keep their unitary") {
  const BlockGraph g = build_block_graph(2);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CounterRng rng(seed, 77);
    AnsatzPath p;
    int last = 0;
    for (int k = 0; k < 8; ++k) {
      const auto& nx = g.successors(static_cast<std::size_t>(last));
      last = nx[rng.below(nx.size())];
      p.nodes.push_back(last);
    }
    std::vector<double> theta(static_cast<std::size_t>(p.param_count(g)));
    for (auto& t : theta) {
      // Mix in special and tiny angles so every pass has work.
      switch (rng.below(4)) {
        case 0: t = 1e-9; break;
        case 1: t = pi / 2 * static_cast<double>(rng.below(8)); break;
        default: t = testing::random_angle(rng) * 3.0;
      }
    }
    const Circuit c = instantiate(g, p, theta);
    const auto [s, params] = simplify(c, theta);
    CHECK(phase_distance(circuit_unitary(s), circuit_unitary(c)) < 1e-6);
    CHECK(params.size() <= theta.size());
    CHECK(simplify(s) == s);
  }
}
