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


#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "ftl/circuits/builders.hpp"
#include "ftl/circuits/circuit_io.hpp"
#include "ftl/circuits/compile.hpp"
#include "ftl/circuits/euler.hpp"
#include "ftl/core/state_vector.hpp"
#include "support.hpp"

using namespace ftl;

namespace {

constexpr double pi = std::numbers::pi;

DenseMatrix exp_minus_i(const DenseMatrix& h) { return hermitian_exp_i(h, -1.0); }

// exp(-i[(pi/2) X + B.sigma]) from the Hermitian exponential, independent of
// the closed form used by the builder.
DenseMatrix drive_oracle(const Vec3& b) {
  const DenseMatrix x = PauliString::parse("X").dense();
  const DenseMatrix y = PauliString::parse("Y").dense();
  const DenseMatrix z = PauliString::parse("Z").dense();
  DenseMatrix h = cplx{pi / 2 + b[0]} * x + cplx{b[1]} * y + cplx{b[2]} * z;
  h.set_hermitian_hint(true);
  return exp_minus_i(h);
}

DenseMatrix u2_oracle(const Lattice& l, const DisorderRealization& r) {
  DenseMatrix u = DenseMatrix::identity(std::size_t{1} << l.num_qubits());
  for (std::size_t p = 0; p < l.plaquettes().size(); ++p) {
    DenseMatrix h = l.plaquette_operator(p).dense();
    h.set_hermitian_hint(true);
    u = hermitian_exp_i(h, r.coupling[p]) * u;
  }
  return u;
}

DenseMatrix u1_oracle(const Lattice& l, const DisorderRealization& r) {
  // Qubit n-1 is the most significant factor.
  DenseMatrix u = drive_oracle(r.field.back());
  for (int k = l.num_qubits() - 2; k >= 0; --k) u = kron(u, drive_oracle(r.field[static_cast<std::size_t>(k)]));
  return u;
}

std::size_t count_kind(const Circuit& c, GateKind k) { return c.count(k); }

}  // namespace

TEST_CASE("euler_decompose: identity and Pauli X") {
  const auto e = euler_decompose(DenseMatrix::identity(2));
  CHECK(std::abs(e.alpha) < 1e-15);
  CHECK(std::abs(e.phi) < 1e-15);
  CHECK(std::abs(e.theta) < 1e-15);
  CHECK(std::abs(e.global_phase) < 1e-15);

  const auto ex = euler_decompose(PauliString::parse("X").dense());
  CHECK(ex.alpha == doctest::Approx(pi));
  CHECK(std::abs(ex.phi) < 1e-12);
  CHECK(std::abs(ex.theta) < 1e-12);
  CHECK(ex.global_phase == doctest::Approx(pi / 2));
}

TEST_CASE("euler_decompose: reconstruction of drive unitaries and random unitaries") {
  auto check = [](const DenseMatrix& u) {
    const auto e = euler_decompose(u);
    DenseMatrix rec = std::polar(1.0, e.global_phase) * u3_matrix(e.alpha, e.phi, e.theta);
    double d = 0.0;
    for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(rec.data()[i] - u.data()[i]));
    CHECK(d < 1e-10);
  };
  check(drive_oracle({0.0, 0.0, 0.07}));
  for (std::uint64_t s = 1; s <= 50; ++s) check(testing::random_unitary(2, s));
  check(gate_matrix(Gate::rz(0, 0.4)));
  check(gate_matrix(Gate::ry(0, pi)));
  check(gate_matrix(Gate::h(0)));
}

TEST_CASE("euler_decompose: rejects non-unitary input") {
  DenseMatrix m(2);
  m(0, 0) = 2.0;
  m(1, 1) = 1.0;
  CHECK_THROWS_AS(euler_decompose(m), std::invalid_argument);
}

TEST_CASE("build_u1_circuit: B = 0 flips every qubit") {
  const Lattice l = build_lattice(3, 2);
  const auto r = sample_disorder(l, 0.0, 1);
  const Circuit c = build_u1_circuit(l, r);
  CHECK(c.size() == 6);
  for (const auto& g : c.gates()) CHECK(phase_distance(gate_matrix(g), PauliString::parse("X").dense()) < 1e-12);
}

TEST_CASE("build_u1_circuit: single field and Kronecker oracle") {
  CHECK(phase_distance(drive_single_qubit_unitary({0, 0, 0.1}), drive_oracle({0, 0, 0.1})) < 1e-12);
  const DenseMatrix a = drive_single_qubit_unitary({0.2, -0.3, 0.1});
  const DenseMatrix b = drive_oracle({0.2, -0.3, 0.1});
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(a.data()[i] - b.data()[i]));
  CHECK(d < 1e-10);

  const Lattice l = build_lattice(3, 2);
  const auto r = sample_disorder(l, 0.8, 17);
  CHECK(phase_distance(circuit_unitary(build_u1_circuit(l, r)), u1_oracle(l, r)) < 1e-10);
}

TEST_CASE("build_plaquette_evolution: zero angle, pi/2 and random angles") {
  const Lattice l = build_lattice(3, 3);
  const Plaquette* two = nullptr;
  const Plaquette* four = nullptr;
  for (const auto& p : l.plaquettes()) {
    if (p.weight() == 2 && !two) two = &p;
    if (p.weight() == 4 && !four) four = &p;
  }
  REQUIRE(two);
  REQUIRE(four);
  CounterRng rng(5);
  for (const Plaquette* p : {two, four}) {
    const PauliString zs = PauliString::uniform(9, p->qubits, Pauli::Z);
    const Circuit c0 = build_plaquette_evolution(*p, 0.0, 9);
    CHECK(phase_distance(circuit_unitary(c0), DenseMatrix::identity(512)) < 1e-12);
    CHECK(count_kind(c0, GateKind::CZ) <= (p->weight() == 4 ? 6u : 2u));
    for (const auto& g : c0.gates()) CHECK((g.kind != GateKind::CNOT && g.kind != GateKind::CRZ));

    // exp(i pi/2 P) = i P exactly, including the phase.
    const DenseMatrix half = circuit_unitary(build_plaquette_evolution(*p, pi / 2, 9));
    CHECK(phase_distance(half, cplx{0, 1} * zs.dense()) < 1e-12);

    for (int k = 0; k < 20; ++k) {
      const double a = testing::random_angle(rng);
      const DenseMatrix u = circuit_unitary(build_plaquette_evolution(*p, a, 9));
      CHECK(phase_distance(u, pauli_evolution_matrix(zs, a)) < 1e-9);
    }
  }
  Plaquette bad{PlaquetteKind::Z, {0, 1, 2}, 0, 0, 0};
  CHECK_THROWS_AS(build_plaquette_evolution(bad, 0.1, 9), std::invalid_argument);
}

TEST_CASE("build_u2_circuit: 3x2 matches the product of exponentials") {
  const Lattice l = build_lattice(3, 2);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto r = sample_disorder(l, 0.3, seed);
    CHECK(phase_distance(circuit_unitary(build_u2_circuit(l, r)), u2_oracle(l, r)) < 1e-8);
  }
}

TEST_CASE("build_u2_circuit: emission order does not matter and zero couplings give identity") {
  const Lattice l = build_lattice(3, 2);
  auto r = sample_disorder(l, 0.0, 9);
  // Reverse emission order by hand.
  Circuit rev(l.num_qubits());
  for (std::size_t p = l.plaquettes().size(); p-- > 0;) {
    const Plaquette& pl = l.plaquettes()[p];
    const bool x = pl.kind == PlaquetteKind::X;
    if (x)
      for (int q : pl.qubits) rev.add(Gate::h(q));
    rev.append(build_plaquette_evolution(pl, r.coupling[p], l.num_qubits()));
    if (x)
      for (int q : pl.qubits) rev.add(Gate::h(q));
  }
  const DenseMatrix a = circuit_unitary(build_u2_circuit(l, r));
  const DenseMatrix b = circuit_unitary(rev);
  CHECK(phase_distance(a, b) < 1e-10);

  std::fill(r.coupling.begin(), r.coupling.end(), 0.0);
  CHECK(phase_distance(circuit_unitary(build_u2_circuit(l, r)), DenseMatrix::identity(64)) < 1e-12);
}

TEST_CASE("build_floquet_circuit: stroboscopic flips of Z_L at B = 0") {
  const Lattice l = build_lattice(3, 2);
  const auto r = sample_disorder(l, 0.0, 4);
  const Circuit f = build_floquet_circuit(l, r);
  StateVector s(l.num_qubits());
  apply_circuit(s, f);
  CHECK(pauli_expectation(s, l.logical_z()[0]) == doctest::Approx(-1.0).epsilon(1e-10));
  apply_circuit(s, f);
  CHECK(pauli_expectation(s, l.logical_z()[0]) == doctest::Approx(1.0).epsilon(1e-10));

  const DenseMatrix uf = circuit_unitary(f);
  const DenseMatrix composed = circuit_unitary(build_u2_circuit(l, r)) * circuit_unitary(build_u1_circuit(l, r));
  CHECK((uf - composed).frobenius_norm() < 1e-10);

  // U_F Z_L U_F^dagger = -Z_L exactly at B = 0.
  const DenseMatrix zl = l.logical_z()[1].dense();
  CHECK((uf * zl * uf.adjoint() + zl).frobenius_norm() < 1e-10);
}

TEST_CASE("build_eigenstate_circuit: 3x6 stabilizers and logicals") {
  const Lattice l = build_lattice(3, 6);
  const Circuit c = build_eigenstate_circuit(l);
  for (const auto& g : c.gates()) CHECK((g.kind == GateKind::H || g.kind == GateKind::CNOT));
  StateVector s(l.num_qubits());
  apply_circuit(s, c);
  for (std::size_t p = 0; p < l.plaquettes().size(); ++p)
    CHECK(std::abs(pauli_expectation(s, l.plaquette_operator(p)) - 1.0) < 1e-10);
  for (const auto& x : l.logical_x()) CHECK(std::abs(pauli_expectation(s, x) - 1.0) < 1e-10);
  for (const auto& z : l.logical_z()) CHECK(std::abs(pauli_expectation(s, z)) < 1e-10);
}

TEST_CASE("build_eigenstate_circuit: 3x2 equals the projector formula") {
  const Lattice l = build_lattice(3, 2);
  StateVector s(l.num_qubits());
  apply_circuit(s, build_eigenstate_circuit(l));

  const std::size_t dim = 64;
  DenseMatrix proj = DenseMatrix::identity(dim) + l.logical_x()[1].dense();
  for (std::size_t p = 0; p < l.plaquettes().size(); ++p)
    if (l.plaquettes()[p].kind == PlaquetteKind::X) proj = (DenseMatrix::identity(dim) + l.plaquette_operator(p).dense()) * proj;
  std::vector<cplx> zero(dim, 0.0);
  zero[0] = 1.0;
  auto v = proj.apply(zero);
  double nrm = 0.0;
  for (auto x : v) nrm += std::norm(x);
  cplx overlap{};
  for (std::size_t i = 0; i < dim; ++i) overlap += std::conj(s[i]) * v[i];
  CHECK(std::abs(overlap) / std::sqrt(nrm) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("compile: RZ then RX fuses into one U3") {
  Circuit c(1);
  c.add(Gate::rz(0, 0.3));
  c.add(Gate::rx(0, 1.1));
  const auto cc = compile(c, {"merge_u3"});
  REQUIRE(cc.circuit.size() == 1);
  CHECK(cc.circuit.gates()[0].kind == GateKind::U3);
  const DenseMatrix want = gate_matrix(Gate::rx(0, 1.1)) * gate_matrix(Gate::rz(0, 0.3));
  CHECK(phase_distance(gate_matrix(cc.circuit.gates()[0]), want) < 1e-12);
}

TEST_CASE("compile: every pass alone and composed preserves the unitary") {
  const std::vector<std::vector<std::string>> pipelines{
      {"decompose"},
      {"merge_u3"},
      {"layerize"},
      {"align_right"},
      {"layerize", "group_cz"},
      {"layerize", "dd"},
      {"decompose", "merge_u3", "layerize", "group_cz", "dd"},
      {"merge_u3", "align_right", "dd", "group_cz"},
  };
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const int n = seed == 2 ? 10 : 6;
    const Circuit c = testing::random_circuit(n, 60, seed);
    const DenseMatrix u = circuit_unitary(c);
    for (const auto& p : pipelines) {
      const auto cc = compile(c, p);
      CHECK(phase_distance(circuit_unitary(cc.circuit), u) < 1e-9);
      if (cc.circuit.layered()) CHECK(is_valid_layering(cc.circuit));
    }
  }
  CHECK_THROWS_AS(compile(Circuit(2), {"frobnicate"}), std::invalid_argument);
}

TEST_CASE("compile: DD pairs fill long idle windows") {
  // Qubit 3 idles between two CZs while qubits 0-2 keep working.
  Circuit c(4);
  c.add(Gate::cz(2, 3));
  for (int k = 0; k < 6; ++k) {
    c.add(Gate::cz(0, 1));
    c.add(Gate::h(1));
    c.add(Gate::cz(1, 2));
    c.add(Gate::h(2));
  }
  c.add(Gate::cz(2, 3));
  const auto cc = compile(c, {"merge_u3", "layerize", "dd"});
  CHECK(cc.stats.dd_gates >= 2);
  CHECK(cc.stats.dd_gates % 2 == 0);
  CHECK(phase_distance(circuit_unitary(cc.circuit), circuit_unitary(c)) < 1e-9);
  CHECK(is_valid_layering(cc.circuit));
}

TEST_CASE("compile: one 3x6 Floquet period at B = 0.1") {
  const Lattice l = build_lattice(3, 6);
  const auto r = sample_disorder(l, 0.1, 2);
  CompileOptions opt;
  opt.coupler_orientation = coupler_orientation(l);
  const auto cc = compile(build_floquet_circuit(l, r), default_passes(), opt);
  MESSAGE("CZ=" << cc.stats.gate_counts.at("cz") << " U3=" << cc.stats.gate_counts.at("u3")
                << " SQ layers=" << cc.stats.sq_layers << " CZ layers=" << cc.stats.cz_layers);
  CHECK(cc.stats.gate_counts.at("cz") <= 80);
  CHECK(cc.stats.max_cz_groups <= 2);
  CHECK(is_valid_layering(cc.circuit));
  for (const auto& g : cc.circuit.gates())
    if (g.kind == GateKind::CZ) CHECK(l.adjacent(g.qubits[0], g.qubits[1]));
  // 18 qubits is too wide for a dense unitary; compare on a random state.
  StateVector a = testing::random_state(18, 3), b = a;
  apply_circuit(a, build_floquet_circuit(l, r));
  apply_circuit(b, cc.circuit);
  CHECK(std::abs(std::abs(inner_product(a, b)) - 1.0) < 1e-10);
}

TEST_CASE("circuit text format round-trips exactly") {
  const Circuit c = testing::random_circuit(5, 40, 77);
  const auto cc = compile(c, default_passes());
  for (const Circuit* x : {&c, &cc.circuit}) {
    const std::string text = circuit_to_string(*x);
    const Circuit back = circuit_from_string(text);
    CHECK(back == *x);
    CHECK(circuit_to_string(back) == text);
  }
  CHECK(circuit_to_string(c).rfind("circuit v1 qubits=5\n", 0) == 0);
  CHECK_THROWS_AS(circuit_from_string("circuit v1 qubits=2\nrx q0\n"), std::runtime_error);
  CHECK_THROWS_AS(circuit_from_string("circuit v1 qubits=2\ncz q0 q2\n"), std::runtime_error);
  CHECK_THROWS_AS(circuit_from_string("nonsense\n"), std::runtime_error);

  std::stringstream ps;
  const auto params = rotation_params(c);
  write_params(ps, params);
  CHECK(read_params(ps) == params);
}
