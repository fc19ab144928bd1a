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


#include "ftl/analysis/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ftl {

double von_neumann_entropy(const DenseMatrix& rho) {
  const auto es = hermitian_eigensystem(rho);
  double s = 0.0;
  for (double l : es.values) {
    if (l < -1e-8) throw std::invalid_argument("von_neumann_entropy: matrix is not positive semidefinite");
    if (l > 1e-12) s -= l * std::log(l);
  }
  return s;
}

namespace {

std::vector<int> join(std::initializer_list<const std::vector<int>*> parts) {
  std::vector<int> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

}  // namespace

TeeResult topo_entropy(const ReducedDensity& rdm, const TeeRegions& r) {
  if (r.a.empty() || r.b.empty() || r.c.empty()) throw std::invalid_argument("topo_entropy: regions must be non-empty");
  std::vector<int> all = join({&r.a, &r.b, &r.c});
  std::vector<int> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("topo_entropy: regions A, B, C must be disjoint");
  if (all.size() > 12) throw std::invalid_argument("topo_entropy: at most 12 qubits in A, B and C together");

  auto s = [&](const std::vector<int>& q) { return von_neumann_entropy(rdm(q)); };
  TeeResult t;
  t.s_a = s(r.a);
  t.s_b = s(r.b);
  t.s_c = s(r.c);
  t.s_ab = s(join({&r.a, &r.b}));
  t.s_ac = s(join({&r.a, &r.c}));
  t.s_bc = s(join({&r.b, &r.c}));
  t.s_abc = s(all);
  t.s_topo = t.s_a + t.s_b + t.s_c - t.s_ab - t.s_bc - t.s_ac + t.s_abc;
  return t;
}

TeeResult topo_entropy(const StateVector& state, const TeeRegions& regions) {
  return topo_entropy([&state](std::span<const int> keep) { return partial_trace(state, keep); }, regions);
}

TeeRegions default_tee_regions(const Lattice& lattice, const std::string& division) {
  if (lattice.rows() != 3 || lattice.cols() != 6)
    throw std::invalid_argument("default_tee_regions: defined for the 3x6 lattice only; pass regions explicitly");
  // Both divisions sit around the centre of the patch; labels follow the
  // serpentine numbering of the lattice.
  if (division == "four") return {{2, 3}, {9}, {8}};
  if (division == "six") return {{2, 9}, {3, 8}, {14, 15}};
  throw std::invalid_argument("default_tee_regions: unknown division '" + division + "' (use four or six)");
}

double uhlmann_fidelity(const DenseMatrix& rho, const DenseMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("uhlmann_fidelity: dimension mismatch");
  DenseMatrix h = rho;
  h.set_hermitian_hint(true);
  const DenseMatrix sq = hermitian_function(h, [](double l) { return cplx{std::sqrt(std::max(l, 0.0)), 0.0}; });
  DenseMatrix m = sq * sigma * sq;
  m.set_hermitian_hint(true);
  // Rounding leaves eigenvalues of order 1e-17 where the exact ones vanish;
  // their square roots would bias the result by ~1e-9, so they are dropped.
  const auto vals = hermitian_eigensystem(m).values;
  const double top = vals.empty() ? 0.0 : *std::max_element(vals.begin(), vals.end());
  double f = 0.0;
  for (double l : vals)
    if (l > 1e-13 * top) f += std::sqrt(l);
  return f;
}

}  // namespace ftl
