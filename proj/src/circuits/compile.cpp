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

#include "ftl/circuits/compile.hpp"

#include <algorithm>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "ftl/circuits/euler.hpp"

namespace ftl {

namespace {

struct Placed {
  Gate gate;
  std::size_t layer;
  bool dd = false;
};

Circuit from_layers(int num_qubits, std::vector<std::vector<Gate>>& layers) {
  while (!layers.empty() && layers.back().empty()) layers.pop_back();
  Circuit out(num_qubits);
  for (auto& l : layers) {
    for (const auto& g : l) out.add(g);
    out.mark_layer_end();
  }
  return out;
}

std::vector<std::vector<Gate>> to_layers(const Circuit& c) {
  std::vector<std::vector<Gate>> layers;
  for (std::size_t k = 0; k < c.num_layers(); ++k) {
    const auto l = c.layer(k);
    layers.emplace_back(l.begin(), l.end());
  }
  return layers;
}

void require_layered(const Circuit& c, const char* pass) {
  if (!c.layered()) throw std::invalid_argument(std::string(pass) + ": circuit must be layered first");
  if (c.layer_marks().back() != c.size()) {
    throw std::invalid_argument(std::string(pass) + ": circuit has gates outside any layer");
  }
}

Circuit insert_dd_impl(const Circuit& c, std::vector<bool>& flags) {
  require_layered(c, "dd");
  auto layers = to_layers(c);
  std::vector<std::vector<bool>> dd(layers.size());
  for (std::size_t k = 0; k < layers.size(); ++k) dd[k].assign(layers[k].size(), false);

  const int n = c.num_qubits();
  for (int q = 0; q < n; ++q) {
    std::vector<std::size_t> active;
    for (std::size_t k = 0; k < layers.size(); ++k)
      if (std::any_of(layers[k].begin(), layers[k].end(), [q](const Gate& g) { return g.acts_on(q); }))
        active.push_back(k);
    for (std::size_t a = 0; a + 1 < active.size(); ++a) {
      std::size_t cz_count = 0;
      std::vector<std::size_t> sq_layers;
      for (std::size_t k = active[a] + 1; k < active[a + 1]; ++k) {
        if (k % 2 == 1) ++cz_count;
        else sq_layers.push_back(k);
      }
      if (cz_count < 2 || sq_layers.size() < 2) continue;
      const std::size_t i1 = sq_layers.size() / 4;
      const std::size_t i2 = sq_layers.size() - 1 - i1;
      for (std::size_t idx : {i1, i2}) {
        layers[sq_layers[idx]].push_back(Gate::rx(q, std::numbers::pi));
        dd[sq_layers[idx]].push_back(true);
      }
    }
  }
  flags.clear();
  for (auto& l : dd) flags.insert(flags.end(), l.begin(), l.end());
  return from_layers(n, layers);
}

}  // namespace

std::vector<std::string> default_passes() { return {"decompose", "merge_u3", "layerize", "group_cz"}; }

Circuit decompose_to_cz(const Circuit& c) {
  Circuit out(c.num_qubits());
  auto cnot = [&out](int ctl, int tgt) {
    out.add(Gate::h(tgt));
    out.add(Gate::cz(ctl, tgt));
    out.add(Gate::h(tgt));
  };
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::CNOT: cnot(g.qubits[0], g.qubits[1]); break;
      case GateKind::CRZ:
        out.add(Gate::rz(g.qubits[1], g.params[0] / 2.0));
        cnot(g.qubits[0], g.qubits[1]);
        out.add(Gate::rz(g.qubits[1], -g.params[0] / 2.0));
        cnot(g.qubits[0], g.qubits[1]);
        break;
      default: out.add(g);
    }
  }
  return out;
}

Circuit merge_single_qubit(const Circuit& c) {
  const int n = c.num_qubits();
  Circuit out(n);
  std::vector<std::optional<DenseMatrix>> pending(static_cast<std::size_t>(n));
  auto flush = [&](int q) {
    auto& p = pending[static_cast<std::size_t>(q)];
    if (!p) return;
    if (phase_distance(*p, DenseMatrix::identity(2)) > 1e-14) {
      const EulerAngles e = euler_decompose(*p);
      out.add(Gate::u3(q, e.alpha, e.phi, e.theta));
    }
    p.reset();
  };
  for (const auto& g : c.gates()) {
    if (g.arity() == 2) {
      flush(g.qubits[0]);
      flush(g.qubits[1]);
      out.add(g);
      continue;
    }
    auto& p = pending[static_cast<std::size_t>(g.qubits[0])];
    const DenseMatrix m = gate_matrix(g);
    p = p ? m * *p : m;
  }
  for (int q = 0; q < n; ++q) flush(q);
  return out;
}

Circuit layerize(const Circuit& c, bool align_right) {
  for (const auto& g : c.gates()) {
    if (g.arity() == 2 && g.kind != GateKind::CZ) {
      throw std::invalid_argument("layerize: two-qubit gate '" + gate_name(g.kind) +
                                  "' must be decomposed to CZ first");
    }
  }
  const int n = c.num_qubits();
  std::vector<Gate> gates = c.gates();
  if (align_right) std::reverse(gates.begin(), gates.end());

  std::vector<std::size_t> frontier(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Gate>> layers;
  for (const auto& g : gates) {
    std::size_t t = frontier[static_cast<std::size_t>(g.qubits[0])];
    if (g.arity() == 2) t = std::max(t, frontier[static_cast<std::size_t>(g.qubits[1])]);
    const std::size_t parity = g.arity() == 2 ? 1 : 0;
    if (t % 2 != parity) ++t;
    if (layers.size() <= t) layers.resize(t + 1);
    layers[t].push_back(g);
    frontier[static_cast<std::size_t>(g.qubits[0])] = t + 1;
    if (g.arity() == 2) frontier[static_cast<std::size_t>(g.qubits[1])] = t + 1;
  }
  if (align_right) {
    // Reverse layer order (and gate order within each layer, which is free
    // since gates in a layer are disjoint) and keep an SQ layer first.
    std::reverse(layers.begin(), layers.end());
    for (auto& l : layers) std::reverse(l.begin(), l.end());
    if (!layers.empty() && layers.size() % 2 == 0) layers.insert(layers.begin(), std::vector<Gate>{});
  }
  return from_layers(n, layers);
}

Circuit insert_dynamical_decoupling(const Circuit& c, std::size_t* inserted) {
  std::vector<bool> flags;
  Circuit out = insert_dd_impl(c, flags);
  if (inserted) *inserted = static_cast<std::size_t>(std::count(flags.begin(), flags.end(), true));
  return out;
}

bool is_valid_layering(const Circuit& c) {
  if (!c.layered() || c.layer_marks().back() != c.size()) return false;
  for (std::size_t k = 0; k < c.num_layers(); ++k) {
    std::vector<bool> used(static_cast<std::size_t>(c.num_qubits()), false);
    for (const auto& g : c.layer(k)) {
      const bool two = g.arity() == 2;
      if ((k % 2 == 1) != two) return false;
      if (two && g.kind != GateKind::CZ) return false;
      for (int j = 0; j < g.arity(); ++j) {
        const auto q = static_cast<std::size_t>(g.qubits[static_cast<std::size_t>(j)]);
        if (used[q]) return false;
        used[q] = true;
      }
    }
  }
  return true;
}

void refresh_stats(CompiledCircuit& cc, const CompileOptions& options) {
  const Circuit& c = cc.circuit;
  if (cc.cz_group.size() != c.size()) {
    cc.cz_group.assign(c.size(), -1);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c.gates()[i].kind == GateKind::CZ) cc.cz_group[i] = 0;
  }
  if (cc.dd_gate.size() != c.size()) cc.dd_gate.assign(c.size(), false);

  CompileStats s;
  for (const auto& g : c.gates()) ++s.gate_counts[gate_name(g.kind)];
  s.dd_gates = static_cast<std::size_t>(std::count(cc.dd_gate.begin(), cc.dd_gate.end(), true));
  std::size_t begin = 0;
  for (std::size_t k = 0; k < c.num_layers(); ++k) {
    const std::size_t end = c.layer_marks()[k];
    if (end > begin) {
      if (k % 2 == 0) {
        ++s.sq_layers;
        s.estimated_ns += options.sq_layer_ns;
      } else {
        ++s.cz_layers;
        s.estimated_ns += options.cz_layer_ns;
        int groups = 0;
        for (std::size_t i = begin; i < end; ++i) groups = std::max(groups, cc.cz_group[i] + 1);
        s.max_cz_groups = std::max(s.max_cz_groups, static_cast<std::size_t>(groups));
      }
    }
    begin = end;
  }
  cc.stats = s;
}

CompiledCircuit compile(const Circuit& circuit, const std::vector<std::string>& passes,
                        const CompileOptions& options) {
  static const std::vector<std::string> known = {"decompose", "merge_u3", "layerize",
                                                 "align_right", "group_cz", "dd"};
  for (const auto& p : passes) {
    if (std::find(known.begin(), known.end(), p) == known.end()) {
      throw std::invalid_argument("compile: unknown pass '" + p + "'");
    }
  }

  CompiledCircuit cc;
  cc.circuit = circuit;
  for (const auto& p : passes) {
    if (p == "decompose") {
      cc.circuit = decompose_to_cz(cc.circuit);
      cc.cz_group.clear();
      cc.dd_gate.clear();
    } else if (p == "merge_u3") {
      cc.circuit = merge_single_qubit(decompose_to_cz(cc.circuit));
      cc.cz_group.clear();
      cc.dd_gate.clear();
    } else if (p == "layerize" || p == "align_right") {
      cc.circuit = layerize(decompose_to_cz(cc.circuit), p == "align_right");
      cc.cz_group.clear();
      cc.dd_gate.clear();
    } else if (p == "group_cz") {
      require_layered(cc.circuit, "group_cz");
      auto layers = to_layers(cc.circuit);
      std::vector<int> groups;
      std::vector<bool> dd_flags;
      std::size_t offset = 0;
      for (std::size_t k = 0; k < layers.size(); ++k) {
        std::vector<std::pair<int, std::size_t>> order;  // (group, original index)
        for (std::size_t i = 0; i < layers[k].size(); ++i) {
          const Gate& g = layers[k][i];
          int grp = -1;
          if (g.kind == GateKind::CZ)
            grp = options.coupler_orientation ? options.coupler_orientation(g.qubits[0], g.qubits[1]) : 0;
          order.emplace_back(grp, i);
        }
        std::stable_sort(order.begin(), order.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Gate> sorted;
        for (const auto& [grp, i] : order) {
          sorted.push_back(layers[k][i]);
          groups.push_back(grp);
          dd_flags.push_back(cc.dd_gate.size() == cc.circuit.size() ? cc.dd_gate[offset + i] : false);
        }
        offset += layers[k].size();
        layers[k] = std::move(sorted);
      }
      cc.circuit = from_layers(cc.circuit.num_qubits(), layers);
      groups.resize(cc.circuit.size());
      dd_flags.resize(cc.circuit.size());
      cc.cz_group = std::move(groups);
      cc.dd_gate = std::move(dd_flags);
    } else if (p == "dd") {
      std::vector<int> old_groups = cc.cz_group;
      const Circuit before = cc.circuit;
      std::vector<bool> flags;
      cc.circuit = insert_dd_impl(before, flags);
      // Carry CZ groups across: DD only appends to SQ layers, so CZ order is kept.
      std::vector<int> groups;
      if (old_groups.size() == before.size()) {
        std::vector<int> cz_groups;
        for (std::size_t i = 0; i < before.size(); ++i)
          if (before.gates()[i].kind == GateKind::CZ) cz_groups.push_back(old_groups[i]);
        std::size_t next = 0;
        for (const auto& g : cc.circuit.gates()) groups.push_back(g.kind == GateKind::CZ ? cz_groups[next++] : -1);
      }
      cc.cz_group = std::move(groups);
      cc.dd_gate = std::move(flags);
    }
  }
  if (!cc.circuit.layered()) {
    // Unlayered output: keep stats meaningful without layer counts.
    cc.cz_group.assign(cc.circuit.size(), -1);
    cc.dd_gate.assign(cc.circuit.size(), false);
  }
  refresh_stats(cc, options);
  return cc;
}

}  // namespace ftl
