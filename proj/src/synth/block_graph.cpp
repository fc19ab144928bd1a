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


#include "ftl/synth/block_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace ftl {

int Block::param_count() const {
  int k = 0;
  for (const auto& g : gates) k += is_rotation(g.kind) ? 1 : 0;
  return k;
}

BlockGraph::BlockGraph(int num_qubits, std::vector<Block> nodes, std::vector<std::vector<int>> successors)
    : n_(num_qubits), nodes_(std::move(nodes)), succ_(std::move(successors)) {
  if (nodes_.empty() || !nodes_.front().gates.empty())
    throw std::invalid_argument("BlockGraph: node 0 must be the empty start block");
  if (succ_.size() != nodes_.size()) throw std::invalid_argument("BlockGraph: successor table size mismatch");
  for (const auto& b : nodes_) {
    std::vector<bool> used(static_cast<std::size_t>(n_), false);
    for (const auto& g : b.gates) {
      validate_gate(g, n_);
      for (int j = 0; j < g.arity(); ++j) {
        const auto q = static_cast<std::size_t>(g.qubits[static_cast<std::size_t>(j)]);
        if (used[q]) throw std::invalid_argument("BlockGraph: block '" + b.label + "' reuses a qubit");
        used[q] = true;
      }
    }
  }
  for (const auto& s : succ_)
    for (int t : s)
      if (t <= 0 || static_cast<std::size_t>(t) >= nodes_.size())
        throw std::invalid_argument("BlockGraph: edge to an invalid node");
}

bool BlockGraph::has_edge(int from, int to) const {
  const auto& s = succ_.at(static_cast<std::size_t>(from));
  return std::find(s.begin(), s.end(), to) != s.end();
}

BlockGraph build_block_graph(int num_qubits, std::vector<std::pair<int, int>> pairs) {
  if (num_qubits < 1 || num_qubits > 6) throw std::invalid_argument("build_block_graph: 1 to 6 qubits supported");
  if (pairs.empty())
    for (int q = 0; q + 1 < num_qubits; ++q) pairs.emplace_back(q, q + 1);

  std::vector<Block> nodes{{"start", {}}};
  const std::pair<GateKind, const char*> axes[] = {{GateKind::RX, "rx"}, {GateKind::RY, "ry"}, {GateKind::RZ, "rz"}};
  for (const auto& [kind, name] : axes) {
    Block b{std::string(name) + "-layer", {}};
    for (int q = 0; q < num_qubits; ++q) b.gates.push_back({kind, {q, -1}, {0, 0, 0}});
    nodes.push_back(std::move(b));
  }
  for (const auto& [a, c] : pairs) {
    nodes.push_back({"crz" + std::to_string(a) + "-" + std::to_string(c), {Gate::crz(a, c, 0.0)}});
  }
  // Greedy matchings starting from each pair, so several CRZ can run at once.
  std::vector<std::vector<std::size_t>> seen;
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    std::vector<bool> used(static_cast<std::size_t>(num_qubits), false);
    std::vector<std::size_t> pick;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto& [a, c] = pairs[(s + k) % pairs.size()];
      if (used[static_cast<std::size_t>(a)] || used[static_cast<std::size_t>(c)]) continue;
      used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(c)] = true;
      pick.push_back((s + k) % pairs.size());
    }
    std::sort(pick.begin(), pick.end());
    if (pick.size() < 2 || std::find(seen.begin(), seen.end(), pick) != seen.end()) continue;
    seen.push_back(pick);
    Block b{"crz-matching", {}};
    for (std::size_t k : pick) b.gates.push_back(Gate::crz(pairs[k].first, pairs[k].second, 0.0));
    nodes.push_back(std::move(b));
  }

  std::vector<std::vector<int>> succ(nodes.size());
  // Two entangling blocks in a row only add a redundant CRZ angle, so an
  // entangler is always followed by a rotation layer.
  auto entangling = [&](std::size_t i) { return !nodes[i].gates.empty() && nodes[i].gates.front().arity() == 2; };
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 1; j < nodes.size(); ++j)
      if (i != j && !(entangling(i) && entangling(j))) succ[i].push_back(static_cast<int>(j));
  return BlockGraph(num_qubits, std::move(nodes), std::move(succ));
}

int AnsatzPath::param_count(const BlockGraph& g) const {
  int k = 0;
  for (int v : nodes) k += g.node(static_cast<std::size_t>(v)).param_count();
  return k;
}

bool AnsatzPath::valid(const BlockGraph& g) const {
  int prev = BlockGraph::start();
  for (int v : nodes) {
    if (v <= 0 || static_cast<std::size_t>(v) >= g.size() || !g.has_edge(prev, v)) return false;
    prev = v;
  }
  return true;
}

Circuit instantiate(const BlockGraph& g, const AnsatzPath& path, std::span<const double> params) {
  if (params.size() != static_cast<std::size_t>(path.param_count(g)))
    throw std::invalid_argument("instantiate: expected " + std::to_string(path.param_count(g)) + " parameters, got " +
                                std::to_string(params.size()));
  Circuit c(g.num_qubits());
  std::size_t k = 0;
  for (int v : path.nodes) {
    for (Gate gate : g.node(static_cast<std::size_t>(v)).gates) {
      if (is_rotation(gate.kind)) gate.params[0] = params[k++];
      c.add(gate);
    }
  }
  return c;
}

}  // namespace ftl
