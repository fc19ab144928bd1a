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


#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ftl/core/circuit.hpp"

namespace ftl {

/// A set of parallel gates. Rotation angles are placeholders; the actual
/// values come from the parameter vector when a path is instantiated.
struct Block {
  std::string label;
  std::vector<Gate> gates;

  int param_count() const;
};

/// Directed graph of gate blocks. Node 0 is the empty start block.
class BlockGraph {
 public:
  BlockGraph(int num_qubits, std::vector<Block> nodes, std::vector<std::vector<int>> successors);

  int num_qubits() const { return n_; }
  std::size_t size() const { return nodes_.size(); }
  const Block& node(std::size_t i) const { return nodes_.at(i); }
  const std::vector<int>& successors(std::size_t i) const { return succ_.at(i); }
  bool has_edge(int from, int to) const;
  static constexpr int start() { return 0; }

 private:
  int n_;
  std::vector<Block> nodes_;
  std::vector<std::vector<int>> succ_;
};

/// Nodes: full RX, RY and RZ layers, one CRZ per allowed pair and, when the
/// pairs allow it, CRZ matchings. Any block may follow any other except
/// itself. An empty `pairs` list means a linear chain 0-1-...-(n-1).
BlockGraph build_block_graph(int num_qubits, std::vector<std::pair<int, int>> pairs = {});

/// A path through the graph, starting at the start node (not listed).
struct AnsatzPath {
  std::vector<int> nodes;

  int param_count(const BlockGraph& g) const;
  bool valid(const BlockGraph& g) const;
};

/// Circuit for a path with the given angles bound in order.
Circuit instantiate(const BlockGraph& g, const AnsatzPath& path, std::span<const double> params);

}  // namespace ftl
