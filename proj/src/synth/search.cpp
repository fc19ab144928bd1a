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


#include "ftl/synth/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ftl/core/parallel.hpp"
#include "ftl/core/rng.hpp"

namespace ftl {

namespace {

struct Member {
  AnsatzPath path;
  std::vector<double> params;
  double loss = 0.0;
};

double initial_angle(CounterRng& rng, double special_fraction) {
  // Mix uniform angles with jittered multiples of pi/2: the entangling
  // structures the search needs (CZ-like CRZ, basis changes) sit there.
  if (rng.uniform() < special_fraction)
    return static_cast<double>(rng.below(4)) * std::numbers::pi / 2 + 0.1 * (2.0 * rng.uniform() - 1.0);
  return (2.0 * rng.uniform() - 1.0) * std::numbers::pi;
}

void extend(const BlockGraph& g, AnsatzPath& path, std::vector<double>& params, int steps, CounterRng& rng,
            double special_fraction) {
  for (int s = 0; s < steps; ++s) {
    const int last = path.nodes.empty() ? BlockGraph::start() : path.nodes.back();
    const auto& next = g.successors(static_cast<std::size_t>(last));
    const int v = next[rng.below(next.size())];
    path.nodes.push_back(v);
    for (int k = 0; k < g.node(static_cast<std::size_t>(v)).param_count(); ++k)
      params.push_back(initial_angle(rng, special_fraction));
  }
}

}  // namespace

SynthesisResult neuroevolution_search(const DenseMatrix& target, const SearchOptions& options) {
  int n = 0;
  while ((std::size_t{1} << n) < target.dim()) ++n;
  if ((std::size_t{1} << n) != target.dim() || n < 1 || n > 4)
    throw std::invalid_argument("neuroevolution_search: target must act on 1 to 4 qubits");
  if (target.unitarity_error() > 1e-10) throw std::invalid_argument("neuroevolution_search: target is not unitary");
  if (options.population < 1 || options.initial_depth < 1 || options.depth_step < 1 || options.generations < 1)
    throw std::invalid_argument("neuroevolution_search: population, depths and generations must be positive");

  const BlockGraph graph = build_block_graph(n, options.pairs);
  const std::size_t pop = static_cast<std::size_t>(options.population);
  const std::size_t keep = (pop + 3) / 4;

  SynthesisResult result;
  result.form = options.optimize.form;
  std::vector<Member> elites;
  Member best;
  best.loss = std::numeric_limits<double>::infinity();
  int stalled = 0;

  for (int gen = 0; gen < options.generations; ++gen) {
    // Every generation prolongs the kept paths; the best member seen so far
    // is tracked separately, so the history stays monotone while the depth
    // keeps growing past plateaus.
    std::vector<Member> members(pop);
    for (std::size_t m = 0; m < pop; ++m) {
      CounterRng rng(options.seed, static_cast<std::uint64_t>(gen), m);
      if (elites.empty()) {
        extend(graph, members[m].path, members[m].params, options.initial_depth, rng, options.special_init);
        continue;
      }
      const Member& parent = elites[m % elites.size()];
      members[m].path = parent.path;
      members[m].params = parent.params;
      extend(graph, members[m].path, members[m].params, options.depth_step, rng, options.special_init);
      // Children past the first round restart from fresh angles so a parent
      // stuck near a saddle does not pin its whole lineage.
      if (m >= elites.size())
        for (auto& t : members[m].params) t = initial_angle(rng, options.special_init);
    }
    parallel_for(pop, options.workers, [&](std::size_t m) {
      auto r = optimize(graph, members[m].path, target, members[m].params, options.optimize);
      // Basin hopping: kick the angles and keep the better local minimum.
      CounterRng hop_rng(options.seed, static_cast<std::uint64_t>(gen), m, 1);
      for (int h = 0; h < options.restarts && r.loss >= options.stop_loss; ++h) {
        std::vector<double> kicked = r.params;
        for (auto& t : kicked) t += options.restart_kick * (2.0 * hop_rng.uniform() - 1.0);
        auto again = optimize(graph, members[m].path, target, std::move(kicked), options.optimize);
        if (again.loss < r.loss) r = std::move(again);
      }
      members[m].params = std::move(r.params);
      members[m].loss = r.loss;
    });

    std::vector<std::size_t> order(pop);
    for (std::size_t i = 0; i < pop; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return members[a].loss < members[b].loss; });
    elites.clear();
    for (std::size_t i = 0; i < keep; ++i) elites.push_back(members[order[i]]);

    const double prev = best.loss;
    if (elites.front().loss < best.loss) best = elites.front();
    if (!result.history.empty()) {
      const double rel = std::abs(prev - best.loss) / std::max(std::abs(prev), 1e-300);
      stalled = rel < options.converge_rel ? stalled + 1 : 0;
    }
    result.history.push_back(best.loss);
    if (best.loss < options.stop_loss || stalled >= options.patience) break;
  }

  result.path = best.path;
  result.params = best.params;
  result.loss = best.loss;
  result.circuit = instantiate(graph, best.path, best.params);
  return result;
}

}  // namespace ftl
