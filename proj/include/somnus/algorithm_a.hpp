#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "somnus/coloring.hpp"
#include "somnus/engine.hpp"
#include "somnus/graph.hpp"
#include "somnus/metrics.hpp"
#include "somnus/olocal.hpp"

namespace somnus {

struct AlgoAResult {
    std::map<VertexId, Decision> decisions;
    Metrics metrics;
};

// Algorithm A: every vertex follows the interval schedule of its color; after
// its decision round it forwards its decision, at each of its later wake
// rounds, to the larger-colored neighbors awake in that round; at its
// decision round it must hold the decisions of all smaller-colored neighbors
// and applies the problem rule. Per-vertex awake is ceil(log2 D)+1 and the
// clock is at most 2D-1 for D = 2^ceil(log2(max(d,2))).
AlgoAResult algorithm_a(const Graph& g, const Coloring& c, const OLocalProblem& problem,
                        const std::string& phase_name = "algorithm-a");

// Same, but only `members` run; each member's decide additionally sees its
// fixed outside decisions, and vertices outside members never wake.
AlgoAResult algorithm_a_on_subgraph(
    const Graph& g, const std::set<VertexId>& members, const Coloring& c,
    const std::map<VertexId, std::map<VertexId, Decision>>& fixed_parents,
    const OLocalProblem& problem, const std::string& phase_name = "algorithm-a-sub");

// Shared core used by the color-reduction merges: runs one engine phase over
// `scope_graph` where each vertex talks only to the neighbors listed in its
// scope coloring (its merge group) under the given palette.
AlgoAResult algorithm_a_scoped(
    const Graph& scope_graph, const std::map<VertexId, std::int64_t>& colors, std::int64_t palette,
    const std::map<VertexId, std::map<VertexId, std::int64_t>>& scope_neighbor_colors,
    const std::map<VertexId, std::map<VertexId, Decision>>& fixed_parents,
    const OLocalProblem& problem, const std::string& phase_name);

}  // namespace somnus
