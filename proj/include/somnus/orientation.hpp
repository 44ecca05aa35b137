#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "somnus/coloring.hpp"
#include "somnus/graph.hpp"

namespace somnus {

// Full acyclic orientation: every edge points from its parent (the endpoint
// with the strictly smaller label) to its child.
struct Orientation {
    std::map<Edge, VertexId> parent;
    std::map<VertexId, std::int64_t> labels;

    VertexId parent_of(VertexId u, VertexId v) const {
        auto it = parent.find(Edge(u, v));
        if (it == parent.end()) throw Error("orientation: unknown edge");
        return it->second;
    }
};

// Partial orientation of §-style ruling-set parents: M(v) is an independent
// set of smaller-labeled neighbors, listed in the order the greedy chose them.
struct PartialOrientation {
    std::map<VertexId, std::vector<VertexId>> parents;
    std::map<VertexId, std::int64_t> labels;
};

// labels = colors, parent = smaller-color endpoint. Requires a proper and
// complete coloring.
Orientation orientation_from_coloring(const Graph& g, const Coloring& c);

// labels = vertex ids, parent = smaller-id endpoint.
Orientation orientation_by_id(const Graph& g);

// True iff the parent->child relation has no directed cycle (checked by
// topological sort; used by the validators).
bool orientation_is_acyclic(const Graph& g, const Orientation& o);

// Longest directed path length, in vertices, of the oriented graph.
std::int64_t orientation_length(const Graph& g, const Orientation& o);

}  // namespace somnus
