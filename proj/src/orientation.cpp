#include "somnus/orientation.hpp"

#include <algorithm>
#include <deque>

namespace somnus {

Orientation orientation_from_coloring(const Graph& g, const Coloring& c) {
    ColoringReport report = validate_coloring(g, c, /*require_complete=*/true);
    if (!report.proper) throw Error("orientation_from_coloring: coloring not proper/complete");
    Orientation o;
    for (VertexId v : g.vertices()) o.labels[v] = c.at(v);
    for (const Edge& e : g.edges())
        o.parent[e] = c.at(e.u) < c.at(e.v) ? e.u : e.v;
    return o;
}

Orientation orientation_by_id(const Graph& g) {
    Orientation o;
    for (VertexId v : g.vertices()) o.labels[v] = v;
    for (const Edge& e : g.edges()) o.parent[e] = e.u;
    return o;
}

namespace {

// Kahn topological sort over oriented edges; returns processed vertex count.
std::size_t topo_count(const Graph& g, const Orientation& o,
                       std::map<VertexId, std::int64_t>* depth_out) {
    std::map<VertexId, std::int64_t> indeg;
    for (VertexId v : g.vertices()) indeg[v] = 0;
    for (const auto& [e, p] : o.parent) {
        VertexId child = (p == e.u) ? e.v : e.u;
        ++indeg[child];
    }
    std::deque<VertexId> frontier;
    std::map<VertexId, std::int64_t> depth;
    for (const auto& [v, d] : indeg)
        if (d == 0) {
            frontier.push_back(v);
            depth[v] = 1;
        }
    std::size_t processed = 0;
    while (!frontier.empty()) {
        VertexId v = frontier.front();
        frontier.pop_front();
        ++processed;
        for (VertexId u : g.neighbors(v)) {
            if (o.parent_of(v, u) != v) continue;  // v must be the parent
            depth[u] = std::max(depth[u], depth[v] + 1);
            if (--indeg[u] == 0) frontier.push_back(u);
        }
    }
    if (depth_out) *depth_out = depth;
    return processed;
}

}  // namespace

bool orientation_is_acyclic(const Graph& g, const Orientation& o) {
    return topo_count(g, o, nullptr) == g.vertex_count();
}

std::int64_t orientation_length(const Graph& g, const Orientation& o) {
    std::map<VertexId, std::int64_t> depth;
    if (topo_count(g, o, &depth) != g.vertex_count())
        throw Error("orientation_length: orientation has a cycle");
    std::int64_t len = 0;
    for (const auto& [v, d] : depth) len = std::max(len, d);
    return len;
}

}  // namespace somnus
