#include "somnus/nbhd.hpp"

#include <algorithm>
#include <vector>

namespace somnus {

namespace {

// Exact maximum independent set size on a graph given as bitmask adjacency
// (≤ 63 vertices, used at neighborhood scale). Branches on the highest-degree
// remaining vertex: either exclude it or take it and drop its neighbors.
std::int64_t mis_size(const std::vector<std::uint64_t>& adj, std::uint64_t avail) {
    if (avail == 0) return 0;
    int best = -1;
    int best_deg = -1;
    for (std::uint64_t rest = avail; rest;) {
        int i = __builtin_ctzll(rest);
        rest &= rest - 1;
        int deg = __builtin_popcountll(adj[i] & avail);
        if (deg > best_deg) {
            best_deg = deg;
            best = i;
        }
    }
    if (best_deg == 0) return __builtin_popcountll(avail);  // all isolated: take all
    std::uint64_t bit = 1ULL << best;
    std::int64_t with = 1 + mis_size(adj, avail & ~(adj[best] | bit));
    std::int64_t without = mis_size(adj, avail & ~bit);
    return std::max(with, without);
}

}  // namespace

std::int64_t neighborhood_independence(const Graph& g, std::int64_t degree_cap) {
    if (g.max_degree() > degree_cap)
        throw Error("neighborhood_independence: degree " + std::to_string(g.max_degree()) +
                    " exceeds the exhaustive-search cap " + std::to_string(degree_cap));
    std::int64_t k = 0;
    for (VertexId v : g.vertices()) {
        const auto& nbrs = g.neighbors(v);
        std::vector<VertexId> ids(nbrs.begin(), nbrs.end());
        std::vector<std::uint64_t> adj(ids.size(), 0);
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = 0; j < ids.size(); ++j)
                if (i != j && g.has_edge(ids[i], ids[j])) adj[i] |= 1ULL << j;
        std::uint64_t all = ids.empty() ? 0 : (~0ULL >> (64 - ids.size()));
        k = std::max(k, mis_size(adj, all));
    }
    return k;
}

}  // namespace somnus
