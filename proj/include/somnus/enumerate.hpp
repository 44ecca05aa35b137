#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "somnus/graph.hpp"

namespace somnus {

// Graphs on up to 8 vertices as adjacency bitmask rows, for the exhaustive
// small-graph suites.
struct SmallGraph {
    int n = 0;
    std::array<std::uint8_t, 8> adj{};

    bool edge(int i, int j) const { return (adj[i] >> j) & 1; }
    void set_edge(int i, int j) {
        adj[i] |= static_cast<std::uint8_t>(1u << j);
        adj[j] |= static_cast<std::uint8_t>(1u << i);
    }
};

// All graphs on n vertices up to isomorphism (canonical-augmentation build,
// deduplicated by a branch-and-bound canonical key).
std::vector<SmallGraph> enumerate_graphs(int n);
std::vector<SmallGraph> enumerate_connected_graphs(int n);

bool small_graph_connected(const SmallGraph& g);
std::uint64_t canonical_key(const SmallGraph& g);

Graph to_graph(const SmallGraph& g);  // ids 1..n

// Second, independently written neighborhood-independence oracle: plain
// subset enumeration over each neighborhood. Only for small degrees.
std::int64_t naive_neighborhood_independence(const Graph& g);

}  // namespace somnus
