#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace somnus {

using VertexId = std::int64_t;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Unordered edge, stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    Edge() = default;
    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge& a, const Edge& b) = default;
    friend auto operator<=>(const Edge& a, const Edge& b) = default;
};

// Undirected simple graph over positive integer vertex ids.
// Adjacency is kept symmetric; the max degree is cached and refreshed on
// mutation.
class Graph {
public:
    Graph() = default;

    void add_vertex(VertexId v);
    void remove_vertex(VertexId v);
    void add_edge(VertexId u, VertexId v);
    void remove_edge(VertexId u, VertexId v);

    bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }
    bool has_edge(VertexId u, VertexId v) const;

    const std::set<VertexId>& neighbors(VertexId v) const;
    std::int64_t degree(VertexId v) const;

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    bool empty() const { return adj_.empty(); }

    // Δ of the current graph; 0 for empty/edgeless graphs.
    std::int64_t max_degree() const;

    std::vector<VertexId> vertices() const;
    std::vector<Edge> edges() const;

    VertexId max_vertex_id() const;

    Graph induced(const std::set<VertexId>& members) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adj_ == b.adj_;
    }

private:
    std::map<VertexId, std::set<VertexId>> adj_;
    std::size_t edge_count_ = 0;
    mutable std::int64_t max_degree_cache_ = -1;  // -1 = stale
};

}  // namespace somnus
