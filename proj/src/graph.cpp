#include "somnus/graph.hpp"

#include <algorithm>

namespace somnus {

void Graph::add_vertex(VertexId v) {
    if (v <= 0) throw Error("vertex ids must be positive, got " + std::to_string(v));
    if (adj_.count(v)) throw Error("duplicate vertex " + std::to_string(v));
    adj_[v];
    max_degree_cache_ = -1;
}

void Graph::remove_vertex(VertexId v) {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw Error("remove of absent vertex " + std::to_string(v));
    for (VertexId u : it->second) {
        adj_[u].erase(v);
        --edge_count_;
    }
    adj_.erase(it);
    max_degree_cache_ = -1;
}

void Graph::add_edge(VertexId u, VertexId v) {
    if (u == v) throw Error("self-loop at " + std::to_string(u));
    if (!has_vertex(u) || !has_vertex(v))
        throw Error("edge endpoint missing: " + std::to_string(u) + "-" + std::to_string(v));
    if (adj_[u].count(v)) throw Error("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++edge_count_;
    max_degree_cache_ = -1;
}

void Graph::remove_edge(VertexId u, VertexId v) {
    if (!has_edge(u, v))
        throw Error("remove of absent edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u].erase(v);
    adj_[v].erase(u);
    --edge_count_;
    max_degree_cache_ = -1;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.count(v) != 0;
}

const std::set<VertexId>& Graph::neighbors(VertexId v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw Error("unknown vertex " + std::to_string(v));
    return it->second;
}

std::int64_t Graph::degree(VertexId v) const {
    return static_cast<std::int64_t>(neighbors(v).size());
}

std::int64_t Graph::max_degree() const {
    if (max_degree_cache_ < 0) {
        std::int64_t d = 0;
        for (const auto& [v, nbrs] : adj_)
            d = std::max(d, static_cast<std::int64_t>(nbrs.size()));
        max_degree_cache_ = d;
    }
    return max_degree_cache_;
}

std::vector<VertexId> Graph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(adj_.size());
    for (const auto& [v, nbrs] : adj_) out.push_back(v);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (const auto& [v, nbrs] : adj_)
        for (VertexId u : nbrs)
            if (v < u) out.emplace_back(v, u);
    return out;
}

VertexId Graph::max_vertex_id() const {
    if (adj_.empty()) return 0;
    return adj_.rbegin()->first;
}

Graph Graph::induced(const std::set<VertexId>& members) const {
    Graph g;
    for (VertexId v : members) {
        if (!has_vertex(v)) throw Error("induced: unknown vertex " + std::to_string(v));
        g.add_vertex(v);
    }
    for (VertexId v : members)
        for (VertexId u : neighbors(v))
            if (v < u && members.count(u)) g.add_edge(v, u);
    return g;
}

}  // namespace somnus
