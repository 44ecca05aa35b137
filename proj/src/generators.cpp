#include "somnus/generators.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace somnus {

Family family_from_string(const std::string& name) {
    if (name == "path") return Family::Path;
    if (name == "cycle") return Family::Cycle;
    if (name == "star") return Family::Star;
    if (name == "random-bounded-degree") return Family::RandomBoundedDegree;
    if (name == "line-graph-of-random") return Family::LineGraphOfRandom;
    if (name == "unit-interval") return Family::UnitInterval;
    throw Error("unknown graph family: " + name);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Star: return "star";
        case Family::RandomBoundedDegree: return "random-bounded-degree";
        case Family::LineGraphOfRandom: return "line-graph-of-random";
        case Family::UnitInterval: return "unit-interval";
    }
    throw Error("unknown graph family enum");
}

namespace {

// mt19937_64 has a standard-pinned sequence; raw modulo keeps sampling
// implementation-independent (distribution objects are not portable).
std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

Graph make_path(std::int64_t n, std::int64_t dmax) {
    if (n >= 3 && dmax < 2) throw Error("path: dmax < 2 infeasible");
    if (n == 2 && dmax < 1) throw Error("path: dmax < 1 infeasible");
    Graph g;
    for (VertexId v = 1; v <= n; ++v) g.add_vertex(v);
    for (VertexId v = 1; v + 1 <= n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph make_cycle(std::int64_t n, std::int64_t dmax) {
    if (n < 3) throw Error("cycle: n < 3 infeasible");
    if (dmax < 2) throw Error("cycle: dmax < 2 infeasible");
    Graph g = make_path(n, dmax);
    g.add_edge(1, n);
    return g;
}

Graph make_star(std::int64_t n, std::int64_t dmax) {
    if (n >= 2 && dmax < n - 1) throw Error("star: center degree exceeds dmax");
    Graph g;
    for (VertexId v = 1; v <= n; ++v) g.add_vertex(v);
    for (VertexId v = 1; v < n; ++v) g.add_edge(v, n);
    return g;
}

Graph make_random_bounded(std::int64_t n, std::int64_t dmax, std::mt19937_64& rng) {
    Graph g;
    for (VertexId v = 1; v <= n; ++v) g.add_vertex(v);
    if (n < 2) return g;
    std::int64_t attempts = 4 * n * std::max<std::int64_t>(dmax, 1);
    for (std::int64_t i = 0; i < attempts; ++i) {
        VertexId u = 1 + static_cast<VertexId>(pick(rng, n));
        VertexId v = 1 + static_cast<VertexId>(pick(rng, n));
        if (u == v || g.has_edge(u, v)) continue;
        if (g.degree(u) >= dmax || g.degree(v) >= dmax) continue;
        g.add_edge(u, v);
    }
    return g;
}

Graph make_line_graph(std::int64_t n, std::int64_t dmax, std::mt19937_64& rng) {
    // Line-graph degree is deg(u)+deg(v)-2; capping the base at b keeps it
    // within dmax.
    std::int64_t b = std::max<std::int64_t>(2, dmax / 2 + 1);
    std::int64_t n_base = std::max<std::int64_t>(3, (5 * n) / (2 * b) + 3);
    Graph base;
    for (VertexId v = 1; v <= n_base; ++v) base.add_vertex(v);
    std::int64_t attempts = 200 * std::max<std::int64_t>(n, 1);
    while (static_cast<std::int64_t>(base.edge_count()) < n && attempts-- > 0) {
        VertexId u = 1 + static_cast<VertexId>(pick(rng, n_base));
        VertexId v = 1 + static_cast<VertexId>(pick(rng, n_base));
        if (u == v || base.has_edge(u, v)) continue;
        if (base.degree(u) >= b || base.degree(v) >= b) continue;
        base.add_edge(u, v);
    }
    if (static_cast<std::int64_t>(base.edge_count()) < n)
        throw Error("line-graph-of-random: could not realize n edges under the degree cap");

    std::vector<Edge> base_edges = base.edges();  // sorted; id i+1 = edge i
    Graph g;
    for (VertexId v = 1; v <= n; ++v) g.add_vertex(v);
    for (std::size_t i = 0; i < base_edges.size(); ++i)
        for (std::size_t j = i + 1; j < base_edges.size(); ++j) {
            const Edge& a = base_edges[i];
            const Edge& c = base_edges[j];
            if (a.u == c.u || a.u == c.v || a.v == c.u || a.v == c.v)
                g.add_edge(static_cast<VertexId>(i + 1), static_cast<VertexId>(j + 1));
        }
    return g;
}

Graph make_unit_interval(std::int64_t n, std::int64_t dmax, std::mt19937_64& rng) {
    // Integer positions at resolution 1024 per unit interval; points that
    // would push any degree past dmax are skipped.
    const std::int64_t res = 1024;
    std::int64_t span_units = std::max<std::int64_t>(1, (3 * n) / std::max<std::int64_t>(dmax, 1));
    std::int64_t span = span_units * res;
    std::vector<std::int64_t> accepted;  // kept sorted
    auto window = [&](std::int64_t p) {
        auto lo = std::lower_bound(accepted.begin(), accepted.end(), p - res);
        auto hi = std::upper_bound(accepted.begin(), accepted.end(), p + res);
        return std::pair(lo, hi);
    };
    std::int64_t attempts = 60 * std::max<std::int64_t>(n, 1);
    while (static_cast<std::int64_t>(accepted.size()) < n && attempts-- > 0) {
        std::int64_t p = static_cast<std::int64_t>(pick(rng, static_cast<std::uint64_t>(span)));
        auto [lo, hi] = window(p);
        std::int64_t deg = hi - lo;
        if (deg > dmax) continue;
        bool ok = true;
        for (auto it = lo; it != hi && ok; ++it) {
            auto [qlo, qhi] = window(*it);
            if ((qhi - qlo - 1) + 1 > dmax) ok = false;  // neighbor's degree after insert
        }
        if (!ok) continue;
        accepted.insert(std::upper_bound(accepted.begin(), accepted.end(), p), p);
    }
    if (static_cast<std::int64_t>(accepted.size()) < n)
        throw Error("unit-interval: could not place n intervals under the degree cap");
    Graph g;
    for (VertexId v = 1; v <= n; ++v) g.add_vertex(v);
    for (std::size_t i = 0; i < accepted.size(); ++i)
        for (std::size_t j = i + 1; j < accepted.size(); ++j) {
            if (accepted[j] - accepted[i] > res) break;
            g.add_edge(static_cast<VertexId>(i + 1), static_cast<VertexId>(j + 1));
        }
    return g;
}

}  // namespace

Graph generate_graph(Family family, std::int64_t n, std::int64_t dmax, std::uint64_t seed) {
    if (n < 0) throw Error("generate_graph: n must be >= 0");
    if (dmax < 1) throw Error("generate_graph: dmax must be >= 1");
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(family) + 1);
    switch (family) {
        case Family::Path: return make_path(n, dmax);
        case Family::Cycle: return make_cycle(n, dmax);
        case Family::Star: return make_star(n, dmax);
        case Family::RandomBoundedDegree: return make_random_bounded(n, dmax, rng);
        case Family::LineGraphOfRandom: return make_line_graph(n, dmax, rng);
        case Family::UnitInterval: return make_unit_interval(n, dmax, rng);
    }
    throw Error("generate_graph: unknown family");
}

}  // namespace somnus
