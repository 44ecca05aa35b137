#include "somnus/enumerate.hpp"

#include <algorithm>
#include <set>

namespace somnus {

namespace {

// Branch-and-bound search for the lexicographically largest lower-triangle
// bit string over all vertex relabelings. Bit (i,j), j<i, is appended
// row-major as positions are assigned, so prefixes are comparable early.
struct CanonSearch {
    const SmallGraph* g;
    int n;
    int total_bits;
    std::uint64_t best;
    std::array<int, 8> perm{};

    void run() {
        best = 0;
        dfs(0, 0, 0, 0);
    }

    void dfs(int pos, std::uint64_t prefix, int bits, std::uint8_t used) {
        if (pos == n) {
            best = std::max(best, prefix);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            std::uint64_t next = prefix;
            for (int j = 0; j < pos; ++j)
                next = (next << 1) | (g->edge(v, perm[j]) ? 1u : 0u);
            int next_bits = bits + pos;
            int slack = total_bits - next_bits;
            std::uint64_t ceiling = (next << slack) | ((slack == 64 ? 0 : (1ULL << slack)) - 1);
            if (ceiling < best) continue;  // even a perfect completion loses
            perm[pos] = v;
            dfs(pos + 1, next, next_bits, static_cast<std::uint8_t>(used | (1u << v)));
        }
    }
};

}  // namespace

std::uint64_t canonical_key(const SmallGraph& g) {
    CanonSearch search;
    search.g = &g;
    search.n = g.n;
    search.total_bits = g.n * (g.n - 1) / 2;
    search.run();
    return search.best;
}

std::vector<SmallGraph> enumerate_graphs(int n) {
    if (n < 1 || n > 8) throw Error("enumerate_graphs: n must be in [1..8]");
    std::vector<SmallGraph> level;
    level.push_back(SmallGraph{1, {}});
    for (int k = 2; k <= n; ++k) {
        std::vector<SmallGraph> next;
        std::set<std::uint64_t> seen;
        for (const SmallGraph& g : level) {
            for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
                SmallGraph h;
                h.n = k;
                h.adj = g.adj;
                for (int j = 0; j < k - 1; ++j)
                    if ((mask >> j) & 1) h.set_edge(k - 1, j);
                if (seen.insert(canonical_key(h)).second) next.push_back(h);
            }
        }
        level = std::move(next);
    }
    return level;
}

bool small_graph_connected(const SmallGraph& g) {
    if (g.n == 0) return true;
    std::uint8_t seen = 1;
    std::uint8_t frontier = 1;
    while (frontier) {
        std::uint8_t grow = 0;
        for (int i = 0; i < g.n; ++i)
            if ((frontier >> i) & 1) grow |= g.adj[i];
        frontier = grow & static_cast<std::uint8_t>(~seen);
        seen |= grow;
    }
    return seen == static_cast<std::uint8_t>((1u << g.n) - 1);
}

std::vector<SmallGraph> enumerate_connected_graphs(int n) {
    std::vector<SmallGraph> all = enumerate_graphs(n);
    std::vector<SmallGraph> out;
    for (const SmallGraph& g : all)
        if (small_graph_connected(g)) out.push_back(g);
    return out;
}

Graph to_graph(const SmallGraph& g) {
    Graph out;
    for (int i = 0; i < g.n; ++i) out.add_vertex(i + 1);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.edge(i, j)) out.add_edge(i + 1, j + 1);
    return out;
}

std::int64_t naive_neighborhood_independence(const Graph& g) {
    std::int64_t k = 0;
    for (VertexId v : g.vertices()) {
        std::vector<VertexId> nbrs(g.neighbors(v).begin(), g.neighbors(v).end());
        if (nbrs.size() > 24) throw Error("naive_neighborhood_independence: degree too large");
        for (std::uint32_t subset = 0; subset < (1u << nbrs.size()); ++subset) {
            bool independent = true;
            for (std::size_t i = 0; i < nbrs.size() && independent; ++i)
                for (std::size_t j = i + 1; j < nbrs.size() && independent; ++j)
                    if (((subset >> i) & 1) && ((subset >> j) & 1) &&
                        g.has_edge(nbrs[i], nbrs[j]))
                        independent = false;
            if (independent)
                k = std::max<std::int64_t>(k, __builtin_popcount(subset));
        }
    }
    return k;
}

}  // namespace somnus
