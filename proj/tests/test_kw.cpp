#include <doctest.h>

#include "somnus/generators.hpp"
#include "somnus/kw.hpp"
#include "somnus/linial.hpp"
#include "somnus/numeric.hpp"

using namespace somnus;

namespace {

// Proper coloring with an inflated palette: refine a greedy coloring by the
// vertex id residue so the palette spreads over `factor` blocks.
Coloring spread_coloring(const Graph& g, std::int64_t factor) {
    std::int64_t width = g.max_degree() + 1;
    Coloring base;
    base.palette = width;
    for (VertexId v : g.vertices()) {
        std::set<std::int64_t> used;
        for (VertexId u : g.neighbors(v))
            if (u < v) used.insert(base.at(u));
        std::int64_t c = 1;
        while (used.count(c)) ++c;
        base.set(v, c);
    }
    Coloring spread;
    spread.palette = factor * width;
    for (VertexId v : g.vertices()) spread.set(v, base.at(v) + (v % factor) * width);
    return spread;
}

}  // namespace

TEST_CASE("single block is the identity") {
    Graph g = generate_graph(Family::Cycle, 5, 2, 0);
    Coloring c;
    c.palette = 3;
    std::vector<std::int64_t> colors{1, 2, 1, 2, 3};
    std::size_t i = 0;
    for (VertexId v : g.vertices()) c.set(v, colors[i++]);
    KwResult r = sleeping_kw_iterative(g, c);
    CHECK(r.phases == 0);
    CHECK(r.coloring.color == c.color);
    CHECK(awake_complexity(r.metrics.total) == 0);
}

TEST_CASE("C5 with a 9-color input reduces to a proper 3-coloring") {
    Graph c5 = generate_graph(Family::Cycle, 5, 2, 0);
    Coloring nine;
    nine.palette = 9;
    std::vector<std::int64_t> colors{1, 4, 7, 2, 5};
    std::size_t i = 0;
    for (VertexId v : c5.vertices()) nine.set(v, colors[i++]);
    REQUIRE(validate_coloring(c5, nine, true).proper);

    KwResult r = sleeping_kw_reduce(c5, BlockedColoring::wrap(nine, 3));
    CHECK(r.phases == 2);  // ceil(log2 3)
    CHECK(r.coloring.palette == 3);
    CHECK(validate_coloring(c5, r.coloring, true).proper);
    for (const Coloring& phase : r.phase_colorings)
        CHECK(validate_coloring(c5, phase, true).proper);
}

TEST_CASE("iterative reduction phase counts") {
    Graph g = generate_graph(Family::RandomBoundedDegree, 120, 6, 2);
    std::int64_t width = g.max_degree() + 1;

    Coloring four_blocks = spread_coloring(g, 4);
    REQUIRE(validate_coloring(g, four_blocks, true).proper);
    KwResult r = sleeping_kw_iterative(g, four_blocks);
    CHECK(r.phases == 2);  // ceil(log2 4)
    CHECK(r.coloring.palette == width);
    CHECK(validate_coloring(g, r.coloring, true).proper);
}

TEST_CASE("awake stays within the structural per-phase bound") {
    Graph g = generate_graph(Family::RandomBoundedDegree, 200, 8, 9);
    LinialResult linial = linial_coloring(g);
    std::int64_t width = g.max_degree() + 1;
    BlockedColoring blocked = BlockedColoring::wrap(linial.coloring, width);
    KwResult r = sleeping_kw_reduce(g, blocked);
    std::int64_t bound = ceil_log2(blocked.blocks) * (ceil_log2(2 * width) + 2);
    CHECK(awake_complexity(r.metrics.total) <= bound);
    CHECK(r.phases == expected_grouped_phases(blocked.blocks, 2));
    CHECK(validate_coloring(g, r.coloring, true).proper);
    CHECK(r.coloring.palette == width);
}

TEST_CASE("linial into iterative gives a (Delta+1)-coloring") {
    Graph g = generate_graph(Family::RandomBoundedDegree, 200, 8, 4);
    LinialResult linial = linial_coloring(g);
    KwResult r = sleeping_kw_iterative(g, linial.coloring);
    CHECK(validate_coloring(g, r.coloring, true).proper);
    CHECK(validate_coloring(g, r.coloring, true).colors_used <= g.max_degree() + 1);
}

TEST_CASE("batched with eps=1 finishes in one phase when r <= Delta") {
    Graph g = generate_graph(Family::RandomBoundedDegree, 150, 8, 6);
    std::int64_t width = g.max_degree() + 1;
    Coloring spread = spread_coloring(g, 4);  // 4 blocks <= Delta
    REQUIRE(validate_coloring(g, spread, true).proper);
    KwResult r = batched_kw_reduce(g, BlockedColoring::wrap(spread, width), 1.0);
    CHECK(r.phases == 1);
    CHECK(validate_coloring(g, r.coloring, true).proper);
    CHECK(r.coloring.palette == width);
}

TEST_CASE("group size two reproduces the pairwise reduction exactly") {
    Graph g = generate_graph(Family::RandomBoundedDegree, 100, 4, 3);
    std::int64_t width = g.max_degree() + 1;
    Coloring spread = spread_coloring(g, 8);
    REQUIRE(validate_coloring(g, spread, true).proper);
    BlockedColoring blocked = BlockedColoring::wrap(spread, width);
    KwResult pairwise = sleeping_kw_reduce(g, blocked);
    KwResult grouped = kw_reduce_grouped(g, blocked, 2, "kw");
    CHECK(pairwise.coloring.color == grouped.coloring.color);
    CHECK(pairwise.phases == grouped.phases);
}

TEST_CASE("batched phase count and palette on a linial input") {
    Graph g = generate_graph(Family::RandomBoundedDegree, 400, 16, 5);
    REQUIRE(g.max_degree() == 16);
    LinialResult linial = linial_coloring(g);
    std::int64_t width = g.max_degree() + 1;
    BlockedColoring blocked = BlockedColoring::wrap(linial.coloring, width);
    std::int64_t group = batched_group_size(g.max_degree(), 0.5);
    CHECK(group == 4);
    KwResult r = batched_kw_reduce(g, blocked, 0.5);
    CHECK(r.phases == expected_grouped_phases(blocked.blocks, group));
    CHECK(validate_coloring(g, r.coloring, true).proper);
    CHECK(validate_coloring(g, r.coloring, true).colors_used <= width);
}

TEST_CASE("cross-group neighbors keep disjoint color ranges each phase") {
    Graph g = generate_graph(Family::RandomBoundedDegree, 150, 6, 8);
    std::int64_t width = g.max_degree() + 1;
    Coloring spread = spread_coloring(g, 6);
    REQUIRE(validate_coloring(g, spread, true).proper);
    BlockedColoring blocked = BlockedColoring::wrap(spread, width);

    std::int64_t group = 2;
    std::int64_t r = blocked.blocks;
    Coloring current = blocked.coloring;
    KwResult result = sleeping_kw_reduce(g, blocked);
    for (const Coloring& next : result.phase_colorings) {
        // Adjacent vertices that sat in different groups land in different
        // blocks, hence different color ranges.
        for (const Edge& e : g.edges()) {
            std::int64_t bu = (current.at(e.u) - 1) / width + 1;
            std::int64_t bv = (current.at(e.v) - 1) / width + 1;
            std::int64_t gu = (bu - 1) / group + 1;
            std::int64_t gv = (bv - 1) / group + 1;
            if (gu != gv)
                CHECK((next.at(e.u) - 1) / width != (next.at(e.v) - 1) / width);
        }
        current = next;
        r = (r + group - 1) / group;
    }
    CHECK(r == 1);
}

TEST_CASE("improper inputs and bad eps are rejected") {
    Graph g = generate_graph(Family::Path, 4, 2, 0);
    Coloring bad;
    bad.palette = 6;
    for (VertexId v : g.vertices()) bad.set(v, 1);
    CHECK_THROWS_AS(sleeping_kw_reduce(g, BlockedColoring::wrap(bad, 3)), Error);
    CHECK_THROWS_AS(batched_group_size(8, 0.0), Error);
    CHECK_THROWS_AS(batched_group_size(8, 1.5), Error);
}
