#include <doctest.h>

#include <sstream>

#include "somnus/changes.hpp"
#include "somnus/coloring.hpp"
#include "somnus/enumerate.hpp"
#include "somnus/generators.hpp"
#include "somnus/graph.hpp"
#include "somnus/graph_io.hpp"
#include "somnus/nbhd.hpp"
#include "somnus/orientation.hpp"

using namespace somnus;

namespace {

Graph triangle() {
    Graph g;
    for (VertexId v : {1, 2, 3}) g.add_vertex(v);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    return g;
}

Coloring colored(const Graph& g, std::vector<std::int64_t> colors, std::int64_t palette) {
    Coloring c;
    c.palette = palette;
    std::size_t i = 0;
    for (VertexId v : g.vertices()) c.set(v, colors.at(i++));
    return c;
}

}  // namespace

TEST_CASE("graph invariants and mutation") {
    Graph g = triangle();
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.max_degree() == 2);
    CHECK_THROWS_AS(g.add_edge(1, 1), Error);
    CHECK_THROWS_AS(g.add_edge(1, 2), Error);
    CHECK_THROWS_AS(g.remove_edge(1, 4), Error);
    g.remove_vertex(3);
    CHECK(g.edge_count() == 1);
    CHECK(g.max_degree() == 1);
    for (VertexId v : g.vertices())
        for (VertexId u : g.neighbors(v)) CHECK(g.neighbors(u).count(v));
}

TEST_CASE("generators match the family definitions") {
    Graph p3 = generate_graph(Family::Path, 3, 2, 42);
    CHECK(p3.vertices() == std::vector<VertexId>{1, 2, 3});
    CHECK(p3.edges() == std::vector<Edge>{{1, 2}, {2, 3}});

    Graph star = generate_graph(Family::Star, 4, 3, 0);
    CHECK(star.degree(4) == 3);
    for (VertexId leaf : {1, 2, 3}) {
        CHECK(star.degree(leaf) == 1);
        CHECK(star.has_edge(leaf, 4));
    }

    CHECK_THROWS_AS(generate_graph(Family::Cycle, 2, 2, 1), Error);
    CHECK_THROWS_AS(generate_graph(Family::Star, 5, 3, 1), Error);
}

TEST_CASE("random generation is deterministic and degree capped") {
    Graph a = generate_graph(Family::RandomBoundedDegree, 100, 8, 7);
    Graph b = generate_graph(Family::RandomBoundedDegree, 100, 8, 7);
    CHECK(a == b);
    CHECK(a.max_degree() <= 8);
    Graph c = generate_graph(Family::RandomBoundedDegree, 100, 8, 8);
    CHECK_FALSE(a == c);

    for (Family f : {Family::LineGraphOfRandom, Family::UnitInterval}) {
        Graph g = generate_graph(f, 80, 10, 3);
        CHECK(g.vertex_count() == 80);
        CHECK(g.max_degree() <= 10);
        CHECK(g == generate_graph(f, 80, 10, 3));
    }
}

TEST_CASE("neighborhood independence on the canonical examples") {
    CHECK(neighborhood_independence(triangle()) == 1);

    Graph star = generate_graph(Family::Star, 4, 3, 0);
    CHECK(neighborhood_independence(star) == 3);

    Graph c5 = generate_graph(Family::Cycle, 5, 2, 0);
    CHECK(neighborhood_independence(c5) == 2);

    Graph empty;
    CHECK(neighborhood_independence(empty) == 0);

    Graph wide = generate_graph(Family::Star, 25, 24, 0);
    CHECK_THROWS_AS(neighborhood_independence(wide), Error);
    CHECK(neighborhood_independence(wide, 24) == 24);
}

TEST_CASE("the two independence oracles agree on every small graph") {
    for (int n = 1; n <= 6; ++n)
        for (const SmallGraph& sg : enumerate_graphs(n)) {
            Graph g = to_graph(sg);
            CAPTURE(n);
            CHECK(neighborhood_independence(g) == naive_neighborhood_independence(g));
        }
}

TEST_CASE("line graphs and unit interval graphs have small independence") {
    for (std::uint64_t seed : {1, 2, 3}) {
        Graph lg = generate_graph(Family::LineGraphOfRandom, 60, 10, seed);
        CHECK(neighborhood_independence(lg) <= 2);
        Graph ui = generate_graph(Family::UnitInterval, 60, 10, seed);
        CHECK(neighborhood_independence(ui) <= 2);
    }
}

TEST_CASE("validate_coloring reports violations and completeness") {
    Graph g = triangle();
    auto proper = validate_coloring(g, colored(g, {1, 2, 3}, 3), true);
    CHECK(proper.proper);
    CHECK(proper.colors_used == 3);

    Graph p3 = generate_graph(Family::Path, 3, 2, 0);
    auto bad = validate_coloring(p3, colored(p3, {1, 1, 1}, 1), false);
    CHECK_FALSE(bad.proper);
    CHECK(bad.violations == std::vector<Edge>{{1, 2}, {2, 3}});

    auto uncolored = validate_coloring(p3, colored(p3, {0, 0, 0}, 1), true);
    CHECK_FALSE(uncolored.proper);
    CHECK(validate_coloring(p3, colored(p3, {0, 0, 0}, 1), false).proper);
}

TEST_CASE("coloring defect counts same-color neighbors") {
    Graph g = triangle();
    auto all_one = coloring_defect(g, colored(g, {1, 1, 1}, 1));
    for (const auto& [v, d] : all_one) CHECK(d == 2);

    Graph c5 = generate_graph(Family::Cycle, 5, 2, 0);
    auto defects = coloring_defect(c5, colored(c5, {1, 1, 2, 2, 1}, 2));
    CHECK(defects.at(1) == 2);  // neighbors 2 and 5 share color 1
    CHECK(defects.at(3) == 1);
    CHECK(max_defect(defects) == 2);

    auto proper = coloring_defect(g, colored(g, {1, 2, 3}, 3));
    CHECK(max_defect(proper) == 0);

    CHECK_THROWS_AS(coloring_defect(g, colored(g, {1, 0, 2}, 3)), Error);
}

TEST_CASE("orientation from coloring points toward smaller colors") {
    Graph g = triangle();
    Orientation o = orientation_from_coloring(g, colored(g, {1, 2, 3}, 3));
    CHECK(o.parent_of(1, 2) == 1);
    CHECK(o.parent_of(1, 3) == 1);
    CHECK(o.parent_of(2, 3) == 2);
    CHECK(orientation_is_acyclic(g, o));

    Graph p3 = generate_graph(Family::Path, 3, 2, 0);
    Orientation po = orientation_from_coloring(p3, colored(p3, {1, 2, 1}, 2));
    CHECK(po.parent_of(1, 2) == 1);  // both leaves parent the center
    CHECK(po.parent_of(2, 3) == 3);
    CHECK(orientation_is_acyclic(p3, po));

    CHECK_THROWS_AS(orientation_from_coloring(p3, colored(p3, {1, 1, 2}, 2)), Error);
}

TEST_CASE("orientation by id and its length") {
    Graph p3 = generate_graph(Family::Path, 3, 2, 0);
    Orientation o = orientation_by_id(p3);
    CHECK(o.parent_of(1, 2) == 1);
    CHECK(o.parent_of(2, 3) == 2);
    CHECK(orientation_length(p3, o) == 3);  // worst case: the whole id chain

    Graph star = generate_graph(Family::Star, 4, 3, 0);
    Orientation so = orientation_by_id(star);
    for (VertexId leaf : {1, 2, 3}) CHECK(so.parent_of(leaf, 4) == leaf);
}

TEST_CASE("orientations from generated corpora are acyclic") {
    for (std::uint64_t seed : {1, 5}) {
        Graph g = generate_graph(Family::RandomBoundedDegree, 80, 6, seed);
        CHECK(orientation_is_acyclic(g, orientation_by_id(g)));
    }
}

TEST_CASE("graph file format round trips and is deterministic") {
    Graph g = generate_graph(Family::RandomBoundedDegree, 30, 5, 11);
    std::ostringstream s1, s2;
    write_graph(g, s1);
    write_graph(g, s2);
    CHECK(s1.str() == s2.str());
    std::istringstream in(s1.str());
    CHECK(read_graph(in) == g);
}

TEST_CASE("change batch file format") {
    ChangeBatch batch;
    batch.t = 4;
    batch.events = {ChangeEvent::add_vertex(9), ChangeEvent::add_edge(1, 9),
                    ChangeEvent::remove_edge(1, 2), ChangeEvent::remove_vertex(3)};
    std::ostringstream out;
    write_batch(batch, out);
    CHECK(out.str() == "+v 9\n+e 1 9\n-e 1 2\n-v 3\n");
    std::istringstream in(out.str());
    ChangeBatch parsed = read_batch(in, 4);
    REQUIRE(parsed.events.size() == 4);
    CHECK(parsed.events[1].kind == ChangeEvent::Kind::AddEdge);
    CHECK(parsed.events[3].u == 3);

    std::istringstream too_many("+v 1\n+v 2\n");
    CHECK_THROWS_AS(read_batch(too_many, 1), Error);
}
