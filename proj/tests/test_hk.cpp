#include <doctest.h>

#include "somnus/defective.hpp"
#include "somnus/generators.hpp"
#include "somnus/hk.hpp"
#include "somnus/numeric.hpp"

using namespace somnus;

TEST_CASE("iterated ceil log2") {
    CHECK(iterated_ceil_log2(16, 0) == 16);
    CHECK(iterated_ceil_log2(16, 1) == 4);
    CHECK(iterated_ceil_log2(16, 2) == 2);
    CHECK(iterated_ceil_log2(16, 3) == 1);
    CHECK(iterated_ceil_log2(1, 5) == 1);
}

TEST_CASE("h1 on C5") {
    Graph c5 = generate_graph(Family::Cycle, 5, 2, 0);
    HkResult r = h_k(c5, 1);
    auto report = validate_coloring(c5, r.coloring, true);
    CHECK(report.proper);
    CHECK(report.colors_used <= 3);
    CHECK(r.coloring.palette <= 3);
}

TEST_CASE("h2 on a degree-16 instance splits by a p=4 defective coloring") {
    Graph g = generate_graph(Family::RandomBoundedDegree, 300, 16, 5);
    REQUIRE(g.max_degree() == 16);
    HkResult r = h_k(g, 2);
    CHECK(r.p == 4);  // ceil(log2 16)
    auto report = validate_coloring(g, r.coloring, true);
    CHECK(report.proper);
    CHECK(report.colors_used <= 17);
    CHECK(r.coloring.palette <= 17);

    // The class decomposition the cascade consumes: every class's internal
    // degree is bounded by the defect bound.
    DefectiveColoringResult def = defective_coloring(g, 4);
    std::map<std::int64_t, std::set<VertexId>> classes;
    for (VertexId v : g.vertices()) classes[def.coloring.at(v)].insert(v);
    for (const auto& [color, members] : classes)
        CHECK(g.induced(members).max_degree() <= def.defect_bound);
}

TEST_CASE("small degrees clamp p to 2 and stay defined for deep k") {
    Graph g = generate_graph(Family::RandomBoundedDegree, 60, 4, 2);
    for (std::int64_t k = 1; k <= 5; ++k) {
        HkResult r = h_k(g, k);
        auto report = validate_coloring(g, r.coloring, true);
        CHECK(report.proper);
        CHECK(report.colors_used <= g.max_degree() + 1);
        if (k >= 2) CHECK(r.p == 2);
    }
}

TEST_CASE("h_star picks k = log* Delta") {
    Graph d2 = generate_graph(Family::Cycle, 12, 2, 0);
    CHECK(h_star(d2).k == 1);  // log* 2 = 1

    Graph d16 = generate_graph(Family::RandomBoundedDegree, 200, 16, 5);
    REQUIRE(d16.max_degree() == 16);
    CHECK(h_star(d16).k == 3);  // log* 16 = 3

    Graph d32 = generate_graph(Family::RandomBoundedDegree, 300, 32, 6);
    HkResult r = h_star(d32);
    auto report = validate_coloring(d32, r.coloring, true);
    CHECK(report.proper);
    CHECK(report.colors_used <= d32.max_degree() + 1);
}

TEST_CASE("empty and tiny graphs degenerate cleanly") {
    Graph empty;
    CHECK(h_k(empty, 3).coloring.color.empty());
    Graph single;
    single.add_vertex(1);
    HkResult r = h_k(single, 2);
    CHECK(r.coloring.at(1) == 1);
    CHECK_THROWS_AS(h_k(single, 0), Error);
}
