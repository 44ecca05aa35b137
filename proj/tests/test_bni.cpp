#include <doctest.h>

#include <algorithm>

#include "somnus/bni.hpp"
#include "somnus/generators.hpp"
#include "somnus/linial.hpp"
#include "somnus/nbhd.hpp"
#include "somnus/olocal.hpp"

using namespace somnus;

namespace {

std::map<VertexId, std::int64_t> id_labels(const Graph& g) {
    std::map<VertexId, std::int64_t> labels;
    for (VertexId v : g.vertices()) labels[v] = v;
    return labels;
}

Graph triangle() {
    Graph g;
    for (VertexId v : {1, 2, 3}) g.add_vertex(v);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    return g;
}

}  // namespace

TEST_CASE("ruling-set parents on the worked examples") {
    auto [k3, k3m] = build_partial_orientation(triangle(), id_labels(triangle()));
    CHECK(k3.parents.at(3) == std::vector<VertexId>{2});  // 2 first, then 1 blocked
    CHECK(k3.parents.at(2) == std::vector<VertexId>{1});
    CHECK(k3.parents.at(1).empty());
    CHECK(k3m.clock_rounds == 1);

    Graph star = generate_graph(Family::Star, 4, 3, 0);
    auto [so, sm] = build_partial_orientation(star, id_labels(star));
    CHECK(so.parents.at(4) == std::vector<VertexId>{3, 2, 1});  // mutually independent leaves
    for (VertexId leaf : {1, 2, 3}) CHECK(so.parents.at(leaf).empty());

    Graph edgeless;
    for (VertexId v : {1, 2, 3}) edgeless.add_vertex(v);
    auto [eo, em] = build_partial_orientation(edgeless, id_labels(edgeless));
    for (VertexId v : {1, 2, 3}) CHECK(eo.parents.at(v).empty());
}

TEST_CASE("adjacent label ties are rejected") {
    Graph p2 = generate_graph(Family::Path, 2, 1, 0);
    std::map<VertexId, std::int64_t> labels{{1, 5}, {2, 5}};
    CHECK_THROWS_AS(build_partial_orientation(p2, labels), Error);
}

TEST_CASE("K3 relay: vertex 3 learns the decision of 1 through 2 at round 2") {
    Graph g = triangle();
    BniRun run = bni_solve(g, id_labels(g), problem_by_name("mis"));
    CHECK(run.decisions.at(1) == MisProblem::kIn);
    CHECK(run.decisions.at(2) == MisProblem::kOut);
    CHECK(run.decisions.at(3) == MisProblem::kOut);

    bool relayed = false;
    for (const BniReception& r : run.receptions.at(3))
        if (r.origin == 1 && r.from == 2 && r.round == 2) relayed = true;
    CHECK(relayed);
    CHECK(relay_chains_ok(g, id_labels(g), run));
}

TEST_CASE("star: leaves IN, center OUT, center awake K+2 counting collection") {
    Graph star = generate_graph(Family::Star, 4, 3, 0);
    BniRun run = bni_solve(star, id_labels(star), problem_by_name("mis"));
    for (VertexId leaf : {1, 2, 3}) CHECK(run.decisions.at(leaf) == MisProblem::kIn);
    CHECK(run.decisions.at(4) == MisProblem::kOut);
    // Scheduled rounds {1,2,3} plus its own label 4, plus the collection round.
    CHECK(run.metrics.total.awake_of(4) == 5);
    CHECK(awake_complexity(run.metrics.total) == neighborhood_independence(star) + 2);
}

TEST_CASE("single vertex decides alone with two awake rounds") {
    Graph g;
    g.add_vertex(3);
    BniRun run = bni_solve(g, id_labels(g), problem_by_name("mis"));
    CHECK(run.decisions.at(3) == MisProblem::kIn);
    CHECK(run.metrics.total.awake_of(3) == 2);
    CHECK(run.metrics.total.clock_rounds == 1 + 3);  // collection + label rounds
}

TEST_CASE("parent sets are independent and within the independence number") {
    for (std::uint64_t seed : {1, 2, 3}) {
        Graph g = generate_graph(Family::RandomBoundedDegree, 120, 8, seed);
        std::int64_t k = neighborhood_independence(g);
        auto [po, m] = build_partial_orientation(g, id_labels(g));
        for (const auto& [v, parents] : po.parents) {
            CHECK(static_cast<std::int64_t>(parents.size()) <= k);
            for (std::size_t i = 0; i < parents.size(); ++i) {
                CHECK(g.has_edge(v, parents[i]));
                CHECK(parents[i] < v);
                for (std::size_t j = i + 1; j < parents.size(); ++j)
                    CHECK_FALSE(g.has_edge(parents[i], parents[j]));
            }
        }
    }
}

TEST_CASE("awake bound K+2 and oracle agreement on the small-K corpora") {
    for (Family family : {Family::LineGraphOfRandom, Family::UnitInterval}) {
        for (std::uint64_t seed : {1, 2}) {
            Graph g = generate_graph(family, 80, 10, seed);
            std::int64_t k = neighborhood_independence(g);
            for (const char* name : {"mis", "greedy"}) {
                const OLocalProblem& problem = problem_by_name(name);
                BniRun run = bni_solve(g, id_labels(g), problem);
                CHECK(awake_complexity(run.metrics.total) <= k + 2);
                CHECK(run.decisions == sequential_solve(g, id_labels(g), problem));
                CHECK(problem.validate(g, run.decisions));
                CHECK(relay_chains_ok(g, id_labels(g), run));
            }
        }
    }
}

TEST_CASE("bni with linial labels keeps the awake bound and shortens the clock") {
    Graph g = generate_graph(Family::LineGraphOfRandom, 120, 10, 4);
    LinialResult lin = linial_coloring(g);
    std::map<VertexId, std::int64_t> labels;
    for (VertexId v : g.vertices()) labels[v] = lin.coloring.at(v);
    std::int64_t k = neighborhood_independence(g);
    BniRun run = bni_solve(g, labels, problem_by_name("greedy"));
    CHECK(awake_complexity(run.metrics.total) <= k + 2);
    CHECK(problem_by_name("greedy").validate(g, run.decisions));
    CHECK(relay_chains_ok(g, labels, run));
    // Label-indexed rounds: the solve clock tracks the palette, not n.
    CHECK(run.metrics.phases.at(1).second.clock_rounds <= lin.coloring.palette);
}

TEST_CASE("decision log export is well formed") {
    Graph g = triangle();
    BniRun run = bni_solve(g, id_labels(g), problem_by_name("mis"));
    std::string json = bni_log_json(run);
    CHECK(json.find("\"decisions\"") != std::string::npos);
    CHECK(json.find("\"receptions\"") != std::string::npos);
}
