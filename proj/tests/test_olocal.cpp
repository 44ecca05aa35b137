#include <doctest.h>

#include "somnus/algorithm_a.hpp"
#include "somnus/enumerate.hpp"
#include "somnus/generators.hpp"
#include "somnus/numeric.hpp"
#include "somnus/olocal.hpp"

using namespace somnus;

namespace {

std::map<VertexId, std::int64_t> id_labels(const Graph& g) {
    std::map<VertexId, std::int64_t> labels;
    for (VertexId v : g.vertices()) labels[v] = v;
    return labels;
}

}  // namespace

TEST_CASE("interval schedule hand examples") {
    IntervalSchedule one = build_interval_schedule(1, 1);
    CHECK(one.rounds == std::vector<std::int64_t>{1, 2});
    CHECK(one.decision_round == 1);
    CHECK(one.padded_leaves == 2);

    // d=4: in-order numbering leaf1=1, inner=2, leaf2=3, root=4, leaf3=5,
    // inner=6, leaf4=7.
    IntervalSchedule s = build_interval_schedule(3, 4);
    CHECK(s.rounds == std::vector<std::int64_t>{4, 5, 6});
    CHECK(s.decision_round == 5);

    for (std::int64_t d : {1, 2, 5, 9, 100}) {
        IntervalSchedule first = build_interval_schedule(1, d);
        CHECK(first.decision_round == 1);
        CHECK(first.rounds.front() == 1);
    }
    CHECK_THROWS_AS(build_interval_schedule(0, 4), Error);
    CHECK_THROWS_AS(build_interval_schedule(5, 4), Error);
}

TEST_CASE("interval schedule size and range bounds") {
    for (std::int64_t d : {1, 2, 3, 4, 9, 17, 33, 100}) {
        std::int64_t D = padded_leaves(d);
        for (std::int64_t label = 1; label <= d; ++label) {
            IntervalSchedule s = build_interval_schedule(label, d);
            CHECK(static_cast<std::int64_t>(s.rounds.size()) == ceil_log2(D) + 1);
            CHECK(s.rounds.back() <= 2 * D - 1);
            CHECK(std::is_sorted(s.rounds.begin(), s.rounds.end()));
        }
    }
}

TEST_CASE("LCA round lies strictly between the decision rounds, exhaustively to 256") {
    for (std::int64_t a = 1; a < 256; ++a)
        for (std::int64_t b = a + 1; b <= 256; ++b) {
            std::int64_t lca = interval_lca_round(a, b, 256);
            CHECK(2 * a - 1 < lca);
            CHECK(lca < 2 * b - 1);
            // The LCA round is on both schedules.
            IntervalSchedule sa = build_interval_schedule(a, 256);
            IntervalSchedule sb = build_interval_schedule(b, 256);
            CHECK(std::binary_search(sa.rounds.begin(), sa.rounds.end(), lca));
            CHECK(std::binary_search(sb.rounds.begin(), sb.rounds.end(), lca));
        }
}

TEST_CASE("algorithm A on the worked examples") {
    Graph k3;
    for (VertexId v : {1, 2, 3}) k3.add_vertex(v);
    k3.add_edge(1, 2);
    k3.add_edge(1, 3);
    k3.add_edge(2, 3);
    Coloring c3;
    c3.palette = 3;
    for (VertexId v : {1, 2, 3}) c3.set(v, v);
    AlgoAResult greedy = algorithm_a(k3, c3, problem_by_name("greedy"));
    CHECK(greedy.decisions == std::map<VertexId, Decision>{{1, 1}, {2, 2}, {3, 3}});

    Graph p3 = generate_graph(Family::Path, 3, 2, 0);
    Coloring pc;
    pc.palette = 2;
    pc.set(2, 1);  // center decides first
    pc.set(1, 2);
    pc.set(3, 2);
    AlgoAResult mis = algorithm_a(p3, pc, problem_by_name("mis"));
    CHECK(mis.decisions.at(2) == MisProblem::kIn);
    CHECK(mis.decisions.at(1) == MisProblem::kOut);
    CHECK(mis.decisions.at(3) == MisProblem::kOut);

    Graph single;
    single.add_vertex(7);
    Coloring sc;
    sc.palette = 1;
    sc.set(7, 1);
    AlgoAResult lone = algorithm_a(single, sc, problem_by_name("mis"));
    CHECK(lone.decisions.at(7) == MisProblem::kIn);
    CHECK(lone.metrics.clock_rounds == 2);  // leaf then root of the padded tree
}

TEST_CASE("algorithm A performance bounds") {
    for (std::int64_t d : {1, 2, 3, 4, 9, 17}) {
        // A path colored cyclically with the palette declared as d.
        std::int64_t n = std::max<std::int64_t>(2 * d, 4);
        Graph g = generate_graph(Family::Path, n, 2, 0);
        Coloring c;
        c.palette = d;
        std::int64_t want = d >= 3 ? 3 : d;  // cycle through min(d,3) colors
        for (VertexId v : g.vertices()) c.set(v, (v - 1) % want + 1);
        if (!validate_coloring(g, c, true).proper) continue;
        AlgoAResult r = algorithm_a(g, c, problem_by_name("greedy"));
        std::int64_t D = padded_leaves(d);
        CHECK(awake_complexity(r.metrics) <= ceil_log2(D) + 1);
        CHECK(r.metrics.clock_rounds <= 2 * D - 1);
        CHECK(problem_by_name("greedy").validate(g, r.decisions));
    }
}

TEST_CASE("rejects an improper coloring") {
    Graph p3 = generate_graph(Family::Path, 3, 2, 0);
    Coloring bad;
    bad.palette = 2;
    for (VertexId v : p3.vertices()) bad.set(v, 1);
    CHECK_THROWS_AS(algorithm_a(p3, bad, problem_by_name("mis")), Error);
}

TEST_CASE("subgraph variant honors fixed outside decisions") {
    Graph g;
    g.add_vertex(1);
    SUBCASE("empty members") {
        AlgoAResult r = algorithm_a_on_subgraph(g, {}, Coloring{}, {}, problem_by_name("mis"));
        CHECK(r.decisions.empty());
        CHECK(r.metrics.clock_rounds == 0);
    }
    SUBCASE("all neighbors fixed IN forces OUT") {
        Graph p3 = generate_graph(Family::Path, 3, 2, 0);
        Coloring c;
        c.palette = 1;
        c.set(2, 1);
        std::map<VertexId, std::map<VertexId, Decision>> fixed{
            {2, {{1, MisProblem::kIn}, {3, MisProblem::kIn}}}};
        AlgoAResult r = algorithm_a_on_subgraph(p3, {2}, c, fixed, problem_by_name("mis"));
        CHECK(r.decisions.at(2) == MisProblem::kOut);
        CHECK(r.metrics.awake_of(2) == 2);
    }
    SUBCASE("greedy over fixed colors") {
        Graph p3 = generate_graph(Family::Path, 3, 2, 0);
        Coloring c;
        c.palette = 1;
        c.set(2, 1);
        std::map<VertexId, std::map<VertexId, Decision>> fixed{{2, {{1, 1}, {3, 2}}}};
        AlgoAResult r = algorithm_a_on_subgraph(p3, {2}, c, fixed, problem_by_name("greedy"));
        CHECK(r.decisions.at(2) == 3);
    }
}

TEST_CASE("oracle equivalence over all proper small colorings") {
    // Every connected graph on <= 5 vertices, every proper coloring with up
    // to 4 colors: the engine output must match the sequential color-order
    // oracle for both problems.
    for (int n = 1; n <= 5; ++n) {
        for (const SmallGraph& sg : enumerate_connected_graphs(n)) {
            Graph g = to_graph(sg);
            std::vector<VertexId> vs = g.vertices();
            std::vector<std::int64_t> colors(vs.size(), 1);
            while (true) {
                Coloring c;
                c.palette = 4;
                for (std::size_t i = 0; i < vs.size(); ++i) c.set(vs[i], colors[i]);
                bool proper = validate_coloring(g, c, true).proper;
                bool no_tie = true;
                for (const Edge& e : g.edges())
                    if (c.at(e.u) == c.at(e.v)) no_tie = false;
                if (proper && no_tie) {
                    std::map<VertexId, std::int64_t> labels;
                    for (VertexId v : vs) labels[v] = c.at(v);
                    for (const char* name : {"mis", "greedy"}) {
                        const OLocalProblem& problem = problem_by_name(name);
                        auto expected = sequential_solve(g, labels, problem);
                        auto got = algorithm_a(g, c, problem);
                        CHECK(got.decisions == expected);
                    }
                }
                std::size_t i = 0;
                for (; i < colors.size(); ++i) {
                    if (colors[i] < 4) { ++colors[i]; break; }
                    colors[i] = 1;
                }
                if (i == colors.size()) break;
            }
        }
    }
}

TEST_CASE("problem validators on generated corpora") {
    for (std::uint64_t seed : {1, 2}) {
        Graph g = generate_graph(Family::RandomBoundedDegree, 60, 6, seed);
        auto labels = id_labels(g);
        auto mis = sequential_solve(g, labels, problem_by_name("mis"));
        CHECK(problem_by_name("mis").validate(g, mis));
        auto greedy = sequential_solve(g, labels, problem_by_name("greedy"));
        CHECK(problem_by_name("greedy").validate(g, greedy));
        std::int64_t max_color = 0;
        for (const auto& [v, c] : greedy) max_color = std::max(max_color, c);
        CHECK(max_color <= g.max_degree() + 1);
    }
}

TEST_CASE("sequential solve rejects adjacent label ties") {
    Graph p2 = generate_graph(Family::Path, 2, 1, 0);
    std::map<VertexId, std::int64_t> labels{{1, 3}, {2, 3}};
    CHECK_THROWS_AS(sequential_solve(p2, labels, problem_by_name("mis")), Error);
}
