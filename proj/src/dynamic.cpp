#include "somnus/dynamic.hpp"

#include <algorithm>
#include <memory>
#include <ostream>
#include <random>

#include "somnus/algorithm_a.hpp"
#include "somnus/linial.hpp"
#include "somnus/numeric.hpp"

namespace somnus {

DynamicState prepare(const Graph& g, const OLocalProblem& problem, Strategy strategy,
                     std::int64_t t, double eps) {
    if (t < 1) throw Error("prepare: t must be >= 1");
    DynamicState state;
    state.graph = g;
    state.problem_name = problem.name();
    state.strategy = strategy;
    state.t = t;
    if (g.empty()) return state;

    PipelineResult colored = run_coloring_pipeline(g, strategy, eps);
    state.prepare_metrics.extend(colored.metrics, "prepare/");
    AlgoAResult solved = algorithm_a(g, colored.coloring, problem, "prepare/solve");
    state.prepare_metrics.add_phase("prepare/solve", solved.metrics);
    state.prep_coloring = colored.coloring;
    state.decisions = solved.decisions;
    if (!problem.validate(g, state.decisions))
        throw ValidatorFailure("prepare: solution invalid after the preparation stage");
    return state;
}

ExtractResult extract_changed_set(const Graph& g, const ChangeBatch& batch) {
    ExtractResult result;
    result.graph = g;
    std::set<VertexId> touched;
    for (const ChangeEvent& e : batch.events) {
        switch (e.kind) {
            case ChangeEvent::Kind::AddVertex:
                apply_event(result.graph, e);
                touched.insert(e.u);
                break;
            case ChangeEvent::Kind::RemoveVertex: {
                if (!result.graph.has_vertex(e.u))
                    throw Error("batch: remove of absent vertex " + std::to_string(e.u));
                // Every former neighbor loses an adjacent edge.
                for (VertexId u : result.graph.neighbors(e.u)) touched.insert(u);
                touched.erase(e.u);
                apply_event(result.graph, e);
                break;
            }
            case ChangeEvent::Kind::AddEdge:
            case ChangeEvent::Kind::RemoveEdge:
                apply_event(result.graph, e);
                touched.insert(e.u);
                touched.insert(e.v);
                break;
        }
    }
    for (VertexId v : touched)
        if (result.graph.has_vertex(v)) result.changed.insert(v);
    return result;
}

namespace {

// Collection-round program: everyone in S∪N(S) is awake for one round and
// broadcasts its color and (if it has one) its current decision; members of S
// keep what their outside neighbors said.
class CollectProgram final : public NodeProgram {
public:
    CollectProgram(std::int64_t color, bool has_decision, Decision decision, bool in_s)
        : color_(color), has_decision_(has_decision), decision_(decision), in_s_(in_s) {}

    StartInfo on_start(const NodeContext&) override {
        StartInfo s;
        s.schedule.rounds.insert(1);
        return s;
    }

    void on_wake_send(std::int64_t, std::vector<OutMessage>& out) override {
        std::string payload = std::to_string(color_) + " " +
                              (has_decision_ ? std::to_string(decision_) : std::string("-"));
        out.push_back({std::nullopt, payload});
    }

    WakeResult on_wake_receive(std::int64_t, std::span<const InMessage> inbox) override {
        if (in_s_) {
            for (const InMessage& msg : inbox) {
                auto space = msg.payload.find(' ');
                std::string d = msg.payload.substr(space + 1);
                if (d != "-") heard_[msg.from] = std::stoll(d);
            }
        }
        WakeResult r;
        r.done = true;
        return r;
    }

    const std::map<VertexId, Decision>& heard() const { return heard_; }

private:
    std::int64_t color_;
    bool has_decision_;
    Decision decision_;
    bool in_s_;
    std::map<VertexId, Decision> heard_;
};

}  // namespace

UpdateResult dynamic_update(DynamicState& state, const ChangeBatch& batch,
                            const OLocalProblem& problem) {
    UpdateResult result;
    ExtractResult extracted = extract_changed_set(state.graph, batch);
    state.graph = extracted.graph;
    result.changed = extracted.changed;
    const std::set<VertexId>& s = extracted.changed;

    // Decisions and colors of removed vertices go away.
    for (auto it = state.decisions.begin(); it != state.decisions.end();)
        it = state.graph.has_vertex(it->first) ? std::next(it) : state.decisions.erase(it);
    for (auto it = state.prep_coloring.color.begin(); it != state.prep_coloring.color.end();)
        it = state.graph.has_vertex(it->first) ? std::next(it) : state.prep_coloring.color.erase(it);

    if (s.empty()) return result;  // nothing to recompute

    for (VertexId v : s) state.prep_coloring.set(v, 0);  // no color

    Graph s_graph = state.graph.induced(s);
    result.s_internal_degree = s_graph.max_degree();

    // (1) Color S from ids.
    LinialResult linial = linial_coloring(s_graph, "update/linial-s");
    result.metrics.extend(linial.metrics);

    // (2) One all-awake round on S∪N(S): the only round anyone outside S wakes.
    std::set<VertexId> halo = s;
    for (VertexId v : s)
        for (VertexId u : state.graph.neighbors(v)) halo.insert(u);
    Graph halo_graph = state.graph.induced(halo);
    std::map<VertexId, std::unique_ptr<CollectProgram>> collectors;
    std::map<VertexId, NodeProgram*> handles;
    for (VertexId v : halo) {
        bool in_s = s.count(v) != 0;
        bool has_decision = state.decisions.count(v) != 0;
        Decision d = has_decision ? state.decisions.at(v) : 0;
        auto prog = std::make_unique<CollectProgram>(state.prep_coloring.at(v), has_decision, d,
                                                     in_s);
        handles[v] = prog.get();
        collectors[v] = std::move(prog);
    }
    PhaseConfig collect_config;
    collect_config.name = "update/collect";
    result.metrics.add_phase("update/collect", run_phase(halo_graph, handles, collect_config));

    std::map<VertexId, std::map<VertexId, Decision>> fixed;
    for (VertexId v : s) {
        auto& fixed_v = fixed[v];
        for (const auto& [u, d] : collectors.at(v)->heard())
            if (!s.count(u)) fixed_v[u] = d;
    }

    // (3) Reduce S's colors to k'+1 with one greedy pass.
    static const GreedyColoringProblem greedy;
    AlgoAResult reduced = algorithm_a(s_graph, linial.coloring, greedy, "update/reduce-s");
    result.metrics.add_phase("update/reduce-s", reduced.metrics);
    Coloring s_colors;
    s_colors.palette = result.s_internal_degree + 1;
    for (const auto& [v, c] : reduced.decisions) {
        if (c > s_colors.palette)
            throw Error("dynamic_update: greedy pass exceeded k'+1 colors");
        s_colors.set(v, c);
    }
    for (VertexId v : s) state.prep_coloring.set(v, s_colors.at(v));

    // (4) Re-solve the problem on S; everyone outside is a fixed parent.
    AlgoAResult solved =
        algorithm_a_on_subgraph(state.graph, s, s_colors, fixed, problem, "update/solve-s");
    result.metrics.add_phase("update/solve-s", solved.metrics);
    for (const auto& [v, d] : solved.decisions) state.decisions[v] = d;

    if (!problem.validate(state.graph, state.decisions))
        throw ValidatorFailure("dynamic_update: validator failed after the update");
    return result;
}

DynamicReport run_dynamic_experiment(const Graph& g0, const OLocalProblem& problem,
                                     Strategy strategy, std::int64_t t,
                                     const std::vector<ChangeBatch>& batches) {
    DynamicReport report;
    DynamicState state = prepare(g0, problem, strategy, t);
    DynamicReportRow prep_row;
    prep_row.batch = 0;
    prep_row.s_size = static_cast<std::int64_t>(g0.vertex_count());
    prep_row.max_awake = awake_complexity(state.prepare_metrics.total);
    prep_row.clock_rounds = state.prepare_metrics.total.clock_rounds;
    report.rows.push_back(prep_row);

    std::int64_t index = 0;
    for (const ChangeBatch& batch : batches) {
        ++index;
        DynamicReportRow row;
        row.batch = index;
        try {
            UpdateResult update = dynamic_update(state, batch, problem);
            row.s_size = static_cast<std::int64_t>(update.changed.size());
            row.max_awake = awake_complexity(update.metrics.total);
            row.clock_rounds = update.metrics.total.clock_rounds;
            row.valid = true;
        } catch (const ValidatorFailure&) {
            row.valid = false;
        }
        row.alpha = std::min(state.graph.max_degree(), t);
        row.beta = std::min(static_cast<std::int64_t>(state.graph.vertex_count()), t);
        report.rows.push_back(row);
    }
    return report;
}

ChangeBatch random_batch(const Graph& g, std::int64_t t, std::int64_t dmax, std::uint64_t seed) {
    std::mt19937_64 rng(mix64(seed));
    ChangeBatch batch;
    batch.t = t;
    Graph work = g;
    for (std::int64_t i = 0; i < t; ++i) {
        std::uint64_t roll = rng() % 100;
        bool added = false;
        if (roll < 45) {  // add edge
            for (int attempt = 0; attempt < 64 && !added; ++attempt) {
                auto vs = work.vertices();
                if (vs.size() < 2) break;
                VertexId u = vs[rng() % vs.size()];
                VertexId v = vs[rng() % vs.size()];
                if (u == v || work.has_edge(u, v)) continue;
                if (work.degree(u) >= dmax || work.degree(v) >= dmax) continue;
                batch.events.push_back(ChangeEvent::add_edge(u, v));
                work.add_edge(u, v);
                added = true;
            }
        } else if (roll < 80) {  // remove edge
            auto es = work.edges();
            if (!es.empty()) {
                const Edge& e = es[rng() % es.size()];
                batch.events.push_back(ChangeEvent::remove_edge(e.u, e.v));
                work.remove_edge(e.u, e.v);
                added = true;
            }
        } else if (roll < 92) {  // add vertex
            VertexId id = work.max_vertex_id() + 1;
            batch.events.push_back(ChangeEvent::add_vertex(id));
            work.add_vertex(id);
            added = true;
        } else if (work.vertex_count() > 8) {  // remove vertex
            auto vs = work.vertices();
            VertexId v = vs[rng() % vs.size()];
            batch.events.push_back(ChangeEvent::remove_vertex(v));
            work.remove_vertex(v);
            added = true;
        }
        if (!added && work.vertex_count() >= 1) {
            VertexId id = work.max_vertex_id() + 1;
            batch.events.push_back(ChangeEvent::add_vertex(id));
            work.add_vertex(id);
        }
    }
    return batch;
}

void write_dynamic_csv(const DynamicReport& report, std::ostream& out) {
    out << "batch,|S|,alpha,beta,max_awake,clock_rounds,valid\n";
    for (const DynamicReportRow& row : report.rows)
        out << row.batch << "," << row.s_size << "," << row.alpha << "," << row.beta << ","
            << row.max_awake << "," << row.clock_rounds << "," << (row.valid ? 1 : 0) << "\n";
}

}  // namespace somnus
