#include "somnus/algorithm_a.hpp"

#include <algorithm>
#include <charconv>
#include <memory>
#include <vector>

namespace somnus {

namespace {

std::string encode_decision(Decision d) { return std::to_string(d); }

Decision decode_decision(const std::string& payload) {
    Decision d = 0;
    auto [ptr, ec] = std::from_chars(payload.data(), payload.data() + payload.size(), d);
    if (ec != std::errc()) throw Error("algorithm-a: bad decision payload");
    return d;
}

class AlgoAProgram final : public NodeProgram {
public:
    AlgoAProgram(VertexId id, std::int64_t color, std::int64_t palette,
                 std::map<VertexId, std::int64_t> scope_colors,
                 std::map<VertexId, Decision> fixed, const OLocalProblem* problem)
        : id_(id),
          color_(color),
          schedule_(build_interval_schedule(color, palette)),
          scope_colors_(std::move(scope_colors)),
          parent_decisions_(std::move(fixed)),
          problem_(problem) {
        for (const auto& [u, c] : scope_colors_) {
            if (c == color_)
                throw Error("algorithm-a: adjacent color tie at vertex " + std::to_string(id_));
            if (c < color_) {
                parents_.insert(u);
            } else {
                IntervalSchedule s = build_interval_schedule(c, palette);
                child_rounds_[u] = std::set<std::int64_t>(s.rounds.begin(), s.rounds.end());
            }
        }
    }

    StartInfo on_start(const NodeContext& ctx) override {
        degree_ = ctx.degree();
        StartInfo start;
        start.schedule.rounds.insert(schedule_.rounds.begin(), schedule_.rounds.end());
        return start;
    }

    void on_wake_send(std::int64_t round, std::vector<OutMessage>& out) override {
        if (!decided_ || round <= schedule_.decision_round) return;
        for (const auto& [child, rounds] : child_rounds_)
            if (rounds.count(round)) out.push_back({child, encode_decision(decision_)});
    }

    WakeResult on_wake_receive(std::int64_t round, std::span<const InMessage> inbox) override {
        for (const InMessage& msg : inbox)
            if (parents_.count(msg.from)) parent_decisions_[msg.from] = decode_decision(msg.payload);
        if (round == schedule_.decision_round) {
            for (VertexId p : parents_)
                if (!parent_decisions_.count(p))
                    throw Error("algorithm-a: vertex " + std::to_string(id_) +
                                " missing parent decision of " + std::to_string(p) +
                                " at its decision round");
            decision_ = problem_->decide({id_, degree_}, parent_decisions_);
            decided_ = true;
        }
        WakeResult result;
        result.done = (round == schedule_.rounds.back());
        return result;
    }

    Decision decision() const {
        if (!decided_) throw Error("algorithm-a: vertex never decided");
        return decision_;
    }

private:
    VertexId id_;
    std::int64_t color_;
    std::int64_t degree_ = 0;
    IntervalSchedule schedule_;
    std::map<VertexId, std::int64_t> scope_colors_;
    std::set<VertexId> parents_;
    std::map<VertexId, std::set<std::int64_t>> child_rounds_;
    std::map<VertexId, Decision> parent_decisions_;
    const OLocalProblem* problem_;
    Decision decision_ = 0;
    bool decided_ = false;
};

}  // namespace

AlgoAResult algorithm_a_scoped(
    const Graph& scope_graph, const std::map<VertexId, std::int64_t>& colors, std::int64_t palette,
    const std::map<VertexId, std::map<VertexId, std::int64_t>>& scope_neighbor_colors,
    const std::map<VertexId, std::map<VertexId, Decision>>& fixed_parents,
    const OLocalProblem& problem, const std::string& phase_name) {
    if (palette < 1) throw Error("algorithm-a: palette must be >= 1");
    std::map<VertexId, std::unique_ptr<AlgoAProgram>> programs;
    std::map<VertexId, NodeProgram*> handles;
    for (VertexId v : scope_graph.vertices()) {
        auto cit = colors.find(v);
        if (cit == colors.end() || cit->second < 1 || cit->second > palette)
            throw Error("algorithm-a: vertex " + std::to_string(v) +
                        " has no color in [1..palette]");
        std::map<VertexId, std::int64_t> scope;
        if (auto sit = scope_neighbor_colors.find(v); sit != scope_neighbor_colors.end())
            scope = sit->second;
        std::map<VertexId, Decision> fixed;
        if (auto fit = fixed_parents.find(v); fit != fixed_parents.end()) fixed = fit->second;
        auto prog = std::make_unique<AlgoAProgram>(v, cit->second, palette, std::move(scope),
                                                   std::move(fixed), &problem);
        handles[v] = prog.get();
        programs[v] = std::move(prog);
    }
    PhaseConfig config;
    config.name = phase_name;
    AlgoAResult result;
    result.metrics = run_phase(scope_graph, handles, config);
    for (const auto& [v, prog] : programs) result.decisions[v] = prog->decision();
    return result;
}

namespace {

std::map<VertexId, std::map<VertexId, std::int64_t>> full_scopes(const Graph& g,
                                                                 const Coloring& c) {
    std::map<VertexId, std::map<VertexId, std::int64_t>> scopes;
    for (VertexId v : g.vertices()) {
        auto& scope = scopes[v];
        for (VertexId u : g.neighbors(v)) scope[u] = c.at(u);
    }
    return scopes;
}

}  // namespace

AlgoAResult algorithm_a(const Graph& g, const Coloring& c, const OLocalProblem& problem,
                        const std::string& phase_name) {
    ColoringReport report = validate_coloring(g, c, /*require_complete=*/true);
    if (!report.proper) throw Error("algorithm-a: input coloring not proper/complete");
    std::map<VertexId, std::int64_t> colors;
    for (VertexId v : g.vertices()) colors[v] = c.at(v);
    return algorithm_a_scoped(g, colors, c.palette, full_scopes(g, c), {}, problem, phase_name);
}

AlgoAResult algorithm_a_on_subgraph(
    const Graph& g, const std::set<VertexId>& members, const Coloring& c,
    const std::map<VertexId, std::map<VertexId, Decision>>& fixed_parents,
    const OLocalProblem& problem, const std::string& phase_name) {
    Graph sub = g.induced(members);
    ColoringReport report = validate_coloring(sub, c, /*require_complete=*/true);
    if (!report.proper)
        throw Error("algorithm-a: member coloring not proper/complete on the induced subgraph");
    std::map<VertexId, std::int64_t> colors;
    for (VertexId v : sub.vertices()) colors[v] = c.at(v);
    return algorithm_a_scoped(sub, colors, c.palette, full_scopes(sub, c), fixed_parents, problem,
                              phase_name);
}

}  // namespace somnus
