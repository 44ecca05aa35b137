#include "somnus/engine.hpp"

#include <algorithm>
#include <cstdlib>

namespace somnus {

std::int64_t default_max_rounds() {
    if (const char* env = std::getenv("SOMNUS_MAX_ROUNDS")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return v;
    }
    return 1'000'000;
}

namespace {

struct NodeState {
    NodeProgram* program = nullptr;
    std::set<std::int64_t> schedule;
    bool done = false;
};

}  // namespace

Metrics run_phase(const Graph& g, const std::map<VertexId, NodeProgram*>& programs,
                  const PhaseConfig& config, PhaseTrace* trace) {
    if (config.max_rounds < 1) throw Error(config.name + ": max_rounds must be >= 1");
    for (VertexId v : g.vertices())
        if (!programs.count(v))
            throw Error(config.name + ": vertex " + std::to_string(v) + " has no program");
    if (programs.size() != g.vertex_count())
        throw Error(config.name + ": programs for unknown vertices");

    Metrics metrics;
    std::map<VertexId, NodeState> nodes;
    std::int64_t pending = 0;  // programs not yet done
    for (const auto& [v, prog] : programs) {
        NodeContext ctx{v, &g};
        StartInfo start = prog->on_start(ctx);
        NodeState state;
        state.program = prog;
        state.done = start.done;
        for (std::int64_t r : start.schedule.rounds) {
            if (r < 1) throw Error(config.name + ": schedule round " + std::to_string(r) +
                                   " is not positive");
            state.schedule.insert(r);
        }
        metrics.awake[v] = 0;
        if (!state.done) ++pending;
        nodes.emplace(v, std::move(state));
    }

    for (std::int64_t round = 1; pending > 0; ++round) {
        if (round > config.max_rounds)
            throw Error(config.name + ": max rounds (" + std::to_string(config.max_rounds) +
                        ") exceeded before all programs were done");

        std::vector<VertexId> awake;
        for (auto& [v, state] : nodes)
            if (!state.done && state.schedule.count(round)) awake.push_back(v);

        if (awake.empty()) {
            // Nobody acts this round; jump to the next scheduled wake. Rounds
            // skipped this way can never be the final clock round.
            std::int64_t next = config.max_rounds + 1;
            for (const auto& [v, state] : nodes) {
                if (state.done) continue;
                auto it = state.schedule.upper_bound(round);
                if (it != state.schedule.end()) next = std::min(next, *it);
            }
            if (next > config.max_rounds)
                throw Error(config.name + ": max rounds (" + std::to_string(config.max_rounds) +
                            ") exceeded before all programs were done (no further wakes "
                            "scheduled)");
            round = next - 1;
            continue;
        }
        if (trace) trace->awake_sets[round] = awake;

        std::set<VertexId> awake_set(awake.begin(), awake.end());

        // Transmit step: collect the round's traffic from every awake node.
        std::map<VertexId, std::vector<InMessage>> inboxes;
        for (VertexId v : awake) {
            std::vector<OutMessage> out;
            nodes[v].program->on_wake_send(round, out);
            for (const OutMessage& msg : out) {
                metrics.max_message_bytes = std::max(metrics.max_message_bytes, msg.payload.size());
                if (msg.to) {
                    VertexId target = *msg.to;
                    if (!g.neighbors(v).count(target))
                        throw Error(config.name + ": " + std::to_string(v) +
                                    " sent to non-neighbor " + std::to_string(target));
                    ++metrics.messages_sent;
                    if (awake_set.count(target)) {
                        ++metrics.messages_delivered;
                        inboxes[target].push_back({v, msg.payload});
                    } else {
                        ++metrics.messages_dropped;
                        if (config.strict_delivery)
                            throw Error(config.name + ": strict delivery violated: " +
                                        std::to_string(v) + " -> sleeping " +
                                        std::to_string(target) + " at round " +
                                        std::to_string(round));
                    }
                } else {
                    for (VertexId target : g.neighbors(v)) {
                        ++metrics.messages_sent;
                        if (awake_set.count(target)) {
                            ++metrics.messages_delivered;
                            inboxes[target].push_back({v, msg.payload});
                        } else {
                            ++metrics.messages_dropped;
                        }
                    }
                }
            }
        }

        // Receive-and-compute step.
        for (VertexId v : awake) {
            NodeState& state = nodes[v];
            ++metrics.awake[v];
            auto& inbox = inboxes[v];
            std::stable_sort(inbox.begin(), inbox.end(),
                             [](const InMessage& a, const InMessage& b) { return a.from < b.from; });
            WakeResult result = state.program->on_wake_receive(round, inbox);
            for (std::int64_t r : result.add_rounds) {
                if (r <= round)
                    throw Error(config.name + ": schedule addition " + std::to_string(r) +
                                " not after round " + std::to_string(round));
                state.schedule.insert(r);
            }
            if (result.done && !state.done) {
                state.done = true;
                --pending;
            }
        }

        metrics.clock_rounds = round;
    }
    return metrics;
}

std::pair<PhaseOutputs, RunMetrics> run_pipeline(const Graph& g,
                                                 const std::vector<PipelinePhase>& phases) {
    PhaseOutputs outputs;
    RunMetrics metrics;
    for (const PipelinePhase& phase : phases) {
        auto [next, m] = phase.run(g, outputs);
        metrics.add_phase(phase.name, m);
        outputs = std::move(next);
    }
    return {outputs, metrics};
}

}  // namespace somnus
