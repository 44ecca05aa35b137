#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "somnus/graph.hpp"
#include "somnus/metrics.hpp"

namespace somnus {

// Sleeping-model round engine. A node is awake exactly in its scheduled
// rounds; in every round all awake nodes first transmit, then every awake
// node receives the round's messages addressed to it and computes. A message
// whose receiver is asleep this round is dropped and counted. In strict
// delivery mode a dropped *targeted* message is an error; broadcasts reach
// whoever is awake and drop silently otherwise, since sleeping through a
// neighbor's broadcast is exactly what the model's schedules exploit.

struct WakeSchedule {
    std::set<std::int64_t> rounds;  // strictly positive, finite
};

struct NodeContext {
    VertexId id = 0;
    const Graph* graph = nullptr;

    std::int64_t degree() const { return graph->degree(id); }
    const std::set<VertexId>& neighbors() const { return graph->neighbors(id); }
};

struct OutMessage {
    std::optional<VertexId> to;  // nullopt = broadcast to all neighbors
    std::string payload;
};

struct InMessage {
    VertexId from = 0;
    std::string payload;
};

struct StartInfo {
    WakeSchedule schedule;
    bool done = false;  // a program done at start never wakes
};

struct WakeResult {
    std::vector<std::int64_t> add_rounds;  // future rounds to add to the schedule
    bool done = false;
};

// One wake is a transmit step followed by a receive-and-compute step; what a
// node sends in a round cannot depend on what it receives that same round.
class NodeProgram {
public:
    virtual ~NodeProgram() = default;
    virtual StartInfo on_start(const NodeContext& ctx) = 0;
    virtual void on_wake_send(std::int64_t round, std::vector<OutMessage>& out) = 0;
    virtual WakeResult on_wake_receive(std::int64_t round, std::span<const InMessage> inbox) = 0;
};

std::int64_t default_max_rounds();  // SOMNUS_MAX_ROUNDS env override

struct PhaseConfig {
    std::string name = "phase";
    std::int64_t max_rounds = default_max_rounds();
    bool strict_delivery = true;
    bool record_trace = false;
};

struct PhaseTrace {
    std::map<std::int64_t, std::vector<VertexId>> awake_sets;
};

// Runs rounds 1,2,... until every program is done. Throws on max_rounds
// exceeded, sends to non-neighbors, schedule additions not in the future,
// and strict-delivery violations.
Metrics run_phase(const Graph& g, const std::map<VertexId, NodeProgram*>& programs,
                  const PhaseConfig& config, PhaseTrace* trace = nullptr);

// Generic pipeline: each phase consumes the previous phase's per-vertex
// outputs; metrics accumulate back to back.
using PhaseOutputs = std::map<VertexId, std::int64_t>;
struct PipelinePhase {
    std::string name;
    std::function<std::pair<PhaseOutputs, Metrics>(const Graph&, const PhaseOutputs&)> run;
};
std::pair<PhaseOutputs, RunMetrics> run_pipeline(const Graph& g,
                                                 const std::vector<PipelinePhase>& phases);

}  // namespace somnus
