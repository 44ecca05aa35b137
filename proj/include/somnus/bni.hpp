#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "somnus/engine.hpp"
#include "somnus/graph.hpp"
#include "somnus/metrics.hpp"
#include "somnus/olocal.hpp"
#include "somnus/orientation.hpp"

namespace somnus {

// One recorded reception of a relayed decision value.
struct BniReception {
    VertexId origin = 0;
    VertexId from = 0;
    std::int64_t round = 0;
};

struct BniRun {
    PartialOrientation orientation;
    std::map<VertexId, Decision> decisions;
    std::map<VertexId, std::int64_t> decided_round;
    std::map<VertexId, std::vector<BniReception>> receptions;
    RunMetrics metrics;
};

// One all-awake round in which every vertex ships its label and adjacency
// list; each vertex then greedily picks its ruling-set parents M(v) among its
// smaller-labeled neighbors in decreasing label order (ties between
// non-adjacent candidates broken toward the smaller id), keeping only
// candidates independent of those already chosen.
std::pair<PartialOrientation, Metrics> build_partial_orientation(
    const Graph& g, const std::map<VertexId, std::int64_t>& labels);

// Solves the problem with the partial orientation: v wakes at its parents'
// label rounds and its own; it rebroadcasts every (origin, label, value)
// triple it holds at each wake round, and at round label(v) it must hold the
// decision of every smaller-labeled neighbor. Awake per vertex is at most
// |M(v)|+2 <= K+2 counting the collection round.
BniRun bni_solve(const Graph& g, const std::map<VertexId, std::int64_t>& labels,
                 const OLocalProblem& problem);

// Audits the §-lemma relay property on a finished run: for every vertex v and
// every smaller-labeled neighbor u there is a recorded chain from u up to v
// with strictly decreasing labels toward u, each hop at the sender's label
// round.
bool relay_chains_ok(const Graph& g, const std::map<VertexId, std::int64_t>& labels,
                     const BniRun& run, std::string* why = nullptr);

// Decision-log export for auditing.
std::string bni_log_json(const BniRun& run);

}  // namespace somnus
