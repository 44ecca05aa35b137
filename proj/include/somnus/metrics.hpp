#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "somnus/graph.hpp"

namespace somnus {

// Counters for one phase. Awake worst-case complexity is the max over
// vertices of awake rounds; messages_sent = delivered + dropped.
struct Metrics {
    std::map<VertexId, std::int64_t> awake;
    std::int64_t clock_rounds = 0;
    std::int64_t messages_sent = 0;
    std::int64_t messages_delivered = 0;
    std::int64_t messages_dropped = 0;
    std::size_t max_message_bytes = 0;

    std::int64_t awake_of(VertexId v) const {
        auto it = awake.find(v);
        return it == awake.end() ? 0 : it->second;
    }

    // Back-to-back composition: clocks add, per-vertex awake adds.
    void merge_sequential(const Metrics& other);

    // Side-by-side composition over disjoint vertex sets sharing rounds:
    // clock is the max, awake adds per vertex.
    void merge_parallel(const Metrics& other);
};

std::int64_t awake_complexity(const Metrics& m);

// A run is an ordered list of named phases plus the aggregate.
struct RunMetrics {
    Metrics total;
    std::vector<std::pair<std::string, Metrics>> phases;

    void add_phase(const std::string& name, const Metrics& m);
    void add_parallel_phase(const std::string& name, const std::vector<Metrics>& parts);
    // Appends another run's phases (prefixed) and aggregates sequentially.
    void extend(const RunMetrics& other, const std::string& prefix = "");
    // As extend, but the other run shares this run's clock (parallel branch).
    void extend_parallel(const RunMetrics& other, const std::string& prefix = "");
};

// CSV with columns phase,vertex,awake_rounds plus one summary row per phase
// and a total summary.
void export_awake_csv(const RunMetrics& m, std::ostream& out);

}  // namespace somnus
