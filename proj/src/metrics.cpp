#include "somnus/metrics.hpp"

#include <algorithm>
#include <ostream>

namespace somnus {

void Metrics::merge_sequential(const Metrics& other) {
    for (const auto& [v, a] : other.awake) awake[v] += a;
    clock_rounds += other.clock_rounds;
    messages_sent += other.messages_sent;
    messages_delivered += other.messages_delivered;
    messages_dropped += other.messages_dropped;
    max_message_bytes = std::max(max_message_bytes, other.max_message_bytes);
}

void Metrics::merge_parallel(const Metrics& other) {
    for (const auto& [v, a] : other.awake) awake[v] += a;
    clock_rounds = std::max(clock_rounds, other.clock_rounds);
    messages_sent += other.messages_sent;
    messages_delivered += other.messages_delivered;
    messages_dropped += other.messages_dropped;
    max_message_bytes = std::max(max_message_bytes, other.max_message_bytes);
}

std::int64_t awake_complexity(const Metrics& m) {
    std::int64_t w = 0;
    for (const auto& [v, a] : m.awake) w = std::max(w, a);
    return w;
}

void RunMetrics::add_phase(const std::string& name, const Metrics& m) {
    phases.emplace_back(name, m);
    total.merge_sequential(m);
}

void RunMetrics::add_parallel_phase(const std::string& name, const std::vector<Metrics>& parts) {
    Metrics merged;
    for (const Metrics& p : parts) merged.merge_parallel(p);
    add_phase(name, merged);
}

void RunMetrics::extend(const RunMetrics& other, const std::string& prefix) {
    for (const auto& [name, m] : other.phases) phases.emplace_back(prefix + name, m);
    total.merge_sequential(other.total);
}

void RunMetrics::extend_parallel(const RunMetrics& other, const std::string& prefix) {
    for (const auto& [name, m] : other.phases) phases.emplace_back(prefix + name, m);
    total.merge_parallel(other.total);
}

void export_awake_csv(const RunMetrics& m, std::ostream& out) {
    out << "phase,vertex,awake_rounds\n";
    for (const auto& [name, phase] : m.phases) {
        for (const auto& [v, a] : phase.awake)
            out << name << "," << v << "," << a << "\n";
        out << name << ",max," << awake_complexity(phase) << "\n";
    }
    for (const auto& [v, a] : m.total.awake) out << "total," << v << "," << a << "\n";
    out << "total,max," << awake_complexity(m.total) << "\n";
}

}  // namespace somnus
