#include "somnus/olocal.hpp"

#include <algorithm>
#include <set>

namespace somnus {

Decision GreedyColoringProblem::decide(const VertexContext&,
                                       const std::map<VertexId, Decision>& parents) const {
    std::set<Decision> used;
    for (const auto& [u, d] : parents) used.insert(d);
    Decision c = 1;
    while (used.count(c)) ++c;
    return c;
}

bool GreedyColoringProblem::validate(const Graph& g,
                                     const std::map<VertexId, Decision>& all) const {
    for (VertexId v : g.vertices()) {
        auto it = all.find(v);
        if (it == all.end() || it->second < 1) return false;
    }
    for (const Edge& e : g.edges())
        if (all.at(e.u) == all.at(e.v)) return false;
    return true;
}

Decision MisProblem::decide(const VertexContext&,
                            const std::map<VertexId, Decision>& parents) const {
    for (const auto& [u, d] : parents)
        if (d == kIn) return kOut;
    return kIn;
}

bool MisProblem::validate(const Graph& g, const std::map<VertexId, Decision>& all) const {
    for (VertexId v : g.vertices()) {
        auto it = all.find(v);
        if (it == all.end()) return false;
        if (it->second != kIn && it->second != kOut) return false;
    }
    for (const Edge& e : g.edges())
        if (all.at(e.u) == kIn && all.at(e.v) == kIn) return false;  // independence
    for (VertexId v : g.vertices()) {
        if (all.at(v) == kIn) continue;
        bool dominated = false;
        for (VertexId u : g.neighbors(v))
            if (all.at(u) == kIn) { dominated = true; break; }
        if (!dominated) return false;  // maximality
    }
    return true;
}

const OLocalProblem& problem_by_name(const std::string& name) {
    static const GreedyColoringProblem greedy;
    static const MisProblem mis;
    if (name == "greedy") return greedy;
    if (name == "mis") return mis;
    throw Error("unknown problem: " + name + " (expected greedy|mis)");
}

std::int64_t padded_leaves(std::int64_t d) {
    if (d < 1) throw Error("padded_leaves: d must be >= 1");
    std::int64_t target = std::max<std::int64_t>(d, 2);
    std::int64_t p = 2;
    while (p < target) p *= 2;
    return p;
}

IntervalSchedule build_interval_schedule(std::int64_t label, std::int64_t d) {
    if (label < 1 || label > d)
        throw Error("build_interval_schedule: label " + std::to_string(label) +
                    " out of range [1.." + std::to_string(d) + "]");
    IntervalSchedule s;
    s.padded_leaves = padded_leaves(d);
    s.decision_round = 2 * label - 1;
    // Aligned ranges [lo,hi] of size 2^j containing the leaf; the in-order
    // index of the node over [lo,hi] is lo+hi-1.
    for (std::int64_t size = 1; size <= s.padded_leaves; size *= 2) {
        std::int64_t lo = ((label - 1) / size) * size + 1;
        std::int64_t hi = lo + size - 1;
        s.rounds.push_back(lo + hi - 1);
    }
    std::sort(s.rounds.begin(), s.rounds.end());
    return s;
}

std::int64_t interval_lca_round(std::int64_t a, std::int64_t b, std::int64_t d) {
    std::int64_t D = padded_leaves(d);
    for (std::int64_t size = 1; size <= D; size *= 2) {
        std::int64_t lo_a = ((a - 1) / size) * size + 1;
        std::int64_t lo_b = ((b - 1) / size) * size + 1;
        if (lo_a == lo_b) return lo_a + (lo_a + size - 1) - 1;
    }
    throw Error("interval_lca_round: labels outside the tree");
}

std::map<VertexId, Decision> sequential_solve(
    const Graph& g, const std::map<VertexId, std::int64_t>& labels, const OLocalProblem& problem,
    const std::map<VertexId, std::map<VertexId, Decision>>& fixed_parents) {
    std::vector<VertexId> order = g.vertices();
    for (VertexId v : order)
        if (!labels.count(v)) throw Error("sequential_solve: missing label for vertex");
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        auto la = labels.at(a), lb = labels.at(b);
        return la != lb ? la < lb : a < b;
    });
    std::map<VertexId, Decision> decisions;
    for (VertexId v : order) {
        std::map<VertexId, Decision> parents;
        if (auto it = fixed_parents.find(v); it != fixed_parents.end()) parents = it->second;
        for (VertexId u : g.neighbors(v)) {
            if (labels.at(u) == labels.at(v))
                throw Error("sequential_solve: adjacent label tie");
            if (labels.at(u) < labels.at(v)) parents[u] = decisions.at(u);
        }
        decisions[v] = problem.decide({v, g.degree(v)}, parents);
    }
    return decisions;
}

}  // namespace somnus
