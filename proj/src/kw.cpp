#include "somnus/kw.hpp"

#include <algorithm>
#include <cmath>

#include "somnus/algorithm_a.hpp"
#include "somnus/olocal.hpp"

namespace somnus {

BlockedColoring BlockedColoring::wrap(const Coloring& c, std::int64_t width) {
    if (width < 1) throw Error("BlockedColoring: width must be >= 1");
    BlockedColoring b;
    b.coloring = c;
    b.width = width;
    b.blocks = (c.palette + width - 1) / width;
    if (b.blocks < 1) b.blocks = 1;
    b.coloring.palette = b.blocks * width;
    return b;
}

std::int64_t expected_grouped_phases(std::int64_t r, std::int64_t group) {
    if (r < 1 || group < 2) throw Error("expected_grouped_phases: bad arguments");
    std::int64_t phases = 0;
    while (r > 1) {
        r = (r + group - 1) / group;
        ++phases;
    }
    return phases;
}

std::int64_t batched_group_size(std::int64_t max_deg, double eps) {
    if (!(eps > 0.0) || eps > 1.0) throw Error("batched_kw_reduce: eps must be in (0,1]");
    double raw = std::pow(static_cast<double>(std::max<std::int64_t>(max_deg, 1)), eps);
    auto g = static_cast<std::int64_t>(std::ceil(raw - 1e-9));
    return std::max<std::int64_t>(2, g);
}

KwResult kw_reduce_grouped(const Graph& g, const BlockedColoring& blocked,
                           std::int64_t group_size, const std::string& phase_prefix) {
    if (group_size < 2) throw Error("kw_reduce_grouped: group size must be >= 2");
    std::int64_t width = blocked.width;
    if (width < g.max_degree() + 1)
        throw Error("kw_reduce_grouped: block width below Delta+1");
    ColoringReport report = validate_coloring(g, blocked.coloring, /*require_complete=*/true);
    if (!report.proper) throw Error("kw_reduce_grouped: input coloring not proper");

    static const GreedyColoringProblem greedy;
    KwResult result;
    Coloring current = blocked.coloring;
    std::int64_t r = blocked.blocks;
    std::int64_t phase_index = 0;

    while (r > 1) {
        ++phase_index;
        std::int64_t groups = (r + group_size - 1) / group_size;
        std::map<VertexId, std::int64_t> group_of;     // vertex -> group index
        std::map<VertexId, std::int64_t> relabeled;    // color within the group palette
        std::set<VertexId> participants;
        for (VertexId v : g.vertices()) {
            std::int64_t block = (current.at(v) - 1) / width + 1;
            std::int64_t offset = (current.at(v) - 1) % width + 1;
            std::int64_t gi = (block - 1) / group_size + 1;
            std::int64_t lo = (gi - 1) * group_size + 1;
            std::int64_t hi = std::min(gi * group_size, r);
            group_of[v] = gi;
            relabeled[v] = (block - lo) * width + offset;
            if (hi > lo) participants.insert(v);  // single-block groups pass through
        }

        Coloring next;
        next.palette = ((groups - 1) * width) + width;
        for (VertexId v : g.vertices()) {
            if (participants.count(v)) continue;
            std::int64_t offset = (current.at(v) - 1) % width + 1;
            next.set(v, (group_of[v] - 1) * width + offset);
        }

        if (!participants.empty()) {
            Graph sub = g.induced(participants);
            std::map<VertexId, std::map<VertexId, std::int64_t>> scopes;
            for (VertexId v : sub.vertices()) {
                auto& scope = scopes[v];
                for (VertexId u : sub.neighbors(v))
                    if (group_of[u] == group_of[v]) scope[u] = relabeled[u];
            }
            std::map<VertexId, std::int64_t> colors;
            for (VertexId v : sub.vertices()) colors[v] = relabeled[v];
            AlgoAResult merged =
                algorithm_a_scoped(sub, colors, group_size * width, scopes, {}, greedy,
                                   phase_prefix + "/phase" + std::to_string(phase_index));
            for (const auto& [v, offset] : merged.decisions) {
                if (offset < 1 || offset > width)
                    throw Error("kw_reduce_grouped: merged offset out of range");
                next.set(v, (group_of[v] - 1) * width + offset);
            }
            result.metrics.add_phase(phase_prefix + "/phase" + std::to_string(phase_index),
                                     merged.metrics);
        }

        current = next;
        r = groups;
        ++result.phases;
        result.phase_colorings.push_back(current);
    }

    current.palette = width;
    result.coloring = current;
    return result;
}

KwResult sleeping_kw_reduce(const Graph& g, const BlockedColoring& blocked) {
    return kw_reduce_grouped(g, blocked, 2, "kw");
}

KwResult sleeping_kw_iterative(const Graph& g, const Coloring& c) {
    std::int64_t width = g.max_degree() + 1;
    if (c.palette <= width) {
        ColoringReport report = validate_coloring(g, c, /*require_complete=*/true);
        if (!report.proper) throw Error("sleeping_kw_iterative: input coloring not proper");
        KwResult identity;
        identity.coloring = c;
        return identity;  // zero phases
    }
    return kw_reduce_grouped(g, BlockedColoring::wrap(c, width), 2, "kw");
}

KwResult batched_kw_reduce(const Graph& g, const BlockedColoring& blocked, double eps) {
    return kw_reduce_grouped(g, blocked, batched_group_size(g.max_degree(), eps), "batched");
}

}  // namespace somnus
