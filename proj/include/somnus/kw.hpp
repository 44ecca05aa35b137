#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "somnus/coloring.hpp"
#include "somnus/graph.hpp"
#include "somnus/metrics.hpp"

namespace somnus {

// Coloring whose palette is partitioned into consecutive blocks of a fixed
// width: color = (block-1)*width + offset, offset in [1..width].
struct BlockedColoring {
    Coloring coloring;
    std::int64_t width = 1;
    std::int64_t blocks = 1;

    static BlockedColoring wrap(const Coloring& c, std::int64_t width);

    std::int64_t block_of(std::int64_t color) const { return (color - 1) / width + 1; }
    std::int64_t offset_of(std::int64_t color) const { return (color - 1) % width + 1; }
};

struct KwResult {
    Coloring coloring;
    RunMetrics metrics;
    std::int64_t phases = 0;
    std::vector<Coloring> phase_colorings;  // coloring after each phase
};

// Shared reduction: every phase merges up to group_size consecutive blocks
// per group by running the greedy problem through the interval schedules on
// the group's relabeled palette; a trailing single-block group passes
// through unchanged. Requires width >= Delta+1 so the merged offsets fit.
KwResult kw_reduce_grouped(const Graph& g, const BlockedColoring& blocked,
                           std::int64_t group_size, const std::string& phase_prefix);

// Pairwise merging; final coloring uses at most `width` colors.
KwResult sleeping_kw_reduce(const Graph& g, const BlockedColoring& blocked);

// Wraps an a-coloring into ceil(a/(Delta+1)) blocks and reduces pairwise.
KwResult sleeping_kw_iterative(const Graph& g, const Coloring& c);

// Merges max(2, ceil(Delta^eps)) blocks per group. eps in (0, 1].
KwResult batched_kw_reduce(const Graph& g, const BlockedColoring& blocked, double eps);

std::int64_t batched_group_size(std::int64_t max_deg, double eps);

// Number of times r -> ceil(r/group) until one block remains.
std::int64_t expected_grouped_phases(std::int64_t r, std::int64_t group);

}  // namespace somnus
