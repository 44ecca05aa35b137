#pragma once

#include <cstdint>

#include "somnus/coloring.hpp"
#include "somnus/graph.hpp"
#include "somnus/linial.hpp"
#include "somnus/metrics.hpp"

namespace somnus {

// Measured factor over p^2 the cascade achieves at desk scale; the ladder's
// fixed point stays well inside this for Delta <= 64.
inline constexpr std::int64_t kDefectiveColorsFactor = 96;

struct DefectiveColoringResult {
    Coloring coloring;
    std::int64_t p = 1;
    std::int64_t defect_bound = 0;        // sum of the applied per-step budgets
    std::int64_t colors_bound = 0;        // kDefectiveColorsFactor * p^2
    std::int64_t measured_max_defect = 0;
    RunMetrics metrics;
    std::vector<ReduceParams> ladder;
};

// O(Delta/p)-defective coloring: Linial first, then defective reduce steps
// with geometrically shrinking budgets clamped so the total stays within
// ceil(Delta/p). p = 1 degenerates to the single-color coloring.
DefectiveColoringResult defective_coloring(const Graph& g, std::int64_t p);

}  // namespace somnus
