#include "somnus/defective.hpp"

#include <algorithm>

namespace somnus {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

DefectiveColoringResult defective_coloring(const Graph& g, std::int64_t p) {
    if (p < 1) throw Error("defective_coloring: p must be >= 1");
    std::int64_t max_deg = g.max_degree();

    DefectiveColoringResult result;
    result.p = p;
    result.colors_bound = kDefectiveColorsFactor * p * p;

    if (p == 1) {
        for (VertexId v : g.vertices()) result.coloring.set(v, 1);
        result.coloring.palette = 1;
        result.defect_bound = max_deg;
        result.measured_max_defect = g.empty() ? 0 : max_defect(coloring_defect(g, result.coloring));
        return result;
    }
    if (g.empty()) {
        result.coloring.palette = 1;
        return result;
    }

    LinialResult linial = linial_coloring(g, "defective/linial");
    result.metrics.extend(linial.metrics);

    // Budget pool ceil(Delta/p), handed out geometrically; a step may only
    // spend what is left, so the summed per-step bounds never exceed the pool.
    std::int64_t pool = ceil_div(max_deg, p);
    std::int64_t remaining = pool;
    std::vector<ReduceParams> ladder;
    std::int64_t m = linial.coloring.palette;
    std::int64_t spent = 0;
    for (std::int64_t step = 0; static_cast<std::size_t>(step) < 64; ++step) {
        std::int64_t denom = p;
        for (std::int64_t i = 0; i <= step && denom < (std::int64_t{1} << 40); ++i) denom *= 2;
        std::int64_t budget = std::min(ceil_div(max_deg, denom), remaining);
        auto params = choose_params_defective(m, max_deg, budget);
        if (!params) break;  // no shrinking step left
        std::int64_t step_bound = (max_deg * params->t) / params->q;
        ladder.push_back(*params);
        remaining -= step_bound;
        spent += step_bound;
        m = params->new_palette();
    }

    LadderResult reduced = run_reduce_ladder(g, linial.coloring, ladder, "defective/steps");
    result.metrics.add_phase("defective/steps", reduced.metrics);
    result.coloring = reduced.coloring;
    result.ladder = std::move(ladder);
    result.defect_bound = std::min(spent, pool);
    result.measured_max_defect = max_defect(coloring_defect(g, result.coloring));
    if (result.measured_max_defect > result.defect_bound)
        throw Error("defective_coloring: measured defect " +
                    std::to_string(result.measured_max_defect) + " exceeds the bound " +
                    std::to_string(result.defect_bound));
    if (result.coloring.palette > result.colors_bound)
        throw Error("defective_coloring: palette " + std::to_string(result.coloring.palette) +
                    " exceeds the colors bound " + std::to_string(result.colors_bound));
    return result;
}

}  // namespace somnus
