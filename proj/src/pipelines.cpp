#include "somnus/pipelines.hpp"

#include "somnus/hk.hpp"
#include "somnus/kw.hpp"
#include "somnus/linial.hpp"

namespace somnus {

Strategy strategy_from_string(const std::string& name) {
    if (name == "kw31") return Strategy::Kw31;
    if (name == "batched32") return Strategy::Batched32;
    if (name == "hstar33") return Strategy::Hstar33;
    throw Error("unknown strategy: " + name + " (expected kw31|batched32|hstar33)");
}

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Kw31: return "kw31";
        case Strategy::Batched32: return "batched32";
        case Strategy::Hstar33: return "hstar33";
    }
    throw Error("unknown strategy enum");
}

PipelineResult run_coloring_pipeline(const Graph& g, Strategy s, double eps) {
    PipelineResult result;
    if (g.empty()) {
        result.coloring.palette = 1;
        return result;
    }
    switch (s) {
        case Strategy::Kw31: {
            LinialResult linial = linial_coloring(g);
            result.metrics.extend(linial.metrics);
            KwResult kw = sleeping_kw_iterative(g, linial.coloring);
            result.metrics.extend(kw.metrics);
            result.coloring = kw.coloring;
            return result;
        }
        case Strategy::Batched32: {
            LinialResult linial = linial_coloring(g);
            result.metrics.extend(linial.metrics);
            std::int64_t width = g.max_degree() + 1;
            if (linial.coloring.palette <= width) {
                result.coloring = linial.coloring;
                return result;
            }
            KwResult kw = batched_kw_reduce(g, BlockedColoring::wrap(linial.coloring, width), eps);
            result.metrics.extend(kw.metrics);
            result.coloring = kw.coloring;
            return result;
        }
        case Strategy::Hstar33: {
            HkResult hk = h_star(g);
            result.metrics.extend(hk.metrics);
            result.coloring = hk.coloring;
            return result;
        }
    }
    throw Error("unknown strategy enum");
}

}  // namespace somnus
