#pragma once

#include <cstdint>
#include <string>

#include "somnus/coloring.hpp"
#include "somnus/graph.hpp"
#include "somnus/metrics.hpp"

namespace somnus {

// The three trade-off pipelines, by the section that introduces them.
enum class Strategy { Kw31, Batched32, Hstar33 };

Strategy strategy_from_string(const std::string& name);
std::string strategy_name(Strategy s);

struct PipelineResult {
    Coloring coloring;  // proper, palette <= Delta+1
    RunMetrics metrics;
};

// kw31: Linial then pairwise reduction. batched32: Linial then the
// Delta^eps-grouped reduction. hstar33: the defective cascade.
PipelineResult run_coloring_pipeline(const Graph& g, Strategy s, double eps = 0.5);

}  // namespace somnus
