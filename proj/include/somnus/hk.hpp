#pragma once

#include <cstdint>

#include "somnus/coloring.hpp"
#include "somnus/defective.hpp"
#include "somnus/graph.hpp"
#include "somnus/metrics.hpp"

namespace somnus {

struct HkResult {
    Coloring coloring;  // proper, palette <= Delta+1
    RunMetrics metrics;
    std::int64_t k = 1;
    std::int64_t p = 0;  // 0 for k = 1
};

// The defective-coloring cascade: k = 1 is Linial plus the iterative pairwise
// reduction; k >= 2 splits the graph into p^2-ish defective classes with
// p = max(2, log^(k-1) Delta), colors each class recursively (classes share
// clock rounds), flattens, and reduces.
HkResult h_k(const Graph& g, std::int64_t k);

// h_k at k = max(1, log* Delta).
HkResult h_star(const Graph& g);

// Iterated ceil(log2): j applications starting from x (clamped at >= 1).
std::int64_t iterated_ceil_log2(std::int64_t x, std::int64_t times);

}  // namespace somnus
