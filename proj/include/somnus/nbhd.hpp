#pragma once

#include <cstdint>

#include "somnus/graph.hpp"

namespace somnus {

inline constexpr std::int64_t kDefaultIndependenceDegreeCap = 20;

// Exact neighborhood independence K: the maximum, over vertices v, of the
// largest independent set inside N*(v). Exhaustive; refuses (throws) when a
// degree exceeds the cap instead of approximating. 0 for edgeless graphs.
std::int64_t neighborhood_independence(const Graph& g,
                                       std::int64_t degree_cap = kDefaultIndependenceDegreeCap);

}  // namespace somnus
