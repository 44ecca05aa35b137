#pragma once

#include <cstdint>
#include <string>

#include "somnus/graph.hpp"

namespace somnus {

enum class Family {
    Path,
    Cycle,
    Star,
    RandomBoundedDegree,
    LineGraphOfRandom,
    UnitInterval,
};

Family family_from_string(const std::string& name);
std::string family_name(Family f);

// Deterministic graph generation: the same (family, n, dmax, seed) always
// yields the identical edge set. Vertex ids are 1..n. Throws on infeasible
// parameters (e.g. a cycle with n < 3, a star wider than dmax allows).
Graph generate_graph(Family family, std::int64_t n, std::int64_t dmax, std::uint64_t seed);

}  // namespace somnus
