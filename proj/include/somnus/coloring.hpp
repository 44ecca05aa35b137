#pragma once

#include <cstdint>
#include <map>

#include "somnus/graph.hpp"

namespace somnus {

// Vertex coloring with a declared palette size. Color 0 means "uncolored";
// defective colorings are legal values, properness is a predicate.
struct Coloring {
    std::map<VertexId, std::int64_t> color;
    std::int64_t palette = 1;

    std::int64_t at(VertexId v) const {
        auto it = color.find(v);
        return it == color.end() ? 0 : it->second;
    }
    void set(VertexId v, std::int64_t c) { color[v] = c; }

    // All vertices of g colored with a nonzero color.
    bool complete(const Graph& g) const;

    // Every nonzero color within the declared palette.
    void check_palette() const;
};

struct ColoringReport {
    bool proper = false;
    std::vector<Edge> violations;   // edges whose endpoints share a nonzero color
    std::int64_t colors_used = 0;   // distinct nonzero colors
};

ColoringReport validate_coloring(const Graph& g, const Coloring& c, bool require_complete);

// defect(v) = number of neighbors sharing v's color. Throws if any vertex of
// g is uncolored.
std::map<VertexId, std::int64_t> coloring_defect(const Graph& g, const Coloring& c);

std::int64_t max_defect(const std::map<VertexId, std::int64_t>& defects);

// Trivial proper coloring by vertex ids (palette = max id).
Coloring coloring_from_ids(const Graph& g);

}  // namespace somnus
