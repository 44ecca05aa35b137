#include "somnus/coloring.hpp"

#include <algorithm>
#include <set>

namespace somnus {

bool Coloring::complete(const Graph& g) const {
    for (VertexId v : g.vertices())
        if (at(v) == 0) return false;
    return true;
}

void Coloring::check_palette() const {
    for (const auto& [v, c] : color) {
        if (c < 0) throw Error("negative color at vertex " + std::to_string(v));
        if (c > palette)
            throw Error("color " + std::to_string(c) + " exceeds palette " +
                        std::to_string(palette));
    }
}

ColoringReport validate_coloring(const Graph& g, const Coloring& c, bool require_complete) {
    ColoringReport report;
    report.proper = true;
    std::set<std::int64_t> used;
    for (VertexId v : g.vertices()) {
        std::int64_t cv = c.at(v);
        if (cv != 0) used.insert(cv);
        if (cv == 0 && require_complete) report.proper = false;
    }
    for (const Edge& e : g.edges()) {
        std::int64_t cu = c.at(e.u);
        std::int64_t cv = c.at(e.v);
        if (cu != 0 && cu == cv) {
            report.proper = false;
            report.violations.push_back(e);
        }
    }
    report.colors_used = static_cast<std::int64_t>(used.size());
    return report;
}

std::map<VertexId, std::int64_t> coloring_defect(const Graph& g, const Coloring& c) {
    std::map<VertexId, std::int64_t> defect;
    for (VertexId v : g.vertices()) {
        std::int64_t cv = c.at(v);
        if (cv == 0) throw Error("coloring_defect: uncolored vertex " + std::to_string(v));
        std::int64_t d = 0;
        for (VertexId u : g.neighbors(v))
            if (c.at(u) == cv) ++d;
        defect[v] = d;
    }
    return defect;
}

std::int64_t max_defect(const std::map<VertexId, std::int64_t>& defects) {
    std::int64_t m = 0;
    for (const auto& [v, d] : defects) m = std::max(m, d);
    return m;
}

Coloring coloring_from_ids(const Graph& g) {
    Coloring c;
    for (VertexId v : g.vertices()) c.set(v, v);
    c.palette = std::max<std::int64_t>(1, g.max_vertex_id());
    return c;
}

}  // namespace somnus
