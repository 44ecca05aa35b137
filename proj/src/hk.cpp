#include "somnus/hk.hpp"

#include <algorithm>

#include "somnus/kw.hpp"
#include "somnus/linial.hpp"
#include "somnus/numeric.hpp"

namespace somnus {

std::int64_t iterated_ceil_log2(std::int64_t x, std::int64_t times) {
    for (std::int64_t i = 0; i < times; ++i) x = ceil_log2(std::max<std::int64_t>(x, 1));
    return x;
}

HkResult h_k(const Graph& g, std::int64_t k) {
    if (k < 1) throw Error("h_k: k must be >= 1");
    HkResult result;
    result.k = k;
    if (g.empty()) {
        result.coloring.palette = 1;
        return result;
    }

    if (k == 1) {
        LinialResult linial = linial_coloring(g, "h1/linial");
        result.metrics.extend(linial.metrics);
        KwResult kw = sleeping_kw_iterative(g, linial.coloring);
        result.metrics.extend(kw.metrics, "h1/");
        result.coloring = kw.coloring;
        return result;
    }

    std::int64_t max_deg = g.max_degree();
    std::string tag = "h" + std::to_string(k);
    result.p = std::max<std::int64_t>(2, iterated_ceil_log2(max_deg, k - 1));

    DefectiveColoringResult def = defective_coloring(g, result.p);
    result.metrics.extend(def.metrics, tag + "/");

    // Color classes are vertex disjoint, so their recursive runs share clock
    // rounds; merge them as one parallel phase.
    std::map<std::int64_t, std::set<VertexId>> classes;
    for (VertexId v : g.vertices()) classes[def.coloring.at(v)].insert(v);

    std::int64_t class_width = def.defect_bound + 1;
    Coloring flattened;
    flattened.palette = def.coloring.palette * class_width;
    std::vector<Metrics> class_totals;
    for (const auto& [class_color, members] : classes) {
        Graph sub = g.induced(members);
        HkResult rec = h_k(sub, k - 1);
        if (rec.coloring.palette > class_width)
            throw Error("h_k: class palette exceeds the defect bound width");
        class_totals.push_back(rec.metrics.total);
        for (VertexId v : members)
            flattened.set(v, (class_color - 1) * class_width + rec.coloring.at(v));
    }
    result.metrics.add_parallel_phase(tag + "/classes", class_totals);

    KwResult kw = sleeping_kw_iterative(g, flattened);
    result.metrics.extend(kw.metrics, tag + "/");
    result.coloring = kw.coloring;
    return result;
}

HkResult h_star(const Graph& g) {
    std::int64_t k = std::max<std::int64_t>(
        1, log_star(static_cast<double>(g.empty() ? 0 : g.max_degree())));
    return h_k(g, k);
}

}  // namespace somnus
