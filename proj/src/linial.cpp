#include "somnus/linial.hpp"

#include <algorithm>
#include <charconv>
#include <memory>

#include "somnus/numeric.hpp"

namespace somnus {

namespace {

// Smallest q with floor(max_deg * t / q) <= budget.
std::int64_t min_q_for_budget(std::int64_t max_deg, std::int64_t t, std::int64_t budget) {
    if (budget < 0) return max_deg * t + 1;  // proper: zero agreements possible
    return (max_deg * t) / (budget + 1) + 1;
}

std::optional<ReduceParams> params_for(std::int64_t m, std::int64_t max_deg, std::int64_t t,
                                       std::int64_t budget) {
    std::int64_t lo = std::max(min_q_for_budget(max_deg, t, budget), ceil_kth_root(m, t + 1));
    std::int64_t q = next_prime(std::max<std::int64_t>(lo, 2));
    if (q > kPrimeCap) return std::nullopt;
    return ReduceParams{m, t, q, budget};
}

}  // namespace

std::optional<ReduceParams> choose_params_proper(std::int64_t m, std::int64_t max_deg) {
    if (m < 1) throw Error("choose_params_proper: m must be >= 1");
    std::optional<ReduceParams> best;
    for (std::int64_t t = 1; t <= kMaxPolyDegree; ++t) {
        auto p = params_for(m, max_deg, t, -1);
        if (!p) continue;
        if (!best || p->new_palette() < best->new_palette()) best = p;
    }
    return best;
}

std::optional<ReduceParams> choose_params_defective(std::int64_t m, std::int64_t max_deg,
                                                    std::int64_t budget) {
    if (m < 1 || budget < 0) throw Error("choose_params_defective: bad arguments");
    for (std::int64_t t = 1; t <= kMaxPolyDegree; ++t) {
        auto p = params_for(m, max_deg, t, budget);
        if (p && p->new_palette() < m) return p;  // smallest t that shrinks
    }
    return std::nullopt;
}

namespace {

// Coefficients of the polynomial encoding color c in [1..m]: base-q digits of
// c-1, lowest first, t+1 of them.
std::vector<std::int64_t> poly_of(std::int64_t color, const ReduceParams& p) {
    std::vector<std::int64_t> digits(p.t + 1, 0);
    std::int64_t v = color - 1;
    for (std::int64_t i = 0; i <= p.t && v > 0; ++i) {
        digits[i] = v % p.q;
        v /= p.q;
    }
    if (v > 0) throw Error("reduce step: color exceeds q^(t+1)");
    return digits;
}

std::int64_t eval_poly(const std::vector<std::int64_t>& coeff, std::int64_t x, std::int64_t q) {
    std::int64_t acc = 0;
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = (acc * x + *it) % q;
    return acc;
}

// New color for a vertex given its own and its neighbors' current colors.
// The scan starts at a per-vertex offset so that ties spread over the whole
// point range instead of piling up at x = 0.
std::int64_t reduced_color(VertexId id, std::int64_t my_color,
                           const std::vector<std::int64_t>& neighbor_colors,
                           const ReduceParams& p) {
    auto mine = poly_of(my_color, p);
    std::vector<std::vector<std::int64_t>> others;
    others.reserve(neighbor_colors.size());
    for (std::int64_t c : neighbor_colors) others.push_back(poly_of(c, p));
    std::int64_t start = static_cast<std::int64_t>(mix64(static_cast<std::uint64_t>(id)) %
                                                   static_cast<std::uint64_t>(p.q));
    std::int64_t best_x = -1, best_count = -1;
    for (std::int64_t i = 0; i < p.q; ++i) {
        std::int64_t x = (start + i) % p.q;
        std::int64_t my_val = eval_poly(mine, x, p.q);
        std::int64_t count = 0;
        for (const auto& poly : others)
            if (eval_poly(poly, x, p.q) == my_val) ++count;
        if (best_count < 0 || count < best_count) {
            best_count = count;
            best_x = x;
            if (count == 0) break;
        }
    }
    if (p.budget < 0 && best_count != 0)
        throw Error("reduce step: no conflict-free point for vertex " + std::to_string(id) +
                    " (improper input?)");
    return best_x * p.q + eval_poly(mine, best_x, p.q) + 1;
}

class LadderProgram final : public NodeProgram {
public:
    LadderProgram(VertexId id, std::int64_t color, const std::vector<ReduceParams>* ladder)
        : id_(id), color_(color), ladder_(ladder) {}

    StartInfo on_start(const NodeContext&) override {
        StartInfo s;
        for (std::size_t i = 1; i <= ladder_->size(); ++i)
            s.schedule.rounds.insert(static_cast<std::int64_t>(i));
        s.done = ladder_->empty();
        return s;
    }

    void on_wake_send(std::int64_t, std::vector<OutMessage>& out) override {
        out.push_back({std::nullopt, std::to_string(color_)});
    }

    WakeResult on_wake_receive(std::int64_t round, std::span<const InMessage> inbox) override {
        std::vector<std::int64_t> neighbor_colors;
        neighbor_colors.reserve(inbox.size());
        for (const InMessage& msg : inbox) {
            std::int64_t c = 0;
            auto [ptr, ec] = std::from_chars(msg.payload.data(),
                                             msg.payload.data() + msg.payload.size(), c);
            if (ec != std::errc()) throw Error("reduce step: bad color payload");
            neighbor_colors.push_back(c);
        }
        color_ = reduced_color(id_, color_, neighbor_colors, (*ladder_)[round - 1]);
        WakeResult r;
        r.done = round == static_cast<std::int64_t>(ladder_->size());
        return r;
    }

    std::int64_t color() const { return color_; }

private:
    VertexId id_;
    std::int64_t color_;
    const std::vector<ReduceParams>* ladder_;
};

}  // namespace

LadderResult run_reduce_ladder(const Graph& g, const Coloring& start,
                               const std::vector<ReduceParams>& ladder,
                               const std::string& phase_name) {
    if (!start.complete(g)) throw Error(phase_name + ": input coloring incomplete");
    std::map<VertexId, std::unique_ptr<LadderProgram>> programs;
    std::map<VertexId, NodeProgram*> handles;
    for (VertexId v : g.vertices()) {
        auto prog = std::make_unique<LadderProgram>(v, start.at(v), &ladder);
        handles[v] = prog.get();
        programs[v] = std::move(prog);
    }
    PhaseConfig config;
    config.name = phase_name;
    LadderResult result;
    result.metrics = run_phase(g, handles, config);
    result.ladder = ladder;
    result.coloring.palette = ladder.empty() ? start.palette : ladder.back().new_palette();
    for (const auto& [v, prog] : programs) result.coloring.set(v, prog->color());
    return result;
}

ReduceStepResult polynomial_reduce_step(const Graph& g, const Coloring& c,
                                        const ReduceParams& params,
                                        const std::string& phase_name) {
    if (params.budget < 0) {
        ColoringReport report = validate_coloring(g, c, /*require_complete=*/true);
        if (!report.proper) throw Error(phase_name + ": proper target needs a proper coloring");
        if (params.q <= g.max_degree() * params.t)
            throw Error(phase_name + ": proper target needs q > Delta*t");
    }
    LadderResult lr = run_reduce_ladder(g, c, {params}, phase_name);
    return {lr.coloring, params, lr.metrics};
}

ReduceStepResult polynomial_reduce_step(const Graph& g, const Coloring& c,
                                        std::optional<std::int64_t> defect_budget,
                                        const std::string& phase_name) {
    std::optional<ReduceParams> params =
        defect_budget ? choose_params_defective(c.palette, g.max_degree(), *defect_budget)
                      : choose_params_proper(c.palette, g.max_degree());
    if (!params)
        throw Error(phase_name + ": no admissible prime q under the cap for palette " +
                    std::to_string(c.palette));
    return polynomial_reduce_step(g, c, *params, phase_name);
}

std::vector<ReduceParams> proper_reduce_ladder(std::int64_t m0, std::int64_t max_deg) {
    std::vector<ReduceParams> ladder;
    std::int64_t m = std::max<std::int64_t>(m0, 1);
    while (ladder.size() < 64) {
        auto params = choose_params_proper(m, max_deg);
        if (!params)
            throw Error("linial: no admissible prime q under the cap for palette " +
                        std::to_string(m));
        if (params->new_palette() >= m) break;  // fixed point
        ladder.push_back(*params);
        m = params->new_palette();
    }
    return ladder;
}

std::int64_t linial_palette_bound(std::int64_t max_deg) {
    std::int64_t d = std::max<std::int64_t>(max_deg, 2);
    return 25 * d * d;
}

LinialResult linial_coloring(const Graph& g, const std::string& phase_name) {
    LinialResult result;
    if (g.empty()) {
        result.coloring.palette = 1;
        return result;
    }
    Coloring ids = coloring_from_ids(g);
    std::vector<ReduceParams> ladder = proper_reduce_ladder(ids.palette, g.max_degree());
    LadderResult lr = run_reduce_ladder(g, ids, ladder, phase_name);
    result.coloring = lr.coloring;
    result.ladder = std::move(lr.ladder);
    result.metrics.add_phase(phase_name, lr.metrics);
    return result;
}

}  // namespace somnus
