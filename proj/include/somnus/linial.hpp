#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "somnus/coloring.hpp"
#include "somnus/engine.hpp"
#include "somnus/graph.hpp"
#include "somnus/metrics.hpp"

namespace somnus {

inline constexpr std::int64_t kMaxPolyDegree = 40;
inline constexpr std::int64_t kPrimeCap = 1'000'003;

// One polynomial color-reduction step: colors in [1..m] are encoded as
// degree-<=t polynomials over F_q; each vertex picks the evaluation point
// where the fewest neighbor polynomials agree with its own and takes
// color = x*q + P(x) + 1 in [1..q^2]. budget = -1 selects the proper rule
// (q > Delta*t, zero conflicts); otherwise floor(Delta*t/q) <= budget.
struct ReduceParams {
    std::int64_t m = 1;        // palette the step consumes
    std::int64_t t = 1;
    std::int64_t q = 2;
    std::int64_t budget = -1;  // -1 = proper target
    std::int64_t new_palette() const { return q * q; }
};

// Parameter rules; nullopt when no admissible prime exists under kPrimeCap
// (proper) or no shrinking step exists (defective).
std::optional<ReduceParams> choose_params_proper(std::int64_t m, std::int64_t max_deg);
std::optional<ReduceParams> choose_params_defective(std::int64_t m, std::int64_t max_deg,
                                                    std::int64_t budget);

struct ReduceStepResult {
    Coloring coloring;
    ReduceParams params;
    Metrics metrics;
};

// One all-awake communication round applying `params`; with budget = -1 the
// input coloring must be proper.
ReduceStepResult polynomial_reduce_step(const Graph& g, const Coloring& c,
                                        const ReduceParams& params,
                                        const std::string& phase_name = "reduce-step");

// Convenience: derive the params from the target and apply one step.
ReduceStepResult polynomial_reduce_step(const Graph& g, const Coloring& c,
                                        std::optional<std::int64_t> defect_budget,
                                        const std::string& phase_name = "reduce-step");

// Deterministic ladder of reduce steps: starting palette m0, proper target,
// stop at the fixed point (no step shrinks the palette).
std::vector<ReduceParams> proper_reduce_ladder(std::int64_t m0, std::int64_t max_deg);

// Runs a ladder of steps as one phase (all vertices awake every round).
struct LadderResult {
    Coloring coloring;
    Metrics metrics;
    std::vector<ReduceParams> ladder;
};
LadderResult run_reduce_ladder(const Graph& g, const Coloring& start,
                               const std::vector<ReduceParams>& ladder,
                               const std::string& phase_name);

// Linial-style initial coloring from ids: palette <= 25 * max(Delta,2)^2 in
// O(log* n) all-awake rounds.
struct LinialResult {
    Coloring coloring;
    RunMetrics metrics;
    std::vector<ReduceParams> ladder;
};
LinialResult linial_coloring(const Graph& g, const std::string& phase_name = "linial");

std::int64_t linial_palette_bound(std::int64_t max_deg);  // 25 * max(Delta,2)^2

}  // namespace somnus
