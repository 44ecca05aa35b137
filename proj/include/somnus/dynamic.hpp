#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "somnus/changes.hpp"
#include "somnus/coloring.hpp"
#include "somnus/graph.hpp"
#include "somnus/metrics.hpp"
#include "somnus/olocal.hpp"
#include "somnus/pipelines.hpp"

namespace somnus {

// Raised when an update leaves the problem validator unhappy; by the model's
// legality lemma this should not happen, so it is fatal rather than tolerated.
class ValidatorFailure : public Error {
public:
    explicit ValidatorFailure(const std::string& what) : Error(what) {}
};

struct DynamicState {
    Graph graph;
    std::string problem_name;
    Strategy strategy = Strategy::Kw31;
    std::int64_t t = 1;
    Coloring prep_coloring;
    std::map<VertexId, Decision> decisions;
    RunMetrics prepare_metrics;
};

DynamicState prepare(const Graph& g, const OLocalProblem& problem, Strategy strategy,
                     std::int64_t t, double eps = 0.5);

struct ExtractResult {
    Graph graph;                 // the graph after the batch
    std::set<VertexId> changed;  // S: endpoints of changed edges still present, plus new vertices
};

ExtractResult extract_changed_set(const Graph& g, const ChangeBatch& batch);

struct UpdateResult {
    std::set<VertexId> changed;
    RunMetrics metrics;
    std::int64_t s_internal_degree = 0;  // k': max degree inside S
};

// One §-style update: apply the batch, recolor the changed set from ids,
// reduce it with a single greedy pass, then re-solve the problem on S against
// the frozen outside decisions (one all-awake collection round on S∪N(S) is
// the only time anyone outside S wakes). Validates the whole graph afterward.
UpdateResult dynamic_update(DynamicState& state, const ChangeBatch& batch,
                            const OLocalProblem& problem);

struct DynamicReportRow {
    std::int64_t batch = 0;  // 0 = prepare row
    std::int64_t s_size = 0;
    std::int64_t alpha = 0;
    std::int64_t beta = 0;
    std::int64_t max_awake = 0;
    std::int64_t clock_rounds = 0;
    bool valid = true;
};

struct DynamicReport {
    std::vector<DynamicReportRow> rows;
};

DynamicReport run_dynamic_experiment(const Graph& g0, const OLocalProblem& problem,
                                     Strategy strategy, std::int64_t t,
                                     const std::vector<ChangeBatch>& batches);

// Deterministic random batch against the current graph: edge flips plus the
// occasional vertex churn, all applicable in order and degree-capped.
ChangeBatch random_batch(const Graph& g, std::int64_t t, std::int64_t dmax, std::uint64_t seed);

void write_dynamic_csv(const DynamicReport& report, std::ostream& out);

}  // namespace somnus
