#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "somnus/graph.hpp"

namespace somnus {

using Decision = std::int64_t;

struct VertexContext {
    VertexId id = 0;
    std::int64_t degree = 0;
};

// A problem each vertex can decide from its parents' decisions alone.
// decide must be a pure function of its arguments.
class OLocalProblem {
public:
    virtual ~OLocalProblem() = default;
    virtual Decision decide(const VertexContext& ctx,
                            const std::map<VertexId, Decision>& parents) const = 0;
    virtual bool validate(const Graph& g, const std::map<VertexId, Decision>& all) const = 0;
    virtual std::string name() const = 0;
};

// decision = smallest positive color absent from the parents' decisions.
class GreedyColoringProblem final : public OLocalProblem {
public:
    Decision decide(const VertexContext& ctx,
                    const std::map<VertexId, Decision>& parents) const override;
    bool validate(const Graph& g, const std::map<VertexId, Decision>& all) const override;
    std::string name() const override { return "greedy"; }
};

// decision = 1 (IN) iff no parent decided 1, else 0 (OUT). Validates as an
// independent dominating set.
class MisProblem final : public OLocalProblem {
public:
    static constexpr Decision kIn = 1;
    static constexpr Decision kOut = 0;
    Decision decide(const VertexContext& ctx,
                    const std::map<VertexId, Decision>& parents) const override;
    bool validate(const Graph& g, const std::map<VertexId, Decision>& all) const override;
    std::string name() const override { return "mis"; }
};

const OLocalProblem& problem_by_name(const std::string& name);  // "greedy" | "mis"

// Wake schedule from the in-order-numbered perfect binary tree over
// D = 2^ceil(log2(max(d,2))) leaves: the schedule of a label is the in-order
// index of its leaf (2*label-1, the decision round) plus those of all its
// ancestors. For any two labels a < b the LCA index lies strictly between
// their decision rounds, which is what lets a parent's decision reach its
// children in time.
struct IntervalSchedule {
    std::vector<std::int64_t> rounds;    // sorted
    std::int64_t decision_round = 0;
    std::int64_t padded_leaves = 0;      // D
};

IntervalSchedule build_interval_schedule(std::int64_t label, std::int64_t d);
std::int64_t padded_leaves(std::int64_t d);  // D = 2^ceil(log2(max(d,2)))
std::int64_t interval_lca_round(std::int64_t a, std::int64_t b, std::int64_t d);

// Reference solver: processes vertices by increasing (label, id) and applies
// decide over the already-decided strictly-smaller-labeled neighbors plus any
// fixed outside decisions. Kept independent of the round engine so the two
// routes check each other.
std::map<VertexId, Decision> sequential_solve(
    const Graph& g, const std::map<VertexId, std::int64_t>& labels, const OLocalProblem& problem,
    const std::map<VertexId, std::map<VertexId, Decision>>& fixed_parents = {});

}  // namespace somnus
