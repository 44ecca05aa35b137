#include "somnus/bni.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include <json.hpp>

namespace somnus {

namespace {

std::string encode_orient_payload(std::int64_t label, const std::set<VertexId>& adj) {
    std::ostringstream out;
    out << label << "|";
    bool first = true;
    for (VertexId u : adj) {
        if (!first) out << ",";
        out << u;
        first = false;
    }
    return out.str();
}

std::pair<std::int64_t, std::set<VertexId>> decode_orient_payload(const std::string& payload) {
    auto bar = payload.find('|');
    if (bar == std::string::npos) throw Error("bni: bad orientation payload");
    std::int64_t label = std::stoll(payload.substr(0, bar));
    std::set<VertexId> adj;
    std::string rest = payload.substr(bar + 1);
    std::istringstream in(rest);
    std::string token;
    while (std::getline(in, token, ','))
        if (!token.empty()) adj.insert(std::stoll(token));
    return {label, adj};
}

// Candidate order for the ruling-set greedy: decreasing label, non-adjacent
// ties toward the smaller id.
bool candidate_before(std::int64_t la, VertexId a, std::int64_t lb, VertexId b) {
    if (la != lb) return la > lb;
    return a < b;
}

class OrientProgram final : public NodeProgram {
public:
    OrientProgram(VertexId id, std::int64_t label) : id_(id), label_(label) {}

    StartInfo on_start(const NodeContext& ctx) override {
        neighbors_ = ctx.neighbors();
        StartInfo s;
        s.schedule.rounds.insert(1);
        return s;
    }

    void on_wake_send(std::int64_t, std::vector<OutMessage>& out) override {
        out.push_back({std::nullopt, encode_orient_payload(label_, neighbors_)});
    }

    WakeResult on_wake_receive(std::int64_t, std::span<const InMessage> inbox) override {
        std::map<VertexId, std::int64_t> nbr_label;
        std::map<VertexId, std::set<VertexId>> nbr_adj;
        for (const InMessage& msg : inbox) {
            auto [label, adj] = decode_orient_payload(msg.payload);
            if (label == label_)
                throw Error("bni: adjacent label tie between " + std::to_string(id_) + " and " +
                            std::to_string(msg.from));
            nbr_label[msg.from] = label;
            nbr_adj[msg.from] = std::move(adj);
        }
        std::vector<VertexId> candidates;
        for (const auto& [u, l] : nbr_label)
            if (l < label_) candidates.push_back(u);
        std::sort(candidates.begin(), candidates.end(), [&](VertexId a, VertexId b) {
            return candidate_before(nbr_label[a], a, nbr_label[b], b);
        });
        for (VertexId u : candidates) {
            bool independent = true;
            for (VertexId w : parents_)
                if (nbr_adj[u].count(w)) { independent = false; break; }
            if (independent) parents_.push_back(u);
        }
        WakeResult r;
        r.done = true;
        return r;
    }

    const std::vector<VertexId>& parents() const { return parents_; }

private:
    VertexId id_;
    std::int64_t label_;
    std::set<VertexId> neighbors_;
    std::vector<VertexId> parents_;
};

struct Triple {
    VertexId origin;
    std::int64_t label;
    Decision value;
};

std::string encode_triples(const std::map<VertexId, std::pair<std::int64_t, Decision>>& held) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [origin, lv] : held) {
        if (!first) out << ";";
        out << origin << ":" << lv.first << ":" << lv.second;
        first = false;
    }
    return out.str();
}

std::vector<Triple> decode_triples(const std::string& payload) {
    std::vector<Triple> triples;
    std::istringstream in(payload);
    std::string token;
    while (std::getline(in, token, ';')) {
        if (token.empty()) continue;
        auto c1 = token.find(':');
        auto c2 = token.find(':', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw Error("bni: bad relay payload");
        triples.push_back({std::stoll(token.substr(0, c1)),
                           std::stoll(token.substr(c1 + 1, c2 - c1 - 1)),
                           std::stoll(token.substr(c2 + 1))});
    }
    return triples;
}

class SolveProgram final : public NodeProgram {
public:
    SolveProgram(VertexId id, std::int64_t label, std::vector<std::int64_t> parent_rounds,
                 std::set<VertexId> full_parents, const OLocalProblem* problem)
        : id_(id),
          label_(label),
          parent_rounds_(std::move(parent_rounds)),
          full_parents_(std::move(full_parents)),
          problem_(problem) {}

    StartInfo on_start(const NodeContext& ctx) override {
        degree_ = ctx.degree();
        StartInfo s;
        for (std::int64_t r : parent_rounds_) s.schedule.rounds.insert(r);
        s.schedule.rounds.insert(label_);
        return s;
    }

    void on_wake_send(std::int64_t round, std::vector<OutMessage>& out) override {
        if (round == label_) {
            std::map<VertexId, Decision> parents;
            for (VertexId p : full_parents_) {
                auto it = held_.find(p);
                if (it == held_.end())
                    throw Error("bni: vertex " + std::to_string(id_) +
                                " missing the decision of parent " + std::to_string(p) +
                                " at its label round (propagation failure)");
                parents[p] = it->second.second;
            }
            decision_ = problem_->decide({id_, degree_}, parents);
            decided_ = true;
            held_[id_] = {label_, decision_};
        }
        if (!held_.empty()) out.push_back({std::nullopt, encode_triples(held_)});
    }

    WakeResult on_wake_receive(std::int64_t round, std::span<const InMessage> inbox) override {
        for (const InMessage& msg : inbox)
            for (const Triple& t : decode_triples(msg.payload)) {
                receptions_.push_back({t.origin, msg.from, round});
                if (!held_.count(t.origin)) held_[t.origin] = {t.label, t.value};
            }
        WakeResult r;
        r.done = round == label_;
        return r;
    }

    bool decided() const { return decided_; }
    Decision decision() const { return decision_; }
    const std::vector<BniReception>& receptions() const { return receptions_; }

private:
    VertexId id_;
    std::int64_t label_;
    std::int64_t degree_ = 0;
    std::vector<std::int64_t> parent_rounds_;
    std::set<VertexId> full_parents_;
    const OLocalProblem* problem_;
    std::map<VertexId, std::pair<std::int64_t, Decision>> held_;
    std::vector<BniReception> receptions_;
    Decision decision_ = 0;
    bool decided_ = false;
};

void check_labels(const Graph& g, const std::map<VertexId, std::int64_t>& labels) {
    for (VertexId v : g.vertices()) {
        auto it = labels.find(v);
        if (it == labels.end()) throw Error("bni: missing label for vertex " + std::to_string(v));
        if (it->second < 1) throw Error("bni: labels must be positive");
        for (VertexId u : g.neighbors(v))
            if (labels.at(u) == it->second)
                throw Error("bni: adjacent label tie between " + std::to_string(v) + " and " +
                            std::to_string(u));
    }
}

}  // namespace

std::pair<PartialOrientation, Metrics> build_partial_orientation(
    const Graph& g, const std::map<VertexId, std::int64_t>& labels) {
    check_labels(g, labels);
    std::map<VertexId, std::unique_ptr<OrientProgram>> programs;
    std::map<VertexId, NodeProgram*> handles;
    for (VertexId v : g.vertices()) {
        auto prog = std::make_unique<OrientProgram>(v, labels.at(v));
        handles[v] = prog.get();
        programs[v] = std::move(prog);
    }
    PhaseConfig config;
    config.name = "bni/orient";
    Metrics metrics = run_phase(g, handles, config);
    PartialOrientation po;
    po.labels = labels;
    for (const auto& [v, prog] : programs) po.parents[v] = prog->parents();
    return {po, metrics};
}

BniRun bni_solve(const Graph& g, const std::map<VertexId, std::int64_t>& labels,
                 const OLocalProblem& problem) {
    BniRun run;
    auto [orientation, orient_metrics] = build_partial_orientation(g, labels);
    run.orientation = orientation;
    run.metrics.add_phase("bni/orient", orient_metrics);
    if (g.empty()) return run;

    std::map<VertexId, std::unique_ptr<SolveProgram>> programs;
    std::map<VertexId, NodeProgram*> handles;
    for (VertexId v : g.vertices()) {
        std::vector<std::int64_t> parent_rounds;
        for (VertexId u : orientation.parents.at(v)) parent_rounds.push_back(labels.at(u));
        std::set<VertexId> full_parents;
        for (VertexId u : g.neighbors(v))
            if (labels.at(u) < labels.at(v)) full_parents.insert(u);
        auto prog = std::make_unique<SolveProgram>(v, labels.at(v), std::move(parent_rounds),
                                                   std::move(full_parents), &problem);
        handles[v] = prog.get();
        programs[v] = std::move(prog);
    }
    PhaseConfig config;
    config.name = "bni/solve";
    config.strict_delivery = false;  // sleeping through a broadcast is the point here
    Metrics metrics = run_phase(g, handles, config);
    run.metrics.add_phase("bni/solve", metrics);
    for (const auto& [v, prog] : programs) {
        run.decisions[v] = prog->decision();
        run.decided_round[v] = labels.at(v);
        run.receptions[v] = prog->receptions();
    }
    return run;
}

bool relay_chains_ok(const Graph& g, const std::map<VertexId, std::int64_t>& labels,
                     const BniRun& run, std::string* why) {
    for (VertexId v : g.vertices()) {
        for (VertexId u : g.neighbors(v)) {
            if (labels.at(u) >= labels.at(v)) continue;
            // Search for a chain u -> ... -> v, each hop recorded at the
            // sender's label round with labels decreasing toward u.
            std::set<VertexId> visited;
            std::vector<VertexId> stack{v};
            bool found = false;
            while (!stack.empty() && !found) {
                VertexId x = stack.back();
                stack.pop_back();
                if (x == u) { found = true; break; }
                if (!visited.insert(x).second) continue;
                auto it = run.receptions.find(x);
                if (it == run.receptions.end()) continue;
                for (const BniReception& r : it->second) {
                    if (r.origin != u) continue;
                    if (r.round != labels.at(r.from)) continue;
                    if (labels.at(r.from) >= labels.at(x)) continue;
                    stack.push_back(r.from);
                }
            }
            if (!found) {
                if (why)
                    *why = "no relay chain for origin " + std::to_string(u) + " into " +
                           std::to_string(v);
                return false;
            }
        }
    }
    return true;
}

std::string bni_log_json(const BniRun& run) {
    nlohmann::json j;
    j["decisions"] = nlohmann::json::object();
    for (const auto& [v, d] : run.decisions) j["decisions"][std::to_string(v)] = d;
    j["decided_round"] = nlohmann::json::object();
    for (const auto& [v, r] : run.decided_round) j["decided_round"][std::to_string(v)] = r;
    j["parents"] = nlohmann::json::object();
    for (const auto& [v, ps] : run.orientation.parents) j["parents"][std::to_string(v)] = ps;
    j["receptions"] = nlohmann::json::object();
    for (const auto& [v, rs] : run.receptions) {
        nlohmann::json arr = nlohmann::json::array();
        for (const BniReception& r : rs)
            arr.push_back({{"origin", r.origin}, {"from", r.from}, {"round", r.round}});
        j["receptions"][std::to_string(v)] = std::move(arr);
    }
    return j.dump(2);
}

}  // namespace somnus
