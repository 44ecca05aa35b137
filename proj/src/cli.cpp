#include "somnus/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "somnus/algorithm_a.hpp"
#include "somnus/bni.hpp"
#include "somnus/defective.hpp"
#include "somnus/dynamic.hpp"
#include "somnus/enumerate.hpp"
#include "somnus/fit.hpp"
#include "somnus/generators.hpp"
#include "somnus/graph_io.hpp"
#include "somnus/hk.hpp"
#include "somnus/kw.hpp"
#include "somnus/linial.hpp"
#include "somnus/nbhd.hpp"
#include "somnus/olocal.hpp"
#include "somnus/pipelines.hpp"

namespace somnus::cli {

namespace {

struct RunRow {
    std::string algo, family, phase;
    std::int64_t n = 0, dmax = 0, seed = 0;
    double eps = 0.0;
    std::int64_t k = 0;
    std::int64_t max_awake = 0, clock = 0, sent = 0, dropped = 0, colors = 0;
    int valid = 1;

    std::string csv() const {
        std::ostringstream out;
        out << algo << "," << family << "," << n << "," << dmax << "," << seed << "," << eps << ","
            << k << "," << phase << "," << max_awake << "," << clock << "," << sent << ","
            << dropped << "," << colors << "," << valid;
        return out.str();
    }
};

void emit_phases(std::vector<RunRow>& rows, const RunRow& base, const RunMetrics& metrics) {
    for (const auto& [name, m] : metrics.phases) {
        RunRow row = base;
        row.phase = name;
        row.max_awake = awake_complexity(m);
        row.clock = m.clock_rounds;
        row.sent = m.messages_sent;
        row.dropped = m.messages_dropped;
        row.colors = 0;
        row.valid = 1;
        rows.push_back(row);
    }
}

RunRow total_row(const RunRow& base, const RunMetrics& metrics, std::int64_t colors, bool valid) {
    RunRow row = base;
    row.phase = "total";
    row.max_awake = awake_complexity(metrics.total);
    row.clock = metrics.total.clock_rounds;
    row.sent = metrics.total.messages_sent;
    row.dropped = metrics.total.messages_dropped;
    row.colors = colors;
    row.valid = valid ? 1 : 0;
    return row;
}

}  // namespace

int cmd_gen(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        Family family = family_from_string(cfg.require("family"));
        Graph g = generate_graph(family, cfg.get_int("n", 10), cfg.get_int("dmax", 4),
                                 static_cast<std::uint64_t>(cfg.get_int("seed", 1)));
        write_graph(g, out);
        return 0;
    } catch (const std::exception& e) {
        err << "gen: " << e.what() << "\n";
        return 2;
    }
}

int cmd_run(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        std::string algo = cfg.require("algo");
        Family family = family_from_string(cfg.get("family", "random-bounded-degree"));
        std::int64_t n = cfg.get_int("n", 100);
        std::int64_t dmax = cfg.get_int("dmax", 8);
        double eps = cfg.get_double("eps", 0.5);
        std::int64_t k = cfg.get_int("k", 2);
        std::vector<std::int64_t> seeds = cfg.get_int_list("seeds", {cfg.get_int("seed", 1)});
        std::string problem_name = cfg.get("problem", "mis");
        std::string labels_source = cfg.get("labels", "ids");

        std::vector<RunRow> rows;
        bool all_valid = true;
        for (std::int64_t seed : seeds) {
            Graph g = generate_graph(family, n, dmax, static_cast<std::uint64_t>(seed));
            std::int64_t width = g.max_degree() + 1;
            RunRow base;
            base.algo = algo;
            base.family = family_name(family);
            base.n = n;
            base.dmax = dmax;
            base.seed = seed;
            base.eps = eps;
            base.k = k;

            if (algo == "kw31" || algo == "batched32" || algo == "hstar33") {
                PipelineResult r = run_coloring_pipeline(g, strategy_from_string(algo), eps);
                ColoringReport report = validate_coloring(g, r.coloring, true);
                bool valid = report.proper && report.colors_used <= width &&
                             r.coloring.palette <= width;
                emit_phases(rows, base, r.metrics);
                rows.push_back(total_row(base, r.metrics, report.colors_used, valid));
                all_valid = all_valid && valid;
            } else if (algo == "linial") {
                LinialResult r = linial_coloring(g);
                ColoringReport report = validate_coloring(g, r.coloring, true);
                bool valid =
                    report.proper && r.coloring.palette <= linial_palette_bound(g.max_degree());
                emit_phases(rows, base, r.metrics);
                rows.push_back(total_row(base, r.metrics, report.colors_used, valid));
                all_valid = all_valid && valid;
            } else if (algo == "defective") {
                DefectiveColoringResult r = defective_coloring(g, k);
                bool valid = r.measured_max_defect <= r.defect_bound &&
                             r.coloring.palette <= r.colors_bound;
                ColoringReport report = validate_coloring(g, r.coloring, true);
                emit_phases(rows, base, r.metrics);
                rows.push_back(total_row(base, r.metrics, report.colors_used, valid));
                all_valid = all_valid && valid;
            } else if (algo == "hk") {
                HkResult r = h_k(g, k);
                ColoringReport report = validate_coloring(g, r.coloring, true);
                bool valid = report.proper && report.colors_used <= width;
                emit_phases(rows, base, r.metrics);
                rows.push_back(total_row(base, r.metrics, report.colors_used, valid));
                all_valid = all_valid && valid;
            } else if (algo == "bni") {
                const OLocalProblem& problem = problem_by_name(problem_name);
                std::map<VertexId, std::int64_t> labels;
                RunMetrics metrics;
                if (labels_source == "ids") {
                    for (VertexId v : g.vertices()) labels[v] = v;
                } else if (labels_source == "linial") {
                    LinialResult lin = linial_coloring(g);
                    metrics.extend(lin.metrics);
                    for (VertexId v : g.vertices()) labels[v] = lin.coloring.at(v);
                } else {
                    throw Error("run: labels must be ids|linial");
                }
                BniRun run = bni_solve(g, labels, problem);
                metrics.extend(run.metrics);
                bool valid = problem.validate(g, run.decisions) && relay_chains_ok(g, labels, run);
                emit_phases(rows, base, metrics);
                rows.push_back(total_row(base, metrics, 0, valid));
                all_valid = all_valid && valid;
            } else if (algo == "algorithm-a") {
                const OLocalProblem& problem = problem_by_name(problem_name);
                PipelineResult colored = run_coloring_pipeline(g, Strategy::Kw31, eps);
                AlgoAResult r = algorithm_a(g, colored.coloring, problem);
                RunMetrics metrics = colored.metrics;
                metrics.add_phase("solve", r.metrics);
                bool valid = problem.validate(g, r.decisions);
                emit_phases(rows, base, metrics);
                rows.push_back(total_row(base, metrics, 0, valid));
                all_valid = all_valid && valid;
            } else {
                throw Error("run: unknown algo '" + algo +
                            "' (kw31|batched32|hstar33|linial|defective|hk|bni|algorithm-a)");
            }
        }

        std::vector<std::string> lines;
        lines.reserve(rows.size());
        for (const RunRow& row : rows) lines.push_back(row.csv());
        std::sort(lines.begin(), lines.end());
        out << "# config=" << cfg.hash() << "\n";
        out << "algo,family,n,dmax,seed,eps,k,phase,max_awake,clock_rounds,messages_sent,"
               "messages_dropped,colors_used,valid\n";
        for (const std::string& line : lines) out << line << "\n";
        return all_valid ? 0 : 1;
    } catch (const std::exception& e) {
        err << "run: " << e.what() << "\n";
        return 2;
    }
}

namespace {

struct SweepPoint {
    double dmax = 0;
    double awake = 0;
    double clock = 0;
};

std::map<std::string, std::vector<SweepPoint>> parse_run_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("report: cannot open " + path);
    std::map<std::string, std::map<double, std::vector<std::pair<double, double>>>> samples;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("algo,", 0) == 0) continue;
        std::vector<std::string> cols;
        std::istringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, ',')) cols.push_back(tok);
        if (cols.size() < 14 || cols[7] != "total") continue;
        samples[cols[0]][std::stod(cols[3])].push_back(
            {std::stod(cols[8]), std::stod(cols[9])});
    }
    std::map<std::string, std::vector<SweepPoint>> out;
    for (const auto& [algo, by_dmax] : samples) {
        for (const auto& [dmax, pts] : by_dmax) {
            SweepPoint p;
            p.dmax = dmax;
            for (const auto& [awake, clock] : pts) {
                p.awake += awake;
                p.clock += clock;
            }
            p.awake /= static_cast<double>(pts.size());
            p.clock /= static_cast<double>(pts.size());
            out[algo].push_back(p);
        }
    }
    return out;
}

struct AlgoForms {
    FitForm awake = FitForm::Log2Sq;
    FitForm clock = FitForm::Linear;
    double clock_exponent = 1.0;
};

AlgoForms forms_for(const std::string& algo, double eps) {
    if (algo == "kw31") return {FitForm::Log2Sq, FitForm::DLogD, 1.0};
    if (algo == "batched32") return {FitForm::Log2, FitForm::Power, 1.0 + eps};
    if (algo == "hstar33") return {FitForm::Log2Sq, FitForm::Linear, 1.0};
    return {FitForm::Log2Sq, FitForm::Linear, 1.0};
}

double predict(const AffineFit& fit, FitForm f, double x, double exponent) {
    return fit.a * eval_form(f, x, exponent) + fit.b;
}

}  // namespace

int cmd_report(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        double eps = cfg.get_double("eps", 0.5);
        std::map<std::string, std::vector<SweepPoint>> sweeps;
        {
            std::istringstream paths(cfg.require("in"));
            std::string path;
            while (std::getline(paths, path, ','))
                for (auto& [algo, pts] : parse_run_csv(path)) {
                    auto& dst = sweeps[algo];
                    dst.insert(dst.end(), pts.begin(), pts.end());
                }
        }
        out << "# config=" << cfg.hash() << "\n";
        std::map<std::string, AffineFit> awake_fits, clock_fits;
        std::map<std::string, AlgoForms> algo_forms;
        double dmax_top = 0;
        for (auto& [algo, pts] : sweeps) {
            std::sort(pts.begin(), pts.end(),
                      [](const SweepPoint& a, const SweepPoint& b) { return a.dmax < b.dmax; });
            if (pts.size() < 3)
                throw Error("report: need at least 3 degree points for " + algo);
            std::vector<double> xs, awake, clock;
            for (const SweepPoint& p : pts) {
                xs.push_back(p.dmax);
                awake.push_back(p.awake);
                clock.push_back(p.clock);
                dmax_top = std::max(dmax_top, p.dmax);
            }
            AlgoForms forms = forms_for(algo, eps);
            algo_forms[algo] = forms;
            LeadingFit awake_lead = fit_leading(xs, awake, forms.awake);
            AffineFit awake_aff = fit_affine(xs, awake, forms.awake);
            LeadingFit clock_lead = fit_leading(xs, clock, forms.clock, forms.clock_exponent);
            AffineFit clock_aff = fit_affine(xs, clock, forms.clock, forms.clock_exponent);
            awake_fits[algo] = awake_aff;
            clock_fits[algo] = clock_aff;
            out << std::setprecision(6) << std::fixed;
            out << algo << " points=" << pts.size() << "\n";
            out << algo << " awake ~ " << form_name(forms.awake)
                << " leading=" << awake_lead.coefficient
                << " max_rel_residual=" << awake_lead.max_rel_residual << " affine=("
                << awake_aff.a << "," << awake_aff.b << ")\n";
            out << algo << " clock ~ " << form_name(forms.clock)
                << (forms.clock == FitForm::Power
                        ? " e=" + std::to_string(forms.clock_exponent)
                        : "")
                << " leading=" << clock_lead.coefficient
                << " max_rel_residual=" << clock_lead.max_rel_residual << " affine=("
                << clock_aff.a << "," << clock_aff.b << ")\n";
            out << algo << " clock loglog exponent=" << fit_exponent(xs, clock) << "\n";
        }
        if (sweeps.count("kw31") && sweeps.count("batched32") && sweeps.count("hstar33")) {
            auto at_top = [&](const std::string& algo, bool awake) {
                const AlgoForms& f = algo_forms[algo];
                return awake ? predict(awake_fits[algo], f.awake, dmax_top, 1.0)
                             : predict(clock_fits[algo], f.clock, dmax_top, f.clock_exponent);
            };
            bool awake_order = at_top("batched32", true) <= 1.3 * at_top("kw31", true);
            double kw_vs_hstar = at_top("kw31", true) / at_top("hstar33", true);
            bool awake_close = kw_vs_hstar > 1.0 / 3.0 && kw_vs_hstar < 3.0;
            bool clock_order = at_top("hstar33", false) <= 1.3 * at_top("kw31", false);
            out << "ordering awake batched32<=kw31: " << (awake_order ? "ok" : "VIOLATION")
                << "\n";
            out << "ordering awake kw31~hstar33: " << (awake_close ? "ok" : "VIOLATION") << "\n";
            out << "ordering clock hstar33<=kw31: " << (clock_order ? "ok" : "VIOLATION") << "\n";
            out << "ratio clock batched32/kw31 at top: "
                << at_top("batched32", false) / at_top("kw31", false) << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        err << "report: " << e.what() << "\n";
        return 2;
    }
}

int cmd_dynamic(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        Family family = family_from_string(cfg.get("family", "random-bounded-degree"));
        std::int64_t n = cfg.get_int("n", 100);
        std::int64_t dmax = cfg.get_int("dmax", 8);
        std::int64_t seed = cfg.get_int("seed", 1);
        std::int64_t t = cfg.get_int("t", 4);
        std::int64_t batch_count = cfg.get_int("batches", 10);
        Strategy strategy = strategy_from_string(cfg.get("strategy", "kw31"));
        const OLocalProblem& problem = problem_by_name(cfg.get("problem", "mis"));

        Graph g = generate_graph(family, n, dmax, static_cast<std::uint64_t>(seed));
        std::vector<ChangeBatch> batches;
        Graph work = g;
        for (std::int64_t i = 0; i < batch_count; ++i) {
            ChangeBatch b = random_batch(work, t, dmax, static_cast<std::uint64_t>(seed + 1000 + i));
            for (const ChangeEvent& e : b.events) apply_event(work, e);
            batches.push_back(std::move(b));
        }
        DynamicReport report = run_dynamic_experiment(g, problem, strategy, t, batches);
        out << "# config=" << cfg.hash() << "\n";
        write_dynamic_csv(report, out);
        for (const DynamicReportRow& row : report.rows)
            if (!row.valid) return 1;
        return 0;
    } catch (const std::exception& e) {
        err << "dynamic: " << e.what() << "\n";
        return 2;
    }
}

int cmd_verify(std::ostream& out, std::int64_t max_n) {
    bool all_ok = true;
    auto suite = [&](const std::string& name, bool ok) {
        out << (ok ? "ok   " : "FAIL ") << name << "\n";
        all_ok = all_ok && ok;
    };

    // Interval-tree arithmetic: LCA strictly between the decision rounds.
    {
        bool ok = true;
        for (std::int64_t d : {4, 16, 256}) {
            for (std::int64_t a = 1; a <= d && ok; ++a)
                for (std::int64_t b = a + 1; b <= d && ok; ++b) {
                    std::int64_t lca = interval_lca_round(a, b, d);
                    if (!(2 * a - 1 < lca && lca < 2 * b - 1)) ok = false;
                }
        }
        suite("interval-lca", ok);
    }

    // Exhaustive neighborhood-independence cross-check of the two oracles.
    {
        bool ok = true;
        for (int n = 1; n <= static_cast<int>(max_n) && ok; ++n)
            for (const SmallGraph& sg : enumerate_graphs(n)) {
                Graph g = to_graph(sg);
                if (neighborhood_independence(g) != naive_neighborhood_independence(g)) {
                    ok = false;
                    break;
                }
            }
        suite("k-oracle", ok);
    }

    // Engine outputs equal the sequential oracle on every small connected graph.
    {
        bool ok = true;
        for (int n = 1; n <= static_cast<int>(max_n) && ok; ++n) {
            for (const SmallGraph& sg : enumerate_connected_graphs(n)) {
                Graph g = to_graph(sg);
                Coloring ids = coloring_from_ids(g);
                std::map<VertexId, std::int64_t> labels;
                for (VertexId v : g.vertices()) labels[v] = v;
                for (const std::string& pname : {"mis", "greedy"}) {
                    const OLocalProblem& problem = problem_by_name(pname);
                    auto expected = sequential_solve(g, labels, problem);
                    if (algorithm_a(g, ids, problem).decisions != expected) { ok = false; break; }
                    BniRun run = bni_solve(g, labels, problem);
                    if (run.decisions != expected) { ok = false; break; }
                    if (!relay_chains_ok(g, labels, run)) { ok = false; break; }
                }
                if (!ok) break;
            }
        }
        suite("oracle-equivalence", ok);
    }

    // Pipelines keep palettes within Delta+1 on a small generated corpus.
    {
        bool ok = true;
        for (std::int64_t dmax : {4, 8}) {
            Graph g = generate_graph(Family::RandomBoundedDegree, 60, dmax, 7);
            std::int64_t width = g.max_degree() + 1;
            for (Strategy s : {Strategy::Kw31, Strategy::Batched32, Strategy::Hstar33}) {
                PipelineResult r = run_coloring_pipeline(g, s);
                ColoringReport report = validate_coloring(g, r.coloring, true);
                if (!report.proper || report.colors_used > width) ok = false;
                if (max_defect(coloring_defect(g, r.coloring)) != 0) ok = false;
            }
        }
        suite("pipelines", ok);
    }

    // Defective coloring delivers its promised defect and palette bounds.
    {
        bool ok = true;
        Graph g = generate_graph(Family::RandomBoundedDegree, 120, 8, 3);
        for (std::int64_t p : {2, 3}) {
            DefectiveColoringResult r = defective_coloring(g, p);
            if (r.measured_max_defect > (g.max_degree() + p - 1) / p) ok = false;
            if (r.coloring.palette > r.colors_bound) ok = false;
        }
        suite("defective", ok);
    }

    out << (all_ok ? "verify: PASS" : "verify: FAIL") << "\n";
    return all_ok ? 0 : 1;
}

}  // namespace somnus::cli
