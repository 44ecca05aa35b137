#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "somnus/cli.hpp"
#include "somnus/config.hpp"

namespace {

// Flags override keys loaded from --config.
struct CommonArgs {
    std::string config_path;
    std::string out_path;
    std::map<std::string, std::string> overrides;

    somnus::ExperimentConfig build() const {
        somnus::ExperimentConfig cfg;
        if (!config_path.empty()) cfg = somnus::ExperimentConfig::parse_file(config_path);
        for (const auto& [k, v] : overrides) cfg.set(k, v);
        return cfg;
    }
};

int with_output(const std::string& path, const std::function<int(std::ostream&)>& body) {
    if (path.empty()) return body(std::cout);
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot open for writing: " << path << "\n";
        return 2;
    }
    return body(out);
}

void add_override(CLI::App* cmd, CommonArgs& args, const std::string& flag,
                  const std::string& key, const std::string& help) {
    cmd->add_option_function<std::string>(
        flag, [&args, key](const std::string& v) { args.overrides[key] = v; }, help);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"somnus: sleeping-model round simulator and algorithm harness"};
    app.require_subcommand(1);

    CommonArgs gen_args, run_args, report_args, dynamic_args;
    std::int64_t verify_max_n = 8;

    auto* gen = app.add_subcommand("gen", "generate a graph file");
    gen->add_option("--config", gen_args.config_path, "config file (key = value lines)");
    gen->add_option("--out", gen_args.out_path, "output path (default stdout)");
    add_override(gen, gen_args, "--family", "family", "graph family");
    add_override(gen, gen_args, "--n", "n", "vertex count");
    add_override(gen, gen_args, "--dmax", "dmax", "degree cap");
    add_override(gen, gen_args, "--seed", "seed", "generator seed");

    auto* run = app.add_subcommand("run", "run an algorithm over seeds, emit CSV rows");
    run->add_option("--config", run_args.config_path, "config file (key = value lines)");
    run->add_option("--out", run_args.out_path, "output path (default stdout)");
    add_override(run, run_args, "--algo", "algo",
                 "kw31|batched32|hstar33|linial|defective|hk|bni|algorithm-a");
    add_override(run, run_args, "--family", "family", "graph family");
    add_override(run, run_args, "--n", "n", "vertex count");
    add_override(run, run_args, "--dmax", "dmax", "degree cap");
    add_override(run, run_args, "--seed", "seed", "single seed");
    add_override(run, run_args, "--seeds", "seeds", "comma-separated seeds");
    add_override(run, run_args, "--eps", "eps", "batched reduction epsilon in (0,1]");
    add_override(run, run_args, "--k", "k", "h_k level / defective p");
    add_override(run, run_args, "--problem", "problem", "mis|greedy");
    add_override(run, run_args, "--labels", "labels", "bni label source: ids|linial");
    add_override(run, run_args, "--strict", "strict", "strict delivery (1|0)");

    auto* report = app.add_subcommand("report", "fit trade-off growth curves from run CSVs");
    report->add_option("--config", report_args.config_path, "config file");
    report->add_option("--out", report_args.out_path, "output path (default stdout)");
    add_override(report, report_args, "--in", "in", "comma-separated run CSV paths");
    add_override(report, report_args, "--eps", "eps", "epsilon the batched sweep used");

    auto* verify = app.add_subcommand("verify", "run the exhaustive oracle suites");
    verify->add_option("--max-n", verify_max_n, "largest exhaustive graph size (default 8)");

    auto* dynamic = app.add_subcommand("dynamic", "dynamic update experiment, emit CSV");
    dynamic->add_option("--config", dynamic_args.config_path, "config file");
    dynamic->add_option("--out", dynamic_args.out_path, "output path (default stdout)");
    add_override(dynamic, dynamic_args, "--family", "family", "graph family");
    add_override(dynamic, dynamic_args, "--n", "n", "vertex count");
    add_override(dynamic, dynamic_args, "--dmax", "dmax", "degree cap");
    add_override(dynamic, dynamic_args, "--seed", "seed", "seed");
    add_override(dynamic, dynamic_args, "--t", "t", "changes per batch");
    add_override(dynamic, dynamic_args, "--batches", "batches", "number of batches");
    add_override(dynamic, dynamic_args, "--strategy", "strategy", "kw31|batched32|hstar33");
    add_override(dynamic, dynamic_args, "--problem", "problem", "mis|greedy");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return with_output(gen_args.out_path, [&](std::ostream& out) {
                return somnus::cli::cmd_gen(gen_args.build(), out, std::cerr);
            });
        if (run->parsed())
            return with_output(run_args.out_path, [&](std::ostream& out) {
                return somnus::cli::cmd_run(run_args.build(), out, std::cerr);
            });
        if (report->parsed())
            return with_output(report_args.out_path, [&](std::ostream& out) {
                return somnus::cli::cmd_report(report_args.build(), out, std::cerr);
            });
        if (verify->parsed()) return somnus::cli::cmd_verify(std::cout, verify_max_n);
        if (dynamic->parsed())
            return with_output(dynamic_args.out_path, [&](std::ostream& out) {
                return somnus::cli::cmd_dynamic(dynamic_args.build(), out, std::cerr);
            });
    } catch (const std::exception& e) {
        std::cerr << "somnus: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
