#include "irth/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <vector>

namespace {

// Output stream selection: "-" or empty means stdout.
struct Sink {
    std::ofstream file;
    std::ostream& open(const std::string& path) {
        if (path.empty() || path == "-") return std::cout;
        file.open(path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot write " << path << "\n";
            std::exit(irth::kExitUsage);
        }
        return file;
    }
};

irth::PipelineVariant variant_or_die(const std::string& name) {
    auto v = irth::parse_variant(name);
    if (!v) {
        std::cerr << "error: unknown variant '" << name
                  << "' (expected original, basic or posttasil)\n";
        std::exit(irth::kExitUsage);
    }
    return *v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arabic inheritance-case solver, repair pipeline and scorer"};
    app.require_subcommand(1);

    std::string input, output = "-", variant = "original";
    std::string gold_path, pred_path, results_path = "-";
    std::vector<double> weights;
    double tolerance = irth::kPercentTolerance;
    bool no_timestamp = false;

    auto* solve = app.add_subcommand("solve", "Solve question records");
    solve->add_option("input", input, "newline-delimited question file")->required();
    solve->add_option("-o,--output", output, "answer file (default stdout)");

    auto* parse = app.add_subcommand("parse", "Parse questions into relative mentions");
    parse->add_option("input", input, "newline-delimited question file")->required();
    parse->add_option("-o,--output", output, "mentions file (default stdout)");

    auto* post = app.add_subcommand("postprocess", "Repair raw model outputs");
    post->add_option("input", input, "newline-delimited prediction file")->required();
    post->add_option("-o,--output", output, "repaired-record file (default stdout)");
    post->add_option("--variant", variant, "original | basic | posttasil");

    auto* eval = app.add_subcommand("eval", "Score predictions against gold");
    eval->add_option("gold", gold_path, "gold answer file")->required();
    eval->add_option("pred", pred_path, "prediction file")->required();
    eval->add_option("--variant", variant, "original | basic | posttasil");
    eval->add_option("--results", results_path, "per-case results file (default stdout)");
    eval->add_option("-o,--output", output, "report file (default stdout)");
    eval->add_option("--weights", weights, "component weights: h s a f")
        ->expected(4);
    eval->add_option("--tolerance", tolerance, "percentage-point tolerance");
    eval->add_flag("--no-timestamp", no_timestamp, "omit the generation header");

    auto* report = app.add_subcommand("report", "Render tables from an eval results file");
    report->add_option("results", results_path, "results file from eval")->required();
    report->add_option("-o,--output", output, "report file (default stdout)");
    report->add_flag("--no-timestamp", no_timestamp, "omit the generation header");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? irth::kExitOk : irth::kExitUsage;
    }

    Sink out_sink, results_sink;
    if (solve->parsed())
        return irth::cmd_solve(input, out_sink.open(output), std::cerr);
    if (parse->parsed())
        return irth::cmd_parse(input, out_sink.open(output), std::cerr);
    if (post->parsed())
        return irth::cmd_postprocess(input, variant_or_die(variant),
                                     out_sink.open(output), std::cerr);
    if (eval->parsed()) {
        irth::EvalOptions opts;
        opts.variant = variant_or_die(variant);
        if (!weights.empty())
            opts.weights = {weights[0], weights[1], weights[2], weights[3]};
        opts.tolerance = tolerance;
        opts.timestamp = !no_timestamp;
        return irth::cmd_eval(gold_path, pred_path, opts,
                              results_sink.open(results_path),
                              out_sink.open(output), std::cerr);
    }
    return irth::cmd_report(results_path, !no_timestamp, out_sink.open(output),
                            std::cerr);
}
