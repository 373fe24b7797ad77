#pragma once

#include "irth/dataset.hpp"
#include "irth/mire.hpp"
#include "irth/postprocess.hpp"

#include <iosfwd>
#include <string>

namespace irth {

// Exit statuses shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCaseErrors = 1;
inline constexpr int kExitUsage = 2;

struct EvalOptions {
    PipelineVariant variant = PipelineVariant::original;
    MireWeights weights;
    double tolerance = kPercentTolerance;
    bool timestamp = true;
};

/// Solves every question in the input file, one answer record per line.
/// Per-case failures are logged to err with their case id; processing
/// continues and the exit status reports them.
int cmd_solve(const std::string& input_path, std::ostream& out, std::ostream& err);

/// Parses questions only, emitting the recognised relative mentions.
int cmd_parse(const std::string& input_path, std::ostream& out, std::ostream& err);

/// Runs the repair pipeline over raw predictions; emits the repaired record
/// and the list of repair stages that fired for each case.
int cmd_postprocess(const std::string& input_path, PipelineVariant variant,
                    std::ostream& out, std::ostream& err);

/// Scores predictions against gold with MIR-E after applying the selected
/// pipeline variant. Per-case results go to results_out (one line each);
/// the rendered aggregate tables go to report_out.
int cmd_eval(const std::string& gold_path, const std::string& pred_path,
             const EvalOptions& opts, std::ostream& results_out,
             std::ostream& report_out, std::ostream& err);

/// Re-renders the aggregate tables from a results file written by cmd_eval.
int cmd_report(const std::string& results_path, bool timestamp,
               std::ostream& out, std::ostream& err);

std::string render_report(const AnalysisReport& report, const std::string& title,
                          bool timestamp);

std::string residue_behaviour_name(ResidueBehaviour b);

}  // namespace irth
