#include "irth/commands.hpp"

#include "irth/parser.hpp"
#include "irth/solver.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>

namespace irth {

using nlohmann::json;

namespace {

std::string fmt(const char* pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), pattern, v);
    return buf;
}

std::string timestamp_line() {
    std::time_t now = std::time(nullptr);
    char buf[64];
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(buf, sizeof(buf), "# generated %Y-%m-%dT%H:%M:%SZ", &tm);
    return std::string(buf) + "\n";
}

}  // namespace

std::string residue_behaviour_name(ResidueBehaviour b) {
    switch (b) {
        case ResidueBehaviour::provided: return "provided";
        case ResidueBehaviour::avoided_correct: return "avoided_correct";
        case ResidueBehaviour::avoided_wrong: return "avoided_wrong";
        default: return "not_required";
    }
}

namespace {

ResidueBehaviour residue_behaviour_from_name(const std::string& name) {
    if (name == "provided") return ResidueBehaviour::provided;
    if (name == "avoided_correct") return ResidueBehaviour::avoided_correct;
    if (name == "avoided_wrong") return ResidueBehaviour::avoided_wrong;
    return ResidueBehaviour::not_required;
}

ErrorCategory error_category_from_name(const std::string& name) {
    for (ErrorCategory e : {ErrorCategory::calculation, ErrorCategory::heir_identification,
                            ErrorCategory::radd_detection, ErrorCategory::share_assignment,
                            ErrorCategory::residue_label_avoidance})
        if (error_category_name(e) == name) return e;
    return ErrorCategory::none;
}

}  // namespace

int cmd_solve(const std::string& input_path, std::ostream& out, std::ostream& err) {
    Dataset ds;
    try {
        ds = load_dataset(input_path);
    } catch (const DatasetError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    for (const auto& le : ds.errors)
        err << input_path << ":" << le.line << ": " << le.message << "\n";
    size_t failures = ds.errors.size();
    for (const auto& entry : ds.entries) {
        try {
            if (entry.question.empty())
                throw ParseError("no question field");
            CaseScenario scenario = parse_case(entry.question);
            SolutionRecord record = solve_case(scenario);
            json j;
            j["case_id"] = entry.case_id;
            j["question"] = entry.question;
            j["answer"] = to_json(record);
            out << j.dump() << "\n";
        } catch (const std::exception& e) {
            err << "case " << entry.case_id << ": " << e.what() << "\n";
            ++failures;
        }
    }
    return failures ? kExitCaseErrors : kExitOk;
}

int cmd_parse(const std::string& input_path, std::ostream& out, std::ostream& err) {
    Dataset ds;
    try {
        ds = load_dataset(input_path);
    } catch (const DatasetError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    for (const auto& le : ds.errors)
        err << input_path << ":" << le.line << ": " << le.message << "\n";
    size_t failures = ds.errors.size();
    for (const auto& entry : ds.entries) {
        try {
            if (entry.question.empty())
                throw ParseError("no question field");
            CaseScenario scenario = parse_case(entry.question);
            json mentions = json::array();
            for (const auto& m : scenario.mentions)
                mentions.push_back({{"وريث", m.label}, {"عدد", m.count}});
            json j;
            j["case_id"] = entry.case_id;
            j["mentions"] = mentions;
            out << j.dump() << "\n";
        } catch (const std::exception& e) {
            err << "case " << entry.case_id << ": " << e.what() << "\n";
            ++failures;
        }
    }
    return failures ? kExitCaseErrors : kExitOk;
}

int cmd_postprocess(const std::string& input_path, PipelineVariant variant,
                    std::ostream& out, std::ostream& err) {
    Dataset ds;
    try {
        ds = load_dataset(input_path);
    } catch (const DatasetError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    for (const auto& le : ds.errors)
        err << input_path << ":" << le.line << ": " << le.message << "\n";
    size_t failures = ds.errors.size();
    for (const auto& entry : ds.entries) {
        try {
            std::string raw;
            if (entry.prediction)
                raw = *entry.prediction;
            else if (entry.gold)
                raw = to_json_string(*entry.gold);
            else
                throw ExtractionError("no prediction field");
            RepairLog log;
            SolutionRecord repaired = run_pipeline(raw, variant, &log);
            json j;
            j["case_id"] = entry.case_id;
            j["answer"] = to_json(repaired);
            j["repairs"] = log.fired;
            out << j.dump() << "\n";
        } catch (const std::exception& e) {
            err << "case " << entry.case_id << ": " << e.what() << "\n";
            ++failures;
        }
    }
    return failures ? kExitCaseErrors : kExitOk;
}

namespace {

/// Prediction record for one paired case, after the selected repair
/// variant; nullopt when nothing extractable was provided.
std::optional<SolutionRecord> prediction_of(const DatasetEntry& entry,
                                            PipelineVariant variant,
                                            RepairLog* log) {
    if (entry.prediction)
        return run_pipeline(*entry.prediction, variant, log);
    if (entry.gold) {
        // Already-structured prediction files store the record like a gold
        // answer; the repair stages still apply under basic/posttasil.
        if (variant == PipelineVariant::original) return *entry.gold;
        return run_pipeline(to_json_string(*entry.gold), variant, log);
    }
    return std::nullopt;
}

}  // namespace

int cmd_eval(const std::string& gold_path, const std::string& pred_path,
             const EvalOptions& opts, std::ostream& results_out,
             std::ostream& report_out, std::ostream& err) {
    Dataset gold, pred;
    try {
        gold = load_dataset(gold_path);
        pred = load_dataset(pred_path);
    } catch (const DatasetError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    for (const auto& le : gold.errors)
        err << gold_path << ":" << le.line << ": " << le.message << "\n";
    for (const auto& le : pred.errors)
        err << pred_path << ":" << le.line << ": " << le.message << "\n";

    std::map<std::string, const DatasetEntry*> by_id;
    for (const auto& e : pred.entries) by_id[e.case_id] = &e;

    size_t failures = gold.errors.size() + pred.errors.size();
    std::vector<CaseResult> results;
    std::map<std::string, bool> paired;
    for (const auto& g : gold.entries) {
        if (!g.gold) {
            err << "case " << g.case_id << ": gold record missing\n";
            ++failures;
            continue;
        }
        auto it = by_id.find(g.case_id);
        if (it == by_id.end()) {
            err << "case " << g.case_id << ": no matching prediction\n";
            ++failures;
            continue;
        }
        paired[g.case_id] = true;
        CaseResult cr;
        cr.case_id = g.case_id;
        cr.gold_category = gold_category_of(*g.gold);
        std::optional<SolutionRecord> p;
        try {
            p = prediction_of(*it->second, opts.variant, nullptr);
        } catch (const ExtractionError& e) {
            err << "case " << g.case_id << ": " << e.what() << "\n";
        }
        if (p) {
            cr.components = mire(*p, *g.gold, opts.weights, opts.tolerance);
            cr.error = categorize_error(*p, *g.gold, cr.components);
            cr.residue = residue_behaviour(*p, *g.gold);
        } else {
            // Unextractable output scores zero everywhere.
            cr.error = ErrorCategory::heir_identification;
            cr.residue = residue_behaviour(SolutionRecord{}, *g.gold);
        }
        results.push_back(std::move(cr));
    }
    for (const auto& p : pred.entries) {
        if (!paired.count(p.case_id)) {
            err << "case " << p.case_id << ": prediction has no gold entry\n";
            ++failures;
        }
    }
    if (results.empty()) {
        err << "error: no case ids could be paired\n";
        return kExitUsage;
    }

    for (const auto& cr : results) {
        json j;
        j["case_id"] = cr.case_id;
        j["s_h"] = cr.components.s_h;
        j["s_s"] = cr.components.s_s;
        j["s_a"] = cr.components.s_a;
        j["s_f"] = cr.components.s_f;
        j["mire"] = cr.components.mire;
        j["category"] = cr.gold_category;
        j["error"] = error_category_name(cr.error);
        j["residue"] = residue_behaviour_name(cr.residue);
        results_out << j.dump() << "\n";
    }

    AnalysisReport report = aggregate(results);
    report_out << render_report(report, "variant: " + variant_name(opts.variant),
                                opts.timestamp);
    return failures ? kExitCaseErrors : kExitOk;
}

int cmd_report(const std::string& results_path, bool timestamp,
               std::ostream& out, std::ostream& err) {
    std::ifstream in(results_path, std::ios::binary);
    if (!in) {
        err << "error: cannot open " << results_path << "\n";
        return kExitUsage;
    }
    std::vector<CaseResult> results;
    std::string line;
    size_t lineno = 0;
    size_t failures = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            json j = json::parse(line);
            for (const char* key : {"s_h", "s_s", "s_a", "s_f", "mire"})
                if (!j.contains(key) || !j.at(key).is_number())
                    throw DatasetError(std::string("missing component ") + key);
            CaseResult cr;
            cr.case_id = j.value("case_id", "line-" + std::to_string(lineno));
            cr.components.s_h = j.at("s_h").get<double>();
            cr.components.s_s = j.at("s_s").get<double>();
            cr.components.s_a = j.at("s_a").get<double>();
            cr.components.s_f = j.at("s_f").get<double>();
            cr.components.mire = j.at("mire").get<double>();
            cr.gold_category = j.value("category", "simple");
            cr.error = error_category_from_name(j.value("error", "none"));
            cr.residue = residue_behaviour_from_name(j.value("residue", "not_required"));
            results.push_back(std::move(cr));
        } catch (const std::exception& e) {
            err << results_path << ":" << lineno << ": " << e.what() << "\n";
            ++failures;
        }
    }
    if (results.empty()) {
        err << "error: " << results_path << ": no usable result lines\n";
        return kExitUsage;
    }
    out << render_report(aggregate(results), results_path, timestamp);
    return failures ? kExitCaseErrors : kExitOk;
}

std::string render_report(const AnalysisReport& r, const std::string& title,
                          bool timestamp) {
    std::ostringstream out;
    if (timestamp) out << timestamp_line();
    out << "== " << title << " ==\n";
    out << "cases: " << r.cases << "\n\n";

    out << "Component means\n";
    out << "  S_h     S_s     S_a     S_f     MIR-E\n";
    out << "  " << fmt("%.3f", r.mean_h) << "   " << fmt("%.3f", r.mean_s) << "   "
        << fmt("%.3f", r.mean_a) << "   " << fmt("%.3f", r.mean_f) << "   "
        << fmt("%.3f", r.mean_mire) << "\n\n";

    out << "By adjustment category\n";
    out << "  category   n      S_h     S_s     S_a     S_f     MIR-E\n";
    for (const auto& row : r.per_category) {
        char head[64];
        std::snprintf(head, sizeof(head), "  %-9s  %-5zu", row.name.c_str(), row.n);
        out << head << "  " << fmt("%.3f", row.s_h) << "   " << fmt("%.3f", row.s_s)
            << "   " << fmt("%.3f", row.s_a) << "   " << fmt("%.3f", row.s_f) << "   "
            << fmt("%.3f", row.mire) << "\n";
    }
    out << "\n";

    out << "Cumulative pipeline success\n";
    out << "  Heirs correct            " << fmt("%5.1f%%", 100.0 * r.rate_h) << "\n";
    out << "  + Shares correct         " << fmt("%5.1f%%", 100.0 * r.rate_hs) << "\n";
    out << "  + Adjustment correct     " << fmt("%5.1f%%", 100.0 * r.rate_hsa) << "\n";
    out << "  All stages correct       " << fmt("%5.1f%%", 100.0 * r.rate_all) << "\n\n";

    out << "Residue designation\n";
    out << "  required          " << r.residue_required << "\n";
    out << "  provided          " << r.residue_provided << "\n";
    out << "  avoided           " << r.residue_avoided << "\n";
    out << "  avoided, correct  " << r.residue_avoided_correct;
    if (r.residue_avoided > 0)
        out << "  (" << fmt("%.1f%%", 100.0 * static_cast<double>(r.residue_avoided_correct) /
                                          static_cast<double>(r.residue_avoided))
            << ")";
    out << "\n\n";

    out << "Error distribution\n";
    for (const auto& [name, count] : r.error_counts)
        out << "  " << name << "  " << count << "\n";
    return out.str();
}

}  // namespace irth
