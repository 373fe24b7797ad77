#pragma once

#include "irth/record.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace irth {

/// Component weights. Defaults are the task's: heirs, shares and final
/// allocation at 0.30 each, adjustment at 0.10.
struct MireWeights {
    double alpha_h = 0.30;
    double alpha_s = 0.30;
    double alpha_a = 0.10;
    double alpha_f = 0.30;
};

struct MireComponents {
    double s_h = 0.0;
    double s_s = 0.0;
    double s_a = 0.0;
    double s_f = 0.0;
    double mire = 0.0;
};

/// Final-allocation percentages match within this many percentage points.
inline constexpr double kPercentTolerance = 0.05;

/// Credit for writing the numerically correct explicit fraction where the
/// residue designation is expected (see score_shares).
inline constexpr double kResiduePartialCredit = 0.955;

/// Heirs-and-blocking score: F1 over the role-labeled category decisions of
/// both lists, multiplied by count accuracy over the matched entries.
double score_heirs(const SolutionRecord& pred, const SolutionRecord& gold);

/// Share-assignment score: mean per-entry match over the gold heirs.
/// Fractions compare by exact reduced equality; an explicit fraction equal
/// to the residue value where the residue designation is expected earns
/// kResiduePartialCredit.
double score_shares(const SolutionRecord& pred, const SolutionRecord& gold);

/// Adjustment is scored conditionally: non-zero only when s_h and s_s are
/// both perfect and the labels agree.
double score_adjustment(const SolutionRecord& pred, const SolutionRecord& gold,
                        double s_h, double s_s);

/// Fraction of gold distribution entries whose predicted percentage lies
/// within tolerance. Missing heirs score zero for their entries.
double score_final(const SolutionRecord& pred, const SolutionRecord& gold,
                   double tolerance = kPercentTolerance);

MireComponents mire(const SolutionRecord& pred, const SolutionRecord& gold,
                    const MireWeights& weights = {},
                    double tolerance = kPercentTolerance);

double weighted_score(const MireComponents& c, const MireWeights& weights);

enum class ErrorCategory {
    none,
    calculation,
    heir_identification,
    radd_detection,
    share_assignment,
    residue_label_avoidance,
};

std::string error_category_name(ErrorCategory e);

ErrorCategory categorize_error(const SolutionRecord& pred, const SolutionRecord& gold,
                               const MireComponents& components);

enum class ResidueBehaviour { not_required, provided, avoided_correct, avoided_wrong };

ResidueBehaviour residue_behaviour(const SolutionRecord& pred, const SolutionRecord& gold);

struct CaseResult {
    std::string case_id;
    MireComponents components;
    std::string gold_category;   // "simple", "عول" or "رد"
    ErrorCategory error = ErrorCategory::none;
    ResidueBehaviour residue = ResidueBehaviour::not_required;
};

struct CategoryRow {
    std::string name;
    size_t n = 0;
    double mire = 0, s_h = 0, s_s = 0, s_a = 0, s_f = 0;
};

struct AnalysisReport {
    size_t cases = 0;
    double mean_mire = 0, mean_h = 0, mean_s = 0, mean_a = 0, mean_f = 0;
    std::vector<CategoryRow> per_category;
    // Cumulative pipeline success: P(s_h=1), P(s_h=s_s=1), P(+s_a=1), P(all=1).
    double rate_h = 0, rate_hs = 0, rate_hsa = 0, rate_all = 0;
    size_t residue_required = 0, residue_provided = 0;
    size_t residue_avoided = 0, residue_avoided_correct = 0;
    std::map<std::string, size_t> error_counts;
};

class AggregationError : public std::runtime_error {
public:
    explicit AggregationError(const std::string& what) : std::runtime_error(what) {}
};

AnalysisReport aggregate(const std::vector<CaseResult>& results);

/// Adjustment category of a gold record, for the per-category breakdown.
std::string gold_category_of(const SolutionRecord& gold);

}  // namespace irth
