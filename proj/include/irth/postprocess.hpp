#pragma once

#include "irth/record.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace irth {

enum class PipelineVariant { original, basic, post_tasil };

std::optional<PipelineVariant> parse_variant(const std::string& name);
std::string variant_name(PipelineVariant v);

class ExtractionError : public std::runtime_error {
public:
    explicit ExtractionError(const std::string& what) : std::runtime_error(what) {}
};

/// Which repair stages actually changed the record, per case.
struct RepairLog {
    std::vector<std::string> fired;
    void note(std::string stage) { fired.push_back(std::move(stage)); }
};

/// Strips reasoning tags, locates the first balanced top-level JSON object,
/// and validates the five required keys. Throws ExtractionError when no
/// object parses or keys are missing (naming them).
SolutionRecord extract_record(const std::string& raw);

/// Tatweel removal on labels and the residue spelling correction. Nothing
/// else is touched.
SolutionRecord normalize_typography(SolutionRecord record, RepairLog* log = nullptr);

/// Removes from blocked any category also present in heirs (the heirs list
/// wins), and merges duplicate entries within each list.
SolutionRecord dedupe_blocked(SolutionRecord record, RepairLog* log = nullptr);

/// Replaces an unrecognised awl_or_radd string with the value inferred from
/// the record's own share sum. Valid labels are never touched.
SolutionRecord normalize_adjustment_label(SolutionRecord record, RepairLog* log = nullptr);

/// Recomputes post_tasil only when the adjustment label is عول or رد and
/// the distribution still carries the unadjusted share fractions.
SolutionRecord recalc_post_tasil(SolutionRecord record, RepairLog* log = nullptr);

/// original = extract; basic = extract + typography + dedupe + label
/// normalisation; post_tasil = basic + distribution recalculation.
SolutionRecord run_pipeline(const std::string& raw, PipelineVariant variant,
                            RepairLog* log = nullptr);

}  // namespace irth
