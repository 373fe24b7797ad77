#pragma once

#include "irth/fraction.hpp"

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

namespace irth {

// Canonical residue designation plus the variant spelling the repair
// pipeline folds into it.
inline const std::string kResiduePhrase = "باقي التركة";
inline const std::string kResidueVariant = "باقى التركة";

// Adjustment labels.
inline const std::string kAwlLabel = "عول";
inline const std::string kRaddLabel = "رد";
inline const std::string kNoneLabel = "لا";

enum class Adjustment { awl, radd, none };

std::optional<Adjustment> parse_adjustment(const std::string& label);
const std::string& adjustment_label(Adjustment a);

struct RelativeMention {
    std::string label;      // canonical for solver output; raw for model records
    long long count = 1;

    bool operator==(const RelativeMention&) const = default;
};

/// A prescribed share: an exact fraction, the residue designation, or (for
/// model records only) an unparseable raw string.
struct ShareValue {
    enum class Kind { fraction, residue, invalid };

    Kind kind = Kind::invalid;
    Fraction fraction;      // meaningful when kind == fraction
    std::string raw;        // original text when kind == invalid

    static ShareValue of(Fraction f) { return {Kind::fraction, std::move(f), {}}; }
    static ShareValue residue() { return {Kind::residue, {}, {}}; }
    static ShareValue bad(std::string r) { return {Kind::invalid, {}, std::move(r)}; }

    /// Accepts "n/d", a bare integer, or either residue spelling.
    static ShareValue parse(const std::string& text);

    bool is_fraction() const { return kind == Kind::fraction; }
    bool is_residue() const { return kind == Kind::residue; }

    std::string str() const;

    bool operator==(const ShareValue& o) const {
        if (kind != o.kind) return false;
        if (kind == Kind::fraction) return fraction == o.fraction;
        if (kind == Kind::invalid) return raw == o.raw;
        return true;
    }
};

struct ShareEntry {
    RelativeMention who;
    ShareValue share;

    bool operator==(const ShareEntry&) const = default;
};

struct DistributionEntry {
    std::string label;
    long long count = 1;
    std::optional<Fraction> per_individual;   // exact per-individual allocation
    std::string percent;                      // rendered 2-decimal percentage

    /// Percentage as a double, from the rendered text or the fraction.
    std::optional<double> percent_value() const;

    bool operator==(const DistributionEntry&) const = default;
};

struct PostTasil {
    long long total_shares = 0;
    std::vector<DistributionEntry> distribution;

    bool operator==(const PostTasil&) const = default;
};

/// The five-field structured answer. Field content is kept as produced
/// (solver output is canonical; extracted model output may carry variant
/// spellings until the repair pipeline runs).
struct SolutionRecord {
    std::vector<RelativeMention> heirs;
    std::vector<RelativeMention> blocked;
    std::vector<ShareEntry> shares;
    std::string awl_or_radd;
    PostTasil post_tasil;
    std::string extra_json;   // unknown top-level keys, preserved on round-trip

    bool operator==(const SolutionRecord&) const = default;
};

nlohmann::json to_json(const SolutionRecord& r);
SolutionRecord record_from_json(const nlohmann::json& j);

std::string to_json_string(const SolutionRecord& r);
SolutionRecord record_from_json_string(const std::string& text);

}  // namespace irth
