#include "irth/postprocess.hpp"

#include "irth/arabic.hpp"
#include "irth/solver.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>

namespace irth {

using nlohmann::json;

std::optional<PipelineVariant> parse_variant(const std::string& name) {
    if (name == "original") return PipelineVariant::original;
    if (name == "basic") return PipelineVariant::basic;
    if (name == "posttasil" || name == "post_tasil") return PipelineVariant::post_tasil;
    return std::nullopt;
}

std::string variant_name(PipelineVariant v) {
    switch (v) {
        case PipelineVariant::original: return "original";
        case PipelineVariant::basic: return "basic";
        default: return "posttasil";
    }
}

namespace {

std::string drop_think_tags(const std::string& raw) {
    std::string out;
    size_t pos = 0;
    while (pos < raw.size()) {
        size_t open = raw.find("<think>", pos);
        if (open == std::string::npos) {
            out += raw.substr(pos);
            break;
        }
        out += raw.substr(pos, open - pos);
        size_t close = raw.find("</think>", open);
        if (close == std::string::npos) break;   // unterminated tag: drop the tail
        pos = close + std::string("</think>").size();
    }
    return out;
}

// First balanced top-level object scanning left to right, string-aware.
std::optional<std::string> first_json_object(const std::string& text) {
    size_t start = 0;
    while ((start = text.find('{', start)) != std::string::npos) {
        int depth = 0;
        bool in_string = false;
        bool escaped = false;
        for (size_t i = start; i < text.size(); ++i) {
            char c = text[i];
            if (in_string) {
                if (escaped)
                    escaped = false;
                else if (c == '\\')
                    escaped = true;
                else if (c == '"')
                    in_string = false;
                continue;
            }
            if (c == '"') in_string = true;
            else if (c == '{') ++depth;
            else if (c == '}') {
                if (--depth == 0) {
                    std::string candidate = text.substr(start, i - start + 1);
                    if (json::accept(candidate)) return candidate;
                    break;
                }
            }
        }
        ++start;
    }
    return std::nullopt;
}

}  // namespace

SolutionRecord extract_record(const std::string& raw) {
    std::string cleaned = drop_think_tags(raw);
    auto object = first_json_object(cleaned);
    if (!object)
        throw ExtractionError("no parseable JSON object in output");
    json j = json::parse(*object);
    std::string missing;
    for (const char* key : {"heirs", "blocked", "shares", "awl_or_radd", "post_tasil"}) {
        if (!j.contains(key)) {
            if (!missing.empty()) missing += ", ";
            missing += key;
        }
    }
    if (!missing.empty())
        throw ExtractionError("missing required keys: " + missing);
    return record_from_json(j);
}

SolutionRecord normalize_typography(SolutionRecord record, RepairLog* log) {
    bool changed = false;
    auto fix_label = [&](std::string& label) {
        std::string fixed = trim(strip_tatweel(label));
        if (fixed != label) {
            label = fixed;
            changed = true;
        }
    };
    for (auto& m : record.heirs) fix_label(m.label);
    for (auto& m : record.blocked) fix_label(m.label);
    for (auto& s : record.shares) fix_label(s.who.label);
    for (auto& d : record.post_tasil.distribution) fix_label(d.label);
    {
        std::string fixed = trim(strip_tatweel(record.awl_or_radd));
        if (fixed != record.awl_or_radd) {
            record.awl_or_radd = fixed;
            changed = true;
        }
    }
    if (changed && log) log->note("typography");
    return record;
}

namespace {

std::vector<RelativeMention> merge_by_key(const std::vector<RelativeMention>& in,
                                          bool* merged) {
    std::vector<RelativeMention> out;
    std::map<std::string, size_t> seen;
    for (const auto& m : in) {
        std::string key = match_key(m.label);
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen[key] = out.size();
            out.push_back(m);
        } else {
            out[it->second].count += m.count;
            if (merged) *merged = true;
        }
    }
    return out;
}

}  // namespace

SolutionRecord dedupe_blocked(SolutionRecord record, RepairLog* log) {
    bool merged = false;
    record.heirs = merge_by_key(record.heirs, &merged);
    record.blocked = merge_by_key(record.blocked, &merged);
    if (merged && log) log->note("merge_duplicates");

    std::map<std::string, bool> heir_keys;
    for (const auto& m : record.heirs) heir_keys[match_key(m.label)] = true;
    size_t before = record.blocked.size();
    std::erase_if(record.blocked, [&](const RelativeMention& m) {
        return heir_keys.count(match_key(m.label)) > 0;
    });
    if (record.blocked.size() != before && log) log->note("dedupe_blocked");
    return record;
}

SolutionRecord normalize_adjustment_label(SolutionRecord record, RepairLog* log) {
    if (parse_adjustment(record.awl_or_radd)) return record;   // valid labels stand
    bool parseable = std::all_of(record.shares.begin(), record.shares.end(),
                                 [](const ShareEntry& s) {
                                     return s.share.kind != ShareValue::Kind::invalid;
                                 });
    if (parseable) {
        record.awl_or_radd = adjustment_label(detect_adjustment(record.shares));
        if (log) log->note("adjustment_label");
    } else {
        record.awl_or_radd = kNoneLabel;
        if (log) log->note("adjustment_label_fallback");
    }
    return record;
}

SolutionRecord recalc_post_tasil(SolutionRecord record, RepairLog* log) {
    auto adj = parse_adjustment(record.awl_or_radd);
    if (!adj || *adj == Adjustment::none) return record;

    // Trust condition: every explicit share fraction still appears unchanged
    // in the distribution (either collectively or per individual), meaning
    // the model skipped the adjustment step.
    if (record.shares.empty()) return record;
    for (const auto& s : record.shares) {
        if (!s.share.is_fraction()) return record;
        const Fraction& collective = s.share.fraction;
        std::string key = match_key(s.who.label);
        bool matched = false;
        for (const auto& d : record.post_tasil.distribution) {
            if (match_key(d.label) != key || !d.per_individual) continue;
            Fraction per = collective;
            if (s.who.count > 1) per = collective / Fraction(s.who.count);
            if (*d.per_individual == collective || *d.per_individual == per) {
                matched = true;
                break;
            }
        }
        if (!matched) return record;
    }

    try {
        record.post_tasil = compute_tasil(record.shares, *adj);
        if (log) log->note("recalc_post_tasil");
    } catch (const std::exception&) {
        // Shares that cannot be normalized are left as the model wrote them.
    }
    return record;
}

SolutionRecord run_pipeline(const std::string& raw, PipelineVariant variant,
                            RepairLog* log) {
    SolutionRecord record = extract_record(raw);
    if (variant == PipelineVariant::original) return record;
    record = normalize_typography(std::move(record), log);
    record = dedupe_blocked(std::move(record), log);
    record = normalize_adjustment_label(std::move(record), log);
    if (variant == PipelineVariant::post_tasil)
        record = recalc_post_tasil(std::move(record), log);
    return record;
}

}  // namespace irth
