#include "irth/mire.hpp"

#include "irth/arabic.hpp"
#include "irth/solver.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace irth {

namespace {

// role-labeled decision key: (heir|blocked, normalized category label)
using Decision = std::pair<int, std::string>;

std::map<Decision, long long> decisions_of(const SolutionRecord& r) {
    std::map<Decision, long long> out;
    for (const auto& m : r.heirs) out[{0, match_key(m.label)}] += m.count;
    for (const auto& m : r.blocked) out[{1, match_key(m.label)}] += m.count;
    return out;
}

struct GoldShare {
    ShareValue share;   // collective
    long long count = 1;
};

std::map<std::string, GoldShare> share_map(const SolutionRecord& r) {
    std::map<std::string, GoldShare> out;
    for (const auto& s : r.shares) {
        std::string key = match_key(s.who.label);
        if (!out.count(key)) out[key] = {s.share, s.who.count};
    }
    return out;
}

// 1 - sum of the gold record's explicit share fractions: the value a
// calculator would write in place of the residue designation.
std::optional<Fraction> gold_residue_value(const SolutionRecord& gold) {
    Fraction total;
    bool has_residue = false;
    for (const auto& s : gold.shares) {
        if (s.share.is_fraction())
            total += s.share.fraction;
        else if (s.share.is_residue())
            has_residue = true;
        else
            return std::nullopt;
    }
    if (!has_residue || total > Fraction(1)) return std::nullopt;
    return Fraction(1) - total;
}

double entry_score(const ShareValue& pred, const GoldShare& gold,
                   const std::optional<Fraction>& residue_value) {
    if (gold.share.is_fraction()) {
        return pred.is_fraction() && pred.fraction == gold.share.fraction ? 1.0 : 0.0;
    }
    if (gold.share.is_residue()) {
        if (pred.is_residue()) return 1.0;
        if (pred.is_fraction() && residue_value) {
            Fraction per = *residue_value;
            if (gold.count > 1) per = *residue_value / Fraction(gold.count);
            if (pred.fraction == *residue_value || pred.fraction == per)
                return kResiduePartialCredit;
        }
        return 0.0;
    }
    return 0.0;
}

}  // namespace

double score_heirs(const SolutionRecord& pred, const SolutionRecord& gold) {
    auto p = decisions_of(pred);
    auto g = decisions_of(gold);
    if (g.empty() && p.empty()) return 1.0;
    size_t matched = 0, counts_ok = 0;
    for (const auto& [d, count] : g) {
        auto it = p.find(d);
        if (it == p.end()) continue;
        ++matched;
        if (it->second == count) ++counts_ok;
    }
    if (matched == 0) return 0.0;
    double precision = static_cast<double>(matched) / static_cast<double>(p.size());
    double recall = static_cast<double>(matched) / static_cast<double>(g.size());
    double f1 = 2.0 * precision * recall / (precision + recall);
    double count_acc = static_cast<double>(counts_ok) / static_cast<double>(matched);
    return f1 * count_acc;
}

double score_shares(const SolutionRecord& pred, const SolutionRecord& gold) {
    auto g = share_map(gold);
    if (g.empty()) return share_map(pred).empty() ? 1.0 : 0.0;
    auto p = share_map(pred);
    auto residue_value = gold_residue_value(gold);
    double total = 0.0;
    for (const auto& [key, gs] : g) {
        auto it = p.find(key);
        if (it == p.end()) continue;
        total += entry_score(it->second.share, gs, residue_value);
    }
    return total / static_cast<double>(g.size());
}

double score_adjustment(const SolutionRecord& pred, const SolutionRecord& gold,
                        double s_h, double s_s) {
    if (s_h != 1.0 || s_s != 1.0) return 0.0;
    auto pa = parse_adjustment(pred.awl_or_radd);
    auto ga = parse_adjustment(gold.awl_or_radd);
    return pa && ga && *pa == *ga ? 1.0 : 0.0;
}

double score_final(const SolutionRecord& pred, const SolutionRecord& gold,
                   double tolerance) {
    const auto& gd = gold.post_tasil.distribution;
    if (gd.empty()) return pred.post_tasil.distribution.empty() ? 1.0 : 0.0;
    size_t within = 0;
    for (const auto& ge : gd) {
        auto gv = ge.percent_value();
        if (!gv) continue;
        for (const auto& pe : pred.post_tasil.distribution) {
            if (match_key(pe.label) != match_key(ge.label)) continue;
            auto pv = pe.percent_value();
            if (pv && std::abs(*pv - *gv) <= tolerance) ++within;
            break;
        }
    }
    return static_cast<double>(within) / static_cast<double>(gd.size());
}

double weighted_score(const MireComponents& c, const MireWeights& w) {
    return w.alpha_h * c.s_h + w.alpha_s * c.s_s + w.alpha_a * c.s_a + w.alpha_f * c.s_f;
}

MireComponents mire(const SolutionRecord& pred, const SolutionRecord& gold,
                    const MireWeights& weights, double tolerance) {
    MireComponents c;
    c.s_h = score_heirs(pred, gold);
    c.s_s = score_shares(pred, gold);
    c.s_a = score_adjustment(pred, gold, c.s_h, c.s_s);
    c.s_f = score_final(pred, gold, tolerance);
    c.mire = weighted_score(c, weights);
    return c;
}

std::string error_category_name(ErrorCategory e) {
    switch (e) {
        case ErrorCategory::calculation: return "calculation";
        case ErrorCategory::heir_identification: return "heir_identification";
        case ErrorCategory::radd_detection: return "radd_detection";
        case ErrorCategory::share_assignment: return "share_assignment";
        case ErrorCategory::residue_label_avoidance: return "residue_label_avoidance";
        default: return "none";
    }
}

ResidueBehaviour residue_behaviour(const SolutionRecord& pred, const SolutionRecord& gold) {
    auto residue_value = gold_residue_value(gold);
    auto p = share_map(pred);
    for (const auto& s : gold.shares) {
        if (!s.share.is_residue()) continue;
        auto it = p.find(match_key(s.who.label));
        if (it == p.end()) return ResidueBehaviour::avoided_wrong;
        const ShareValue& sv = it->second.share;
        if (sv.is_residue()) return ResidueBehaviour::provided;
        if (sv.is_fraction() && residue_value) {
            Fraction per = *residue_value;
            if (s.who.count > 1) per = *residue_value / Fraction(s.who.count);
            if (sv.fraction == *residue_value || sv.fraction == per)
                return ResidueBehaviour::avoided_correct;
        }
        return ResidueBehaviour::avoided_wrong;
    }
    return ResidueBehaviour::not_required;
}

ErrorCategory categorize_error(const SolutionRecord& pred, const SolutionRecord& gold,
                               const MireComponents& c) {
    if (c.s_h == 1.0 && c.s_s == 1.0 && c.s_a == 1.0 && c.s_f == 1.0)
        return ErrorCategory::none;
    if (c.s_h == 1.0 && c.s_s == 1.0 && c.s_a == 1.0 && c.s_f < 1.0)
        return ErrorCategory::calculation;
    auto pa = parse_adjustment(pred.awl_or_radd);
    auto ga = parse_adjustment(gold.awl_or_radd);
    if (ga && *ga == Adjustment::radd && pa && *pa == Adjustment::none)
        return ErrorCategory::radd_detection;
    if (c.s_s < 1.0) {
        // If the only share defect is writing the (correct) residue value as
        // an explicit fraction, that is the representational failure mode.
        auto b = residue_behaviour(pred, gold);
        bool others_perfect = true;
        auto p = share_map(pred);
        auto residue_value = gold_residue_value(gold);
        for (const auto& [key, gs] : share_map(gold)) {
            if (gs.share.is_residue()) continue;
            auto it = p.find(key);
            if (it == p.end() ||
                entry_score(it->second.share, gs, residue_value) != 1.0) {
                others_perfect = false;
                break;
            }
        }
        if (b == ResidueBehaviour::avoided_correct && others_perfect && c.s_h == 1.0)
            return ErrorCategory::residue_label_avoidance;
        return ErrorCategory::share_assignment;
    }
    if (c.s_h < 1.0) return ErrorCategory::heir_identification;
    return ErrorCategory::none;
}

std::string gold_category_of(const SolutionRecord& gold) {
    auto a = parse_adjustment(gold.awl_or_radd);
    if (a && *a == Adjustment::awl) return kAwlLabel;
    if (a && *a == Adjustment::radd) return kRaddLabel;
    return "simple";
}

AnalysisReport aggregate(const std::vector<CaseResult>& results) {
    if (results.empty())
        throw AggregationError("no results to aggregate");
    AnalysisReport r;
    r.cases = results.size();
    std::map<std::string, CategoryRow> cats;
    size_t n_h = 0, n_hs = 0, n_hsa = 0, n_all = 0;
    for (const auto& cr : results) {
        const auto& c = cr.components;
        r.mean_mire += c.mire;
        r.mean_h += c.s_h;
        r.mean_s += c.s_s;
        r.mean_a += c.s_a;
        r.mean_f += c.s_f;
        bool h = c.s_h == 1.0, s = c.s_s == 1.0, a = c.s_a == 1.0, f = c.s_f == 1.0;
        if (h) ++n_h;
        if (h && s) ++n_hs;
        if (h && s && a) ++n_hsa;
        if (h && s && a && f) ++n_all;
        auto& row = cats[cr.gold_category.empty() ? "simple" : cr.gold_category];
        row.name = cr.gold_category.empty() ? "simple" : cr.gold_category;
        ++row.n;
        row.mire += c.mire;
        row.s_h += c.s_h;
        row.s_s += c.s_s;
        row.s_a += c.s_a;
        row.s_f += c.s_f;
        ++r.error_counts[error_category_name(cr.error)];
        if (cr.residue != ResidueBehaviour::not_required) {
            ++r.residue_required;
            if (cr.residue == ResidueBehaviour::provided) ++r.residue_provided;
            else {
                ++r.residue_avoided;
                if (cr.residue == ResidueBehaviour::avoided_correct)
                    ++r.residue_avoided_correct;
            }
        }
    }
    double n = static_cast<double>(r.cases);
    r.mean_mire /= n;
    r.mean_h /= n;
    r.mean_s /= n;
    r.mean_a /= n;
    r.mean_f /= n;
    r.rate_h = n_h / n;
    r.rate_hs = n_hs / n;
    r.rate_hsa = n_hsa / n;
    r.rate_all = n_all / n;
    for (auto& [name, row] : cats) {
        double m = static_cast<double>(row.n);
        row.mire /= m;
        row.s_h /= m;
        row.s_s /= m;
        row.s_a /= m;
        row.s_f /= m;
        r.per_category.push_back(row);
    }
    // Stable order: simple, then 'awl, then radd.
    std::sort(r.per_category.begin(), r.per_category.end(),
              [](const CategoryRow& a, const CategoryRow& b) {
                  auto rank = [](const std::string& s) {
                      if (s == "simple") return 0;
                      if (s == kAwlLabel) return 1;
                      if (s == kRaddLabel) return 2;
                      return 3;
                  };
                  return rank(a.name) < rank(b.name);
              });
    return r;
}

}  // namespace irth
