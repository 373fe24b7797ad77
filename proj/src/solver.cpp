#include "irth/solver.hpp"

#include <algorithm>
#include <map>

namespace irth {

namespace {

std::vector<RelativeMention> merge_mentions(const std::vector<RelativeMention>& in) {
    std::vector<RelativeMention> out;
    for (const auto& m : in) {
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const RelativeMention& o) { return o.label == m.label; });
        if (it == out.end())
            out.push_back(m);
        else
            it->count += m.count;
    }
    return out;
}

std::map<int, long long> count_map(const std::vector<RelativeMention>& mentions,
                                   const Taxonomy& tax) {
    std::map<int, long long> counts;
    for (const auto& m : mentions)
        counts[tax.resolve(m.label).id] += m.count;
    return counts;
}

bool has_effective_descendant(const std::map<int, long long>& counts, const Taxonomy& tax,
                              Gender gender, bool any) {
    for (const auto& [id, n] : counts) {
        if (n <= 0) continue;
        const HeirCategory& c = tax.by_id(id);
        if (!is_inheriting_descendant(c)) continue;
        if (any || c.gender == gender) return true;
    }
    return false;
}

bool is_full_or_paternal_sibling(const HeirCategory& c) {
    return c.label == "أخ شقيق" || c.label == "أخت شقيقة" || c.label == "أخ لأب" ||
           c.label == "أخت لأب";
}

const Fraction kOne(1);
const Fraction kSixth(1, 6);

}  // namespace

Fraction sum_shares(const std::vector<ShareValue>& shares) {
    Fraction total;
    for (const auto& s : shares) {
        if (!s.is_fraction())
            throw SolverError("sum_shares: non-fraction share in input");
        total += s.fraction;
    }
    return total;
}

BlockingResult determine_blocking(const CaseScenario& scenario, const RuleTable& rules) {
    const Taxonomy& tax = rules.taxonomy();
    auto mentions = merge_mentions(scenario.mentions);
    auto raw = count_map(mentions, tax);
    BlockingResult out;
    for (const auto& m : mentions) {
        const HeirCategory& cat = tax.resolve(m.label);
        const BlockRule* rule = rules.block_rule(cat.id);
        RuleEnv env{raw, raw, tax, cat.id};
        if (rule && rule->condition.eval(env))
            out.blocked.push_back({cat.label, m.count});
        else
            out.heirs.push_back({cat.label, m.count});
    }
    return out;
}

ShareValue grandfather_share(const std::vector<RelativeMention>& heirs,
                             const Fraction& fixed_total, const Taxonomy& tax) {
    const HeirCategory* grandfather = nullptr;
    long long sibling_heads = 0;   // brother = 2, sister = 1
    for (const auto& m : heirs) {
        const HeirCategory& c = tax.resolve(m.label);
        if (c.kinship == Kinship::ascendant && c.gender == Gender::male && c.label != "أب")
            grandfather = &c;
        if (is_full_or_paternal_sibling(c))
            sibling_heads += m.count * (c.gender == Gender::male ? 2 : 1);
    }
    if (!grandfather)
        throw SolverError("grandfather_share: no grandfather-line ascendant present");
    if (sibling_heads == 0)
        return ShareValue::residue();   // father substitute, pure residuary

    Fraction remainder = kOne - fixed_total;
    if (remainder < Fraction(0)) remainder = Fraction(0);
    Fraction muqasama = remainder * Fraction(2, sibling_heads + 2);
    Fraction third_of_remainder = remainder * Fraction(1, 3);
    // Ties resolve toward the plain sixth.
    Fraction best = kSixth;
    if (third_of_remainder > best) best = third_of_remainder;
    if (muqasama > best) best = muqasama;
    return ShareValue::of(best);
}

namespace {

struct Assignment {
    RelativeMention who;
    const HeirCategory* cat;
    ShareOutcome outcome;
    ShareValue value;   // filled once resolved
    bool resolved = false;
};

Fraction fixed_total_excluding(const std::vector<Assignment>& all, const Assignment* self) {
    Fraction total;
    for (const auto& a : all)
        if (&a != self && a.resolved && a.value.is_fraction()) total += a.value.fraction;
    return total;
}

}  // namespace

std::vector<ShareEntry> assign_shares_impl(const std::vector<RelativeMention>& heirs,
                                           const RuleTable& rules,
                                           const std::map<int, long long>& raw) {
    const Taxonomy& tax = rules.taxonomy();
    auto merged = merge_mentions(heirs);
    auto eff = count_map(merged, tax);

    std::vector<Assignment> work;
    for (const auto& m : merged) {
        const HeirCategory& cat = tax.resolve(m.label);
        const auto& table = rules.share_rules(cat.id);
        if (table.empty())
            throw SolverError("no share rules for category " + cat.label);
        const ShareRule* fired = nullptr;
        for (const auto& r : table) {
            RuleEnv env{eff, raw, tax, cat.id};
            if (r.condition.eval(env)) {
                fired = &r;
                break;
            }
        }
        if (!fired)
            throw SolverError("no share rule fired for category " + cat.label);
        Assignment a{{cat.label, m.count}, &cat, fired->outcome, {}, false};
        if (a.outcome.kind == ShareOutcome::Kind::fixed) {
            a.value = ShareValue::of(a.outcome.fraction);
            a.resolved = true;
        } else if (a.outcome.kind == ShareOutcome::Kind::residue) {
            a.value = ShareValue::residue();
            a.resolved = true;
        }
        work.push_back(std::move(a));
    }

    // Cross-category group shares first.
    long long grandmother_heads = 0, maternal_heads = 0;
    for (const auto& a : work) {
        if (a.resolved) continue;
        if (a.outcome.special == "grandmother") grandmother_heads += a.who.count;
        if (a.outcome.special == "maternal") maternal_heads += a.who.count;
    }
    for (auto& a : work) {
        if (a.resolved) continue;
        if (a.outcome.special == "grandmother") {
            a.value = ShareValue::of(kSixth * Fraction(a.who.count, grandmother_heads));
            a.resolved = true;
        } else if (a.outcome.special == "maternal") {
            Fraction pool = maternal_heads == 1 ? kSixth : Fraction(1, 3);
            a.value = ShareValue::of(pool * Fraction(a.who.count, maternal_heads));
            a.resolved = true;
        }
    }

    // Mother: a plain third, except beside spouse and father alone, where she
    // takes a third of what the spouse leaves.
    for (auto& a : work) {
        if (a.resolved || a.outcome.special != "mother") continue;
        bool father = false, husband = false, wife = false, other = false;
        for (const auto& b : work) {
            if (b.cat->label == "أم") continue;
            else if (b.cat->label == "أب") father = true;
            else if (b.cat->label == "زوج") husband = true;
            else if (b.cat->label == "زوجة") wife = true;
            else other = true;
        }
        if (father && (husband || wife) && !other) {
            Fraction spouse = husband ? Fraction(1, 2) : Fraction(1, 4);
            a.value = ShareValue::of((kOne - spouse) * Fraction(1, 3));
        } else {
            a.value = ShareValue::of(Fraction(1, 3));
        }
        a.resolved = true;
    }

    // Father / grandfather last: they depend on everyone else's fixed total.
    for (auto& a : work) {
        if (a.resolved) continue;
        if (a.outcome.special == "father") {
            Fraction rest = kOne - fixed_total_excluding(work, &a);
            a.value = rest > kSixth ? ShareValue::residue() : ShareValue::of(kSixth);
            a.resolved = true;
        } else if (a.outcome.special == "grandfather") {
            bool fdesc = false;
            for (const auto& b : work)
                if (is_inheriting_descendant(*b.cat) && b.cat->gender == Gender::female)
                    fdesc = true;
            Fraction others = fixed_total_excluding(work, &a);
            if (fdesc) {
                Fraction rest = kOne - others;
                a.value = rest > kSixth ? ShareValue::residue() : ShareValue::of(kSixth);
            } else {
                a.value = grandfather_share(merged, others, tax);
            }
            a.resolved = true;
        } else {
            throw SolverError("unknown special share handler: " + a.outcome.special);
        }
    }

    std::vector<ShareEntry> out;
    for (auto& a : work) out.push_back({a.who, a.value});
    return out;
}

std::vector<ShareEntry> assign_shares(const std::vector<RelativeMention>& heirs,
                                      const RuleTable& rules) {
    // Standalone use: the effective set doubles as the mention multiset.
    // solve_case routes the full scenario in so that blocked siblings still
    // reduce the mother's share.
    auto raw = count_map(merge_mentions(heirs), rules.taxonomy());
    return assign_shares_impl(heirs, rules, raw);
}

Adjustment detect_adjustment(const std::vector<ShareEntry>& shares) {
    Fraction total;
    bool residue = false;
    for (const auto& s : shares) {
        if (s.share.is_fraction())
            total += s.share.fraction;
        else if (s.share.is_residue())
            residue = true;
    }
    if (total > kOne) return Adjustment::awl;
    if (total < kOne && !residue) return Adjustment::radd;
    return Adjustment::none;
}

PostTasil compute_tasil(const std::vector<ShareEntry>& shares, Adjustment adjustment) {
    const Taxonomy& tax = Taxonomy::standard();

    Fraction fixed_sum;
    bool has_residue = false;
    for (const auto& s : shares) {
        if (s.share.is_fraction()) fixed_sum += s.share.fraction;
        if (s.share.is_residue()) has_residue = true;
    }
    if (adjustment == Adjustment::radd && has_residue)
        throw std::invalid_argument("compute_tasil: radd with a residue designation");

    struct Line {
        const ShareEntry* entry;
        Fraction collective;
    };
    std::vector<Line> lines;
    for (const auto& s : shares) lines.push_back({&s, Fraction(0)});

    switch (adjustment) {
        case Adjustment::awl:
            for (auto& l : lines)
                if (l.entry->share.is_fraction())
                    l.collective = l.entry->share.fraction / fixed_sum;
            break;
        case Adjustment::radd: {
            Fraction spouse_sum;
            for (auto& l : lines) {
                const HeirCategory& c = tax.resolve(l.entry->who.label);
                if (c.kinship == Kinship::spouse) spouse_sum += l.entry->share.fraction;
            }
            Fraction others = fixed_sum - spouse_sum;
            Fraction rest = kOne - spouse_sum;
            for (auto& l : lines) {
                const HeirCategory& c = tax.resolve(l.entry->who.label);
                const Fraction& f = l.entry->share.fraction;
                if (others.is_zero()) {
                    // No eligible redistribution target: the surplus reverts
                    // to the spouse rather than going unassigned.
                    l.collective = f / spouse_sum;
                } else if (c.kinship == Kinship::spouse) {
                    l.collective = f;
                } else {
                    l.collective = f * (rest / others);
                }
            }
            break;
        }
        default: {
            Fraction rest = kOne - fixed_sum;
            if (rest < Fraction(0)) rest = Fraction(0);
            long long weight_total = 0;
            for (auto& l : lines)
                if (l.entry->share.is_residue())
                    weight_total += l.entry->who.count *
                                    (tax.resolve(l.entry->who.label).gender == Gender::male ? 2 : 1);
            for (auto& l : lines) {
                if (l.entry->share.is_fraction()) {
                    l.collective = l.entry->share.fraction;
                } else if (weight_total > 0) {
                    long long w = l.entry->who.count *
                                  (tax.resolve(l.entry->who.label).gender == Gender::male ? 2 : 1);
                    l.collective = rest * Fraction(w, weight_total);
                }
            }
            break;
        }
    }

    Fraction check;
    for (const auto& l : lines) check += l.collective;
    if (check != kOne)
        throw SolverError("compute_tasil: allocations sum to " + check.str());

    // Base denominator: smallest total that makes every per-individual
    // share an integer count (ta'sil plus tashih in one lcm).
    BigInt total(1);
    std::vector<Fraction> per_individual;
    for (const auto& l : lines) {
        Fraction per = l.collective / Fraction(l.entry->who.count);
        if (!per.is_zero()) total = boost::multiprecision::lcm(total, per.denominator());
        per_individual.push_back(per);
    }

    PostTasil pt;
    pt.total_shares = total.convert_to<long long>();
    for (size_t i = 0; i < lines.size(); ++i) {
        DistributionEntry d;
        d.label = lines[i].entry->who.label;
        d.count = lines[i].entry->who.count;
        d.per_individual = per_individual[i];
        d.percent = per_individual[i].percent();
        pt.distribution.push_back(std::move(d));
    }
    return pt;
}

SolutionRecord solve_case(const CaseScenario& scenario, const RuleTable& rules) {
    BlockingResult partition = determine_blocking(scenario, rules);
    if (partition.heirs.empty())
        throw SolverError("scenario has no effective heirs");
    auto raw = count_map(merge_mentions(scenario.mentions), rules.taxonomy());
    auto shares = assign_shares_impl(partition.heirs, rules, raw);
    Adjustment adj = detect_adjustment(shares);
    SolutionRecord r;
    r.heirs = partition.heirs;
    r.blocked = partition.blocked;
    r.shares = shares;
    r.awl_or_radd = adjustment_label(adj);
    r.post_tasil = compute_tasil(shares, adj);
    return r;
}

}  // namespace irth
