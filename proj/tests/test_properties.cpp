#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irth/solver.hpp"

#include <algorithm>
#include <map>
#include <random>

using namespace irth;

// Brute-force oracle over the restricted family {husband, wife, father,
// mother, son, daughter, full brother}, written directly from the doctrine
// without reference to the rule tables or the solver internals.
namespace oracle {

struct Family {
    long long zawj = 0;    // husband (0/1)
    long long zawja = 0;   // wives
    long long ab = 0;      // father (0/1)
    long long om = 0;      // mother (0/1)
    long long ibn = 0;     // sons
    long long bint = 0;    // daughters
    long long akh = 0;     // full brothers

    long long total() const { return zawj + zawja + ab + om + ibn + bint + akh; }
};

struct Outcome {
    std::map<std::string, long long> heirs;
    std::map<std::string, long long> blocked;
    Fraction fixed_sum;
    bool has_residue = false;
    std::string adjustment;
    std::map<std::string, Fraction> per_individual;
};

Outcome evaluate(const Family& f) {
    Outcome o;
    bool desc = f.ibn > 0 || f.bint > 0;

    // Blocking: only the brother is excludable here (by father or son).
    bool akh_blocked = f.ab > 0 || f.ibn > 0;
    if (f.zawj) o.heirs["زوج"] = f.zawj;
    if (f.zawja) o.heirs["زوجة"] = f.zawja;
    if (f.ab) o.heirs["أب"] = f.ab;
    if (f.om) o.heirs["أم"] = f.om;
    if (f.ibn) o.heirs["ابن"] = f.ibn;
    if (f.bint) o.heirs["بنت"] = f.bint;
    if (f.akh) {
        if (akh_blocked)
            o.blocked["أخ شقيق"] = f.akh;
        else
            o.heirs["أخ شقيق"] = f.akh;
    }

    // Collective prescribed shares.
    std::map<std::string, Fraction> fixed;
    std::map<std::string, long long> residue_weights;   // per-individual, male 2
    Fraction spouse;
    if (f.zawj) spouse = desc ? Fraction(1, 4) : Fraction(1, 2);
    if (f.zawja) spouse = desc ? Fraction(1, 8) : Fraction(1, 4);
    if (f.zawj) fixed["زوج"] = spouse;
    if (f.zawja) fixed["زوجة"] = spouse;

    if (f.om) {
        if (desc || f.akh >= 2) {
            fixed["أم"] = Fraction(1, 6);
        } else {
            bool umariyya = f.ab > 0 && (f.zawj > 0 || f.zawja > 0) && f.ibn == 0 &&
                            f.bint == 0 && !o.heirs.count("أخ شقيق");
            fixed["أم"] = umariyya ? (Fraction(1) - spouse) * Fraction(1, 3)
                                   : Fraction(1, 3);
        }
    }

    if (f.ibn > 0) {
        residue_weights["ابن"] = 2;
        if (f.bint > 0) residue_weights["بنت"] = 1;
    } else if (f.bint > 0) {
        fixed["بنت"] = f.bint >= 2 ? Fraction(2, 3) : Fraction(1, 2);
    }

    if (f.ab) {
        if (f.ibn > 0) {
            fixed["أب"] = Fraction(1, 6);
        } else if (f.bint > 0) {
            Fraction others;
            for (const auto& [label, share] : fixed) others += share;
            Fraction rest = Fraction(1) - others;
            if (rest > Fraction(1, 6))
                residue_weights["أب"] = 2;
            else
                fixed["أب"] = Fraction(1, 6);
        } else {
            residue_weights["أب"] = 2;
        }
    }
    if (o.heirs.count("أخ شقيق")) residue_weights["أخ شقيق"] = 2;

    for (const auto& [label, share] : fixed) o.fixed_sum += share;
    o.has_residue = !residue_weights.empty();

    if (o.fixed_sum > Fraction(1))
        o.adjustment = "عول";
    else if (o.fixed_sum < Fraction(1) && !o.has_residue)
        o.adjustment = "رد";
    else
        o.adjustment = "لا";

    // Final per-individual allocation.
    std::map<std::string, Fraction> collective;
    if (o.adjustment == "عول") {
        for (const auto& [label, share] : fixed) collective[label] = share / o.fixed_sum;
        // Overflowing fixed shares leave nothing for a residuary, but he
        // still appears in the distribution with an empty allocation.
        for (const auto& [label, w] : residue_weights) collective[label] = Fraction(0);
    } else if (o.adjustment == "رد") {
        Fraction spouse_sum;
        if (fixed.count("زوج")) spouse_sum += fixed["زوج"];
        if (fixed.count("زوجة")) spouse_sum += fixed["زوجة"];
        Fraction others = o.fixed_sum - spouse_sum;
        for (const auto& [label, share] : fixed) {
            if (others.is_zero())
                collective[label] = share / spouse_sum;   // lone spouse absorbs
            else if (label == "زوج" || label == "زوجة")
                collective[label] = share;
            else
                collective[label] = share * ((Fraction(1) - spouse_sum) / others);
        }
    } else {
        Fraction rest = Fraction(1) - o.fixed_sum;
        long long head_total = 0;
        for (const auto& [label, w] : residue_weights)
            head_total += w * o.heirs.at(label);
        for (const auto& [label, share] : fixed) collective[label] = share;
        for (const auto& [label, w] : residue_weights)
            collective[label] = rest * Fraction(w * o.heirs.at(label), head_total);
    }
    for (const auto& [label, share] : collective)
        o.per_individual[label] = share / Fraction(o.heirs.at(label));
    return o;
}

}  // namespace oracle

namespace {

CaseScenario scenario_of(const oracle::Family& f, std::mt19937& rng) {
    std::vector<RelativeMention> mentions;
    auto add = [&](const char* label, long long n) {
        if (n > 0) mentions.push_back({label, n});
    };
    add("زوج", f.zawj);
    add("زوجة", f.zawja);
    add("أب", f.ab);
    add("أم", f.om);
    add("ابن", f.ibn);
    add("بنت", f.bint);
    add("أخ شقيق", f.akh);
    std::shuffle(mentions.begin(), mentions.end(), rng);
    // Occasionally split one multi-person mention to exercise merging.
    if (!mentions.empty() && mentions.front().count > 1 && rng() % 4 == 0) {
        RelativeMention extra{mentions.front().label, 1};
        mentions.front().count -= 1;
        mentions.push_back(extra);
    }
    CaseScenario s;
    s.mentions = std::move(mentions);
    return s;
}

std::map<std::string, long long> label_counts(const std::vector<RelativeMention>& v) {
    std::map<std::string, long long> m;
    for (const auto& x : v) m[x.label] += x.count;
    return m;
}

}  // namespace

TEST_CASE("ten thousand randomized scenarios agree with the oracle") {
    std::mt19937 rng(20250824);
    std::uniform_int_distribution<long long> coin(0, 1);
    std::uniform_int_distribution<long long> few(0, 3);
    std::uniform_int_distribution<int> spouse_kind(0, 2);

    int checked = 0;
    for (int iter = 0; iter < 10000; ++iter) {
        oracle::Family f;
        switch (spouse_kind(rng)) {
            case 1: f.zawj = 1; break;
            case 2: f.zawja = 1 + few(rng); break;
            default: break;
        }
        f.ab = coin(rng);
        f.om = coin(rng);
        f.ibn = few(rng);
        f.bint = few(rng);
        f.akh = few(rng);
        if (f.total() == 0) continue;
        ++checked;

        oracle::Outcome expect = oracle::evaluate(f);
        CaseScenario scenario = scenario_of(f, rng);
        SolutionRecord r = solve_case(scenario);

        INFO("family: zawj=" << f.zawj << " zawja=" << f.zawja << " ab=" << f.ab
                             << " om=" << f.om << " ibn=" << f.ibn << " bint=" << f.bint
                             << " akh=" << f.akh);

        // Partition: heirs + blocked reconstitute the input multiset.
        auto heirs = label_counts(r.heirs);
        auto blocked = label_counts(r.blocked);
        auto input = label_counts(scenario.mentions);
        std::map<std::string, long long> rejoined = heirs;
        for (const auto& [label, n] : blocked) rejoined[label] += n;
        CHECK(rejoined == input);
        CHECK(heirs == expect.heirs);
        CHECK(blocked == expect.blocked);

        // Adjustment agrees with the brute-force rule.
        CHECK(r.awl_or_radd == expect.adjustment);

        // Exact conservation of the estate.
        Fraction total;
        for (const auto& d : r.post_tasil.distribution)
            total += *d.per_individual * Fraction(d.count);
        CHECK(total == Fraction(1));

        // Per-individual allocations match the oracle's exactly.
        REQUIRE(r.post_tasil.distribution.size() == expect.per_individual.size());
        for (const auto& d : r.post_tasil.distribution) {
            auto it = expect.per_individual.find(d.label);
            REQUIRE(it != expect.per_individual.end());
            CHECK(*d.per_individual == it->second);
        }

        // Every per-individual sahm is integral over the base.
        for (const auto& d : r.post_tasil.distribution) {
            Fraction sahm = *d.per_individual * Fraction(r.post_tasil.total_shares);
            CHECK(sahm.denominator() == 1);
        }
    }
    CHECK(checked > 9000);
}
