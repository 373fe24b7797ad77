#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irth/mire.hpp"
#include "irth/parser.hpp"
#include "irth/solver.hpp"

#include <cmath>
#include <random>

using namespace irth;

namespace {

SolutionRecord solve(const std::string& text) { return solve_case(parse_case(text)); }

SolutionRecord gold_seven_relatives() {
    return solve(
        "مات وترك: عم لأب و ابن أخ لأب و أربع بنات ابن و أم الأم و أب الأب و زوجة "
        "و خمسة أبناء ابن أخ لأب. ما هو نصيب كل وريث؟");
}

void set_percent(SolutionRecord& r, const std::string& label, const std::string& pct) {
    for (auto& d : r.post_tasil.distribution)
        if (d.label == label) {
            d.percent = pct;
            d.per_individual.reset();
        }
}

}  // namespace

TEST_CASE("weighted arithmetic matches the reference vectors within 1e-9") {
    MireWeights w;
    CHECK(std::abs(weighted_score({1, 1, 1, 0, 0}, w) - 0.700) < 1e-9);
    CHECK(std::abs(weighted_score({1, 1, 0, 0, 0}, w) - 0.600) < 1e-9);
    CHECK(std::abs(weighted_score({0.66, 1, 1, 1, 0}, w) - 0.898) < 1e-9);
    CHECK(std::abs(weighted_score({1, 1, 1, 1, 0}, w) - 1.0) < 1e-9);
    CHECK(weighted_score({0, 0, 0, 0, 0}, w) == 0.0);
}

TEST_CASE("a record scores a perfect 1.0 against itself") {
    SolutionRecord g = gold_seven_relatives();
    MireComponents c = mire(g, g);
    CHECK(c.s_h == 1.0);
    CHECK(c.s_s == 1.0);
    CHECK(c.s_a == 1.0);
    CHECK(c.s_f == 1.0);
    CHECK(c.mire == 1.0);
}

TEST_CASE("heirs scoring: F1 over labeled decisions times count accuracy") {
    SolutionRecord g = gold_seven_relatives();
    SolutionRecord empty;
    CHECK(score_heirs(empty, g) == 0.0);
    CHECK(score_heirs(empty, empty) == 1.0);

    // One blocked label shortened: 6 of 7 decisions match both ways.
    // The documented formula gives F1 = 6/7 (precision 6/7, recall 6/7)
    // with full count accuracy; the reference scorer reports 0.66 for the
    // same pattern and both values are kept visible here.
    SolutionRecord p = g;
    p.blocked[0].label = "عم";
    double s = score_heirs(p, g);
    CHECK(s == doctest::Approx(6.0 / 7.0));
    CHECK(s < 1.0);

    // A wrong count on a matched category costs through the count factor.
    p = g;
    p.heirs[3].count += 1;
    CHECK(score_heirs(p, g) == doctest::Approx(6.0 / 7.0));

    // A category on the wrong side of the blocking split misses both ways.
    p = g;
    std::swap(p.heirs[0], p.blocked[0]);
    CHECK(score_heirs(p, g) < score_heirs(g, g));
}

TEST_CASE("share scoring: exact fractions, residue designation, partial credit") {
    SolutionRecord g;
    g.shares = {{{"أم", 1}, ShareValue::of(Fraction(1, 6))},
                {{"أب الأب", 1}, ShareValue::of(Fraction(5, 18))},
                {{"أخ لأب", 4}, ShareValue::residue()}};

    CHECK(score_shares(g, g) == 1.0);

    // Wrong fraction for one of three entries.
    SolutionRecord p = g;
    p.shares[1].share = ShareValue::of(Fraction(1, 3));
    CHECK(score_shares(p, g) == doctest::Approx(2.0 / 3.0));

    // The numerically correct residue value as an explicit fraction:
    // 1 - 1/6 - 5/18 = 5/9 collectively, or 5/36 per brother.
    p = g;
    p.shares[2].share = ShareValue::of(Fraction(5, 9));
    CHECK(score_shares(p, g) == doctest::Approx((2.0 + kResiduePartialCredit) / 3.0));
    p.shares[2].share = ShareValue::of(Fraction(5, 36));
    CHECK(score_shares(p, g) == doctest::Approx((2.0 + kResiduePartialCredit) / 3.0));

    // A numerically wrong substitute earns nothing.
    p.shares[2].share = ShareValue::of(Fraction(1, 6));
    CHECK(score_shares(p, g) == doctest::Approx(2.0 / 3.0));

    // Unparseable and missing entries score zero.
    p = g;
    p.shares[0].share = ShareValue::bad("السدس");
    CHECK(score_shares(p, g) == doctest::Approx(2.0 / 3.0));
    p = g;
    p.shares.erase(p.shares.begin());
    CHECK(score_shares(p, g) == doctest::Approx(2.0 / 3.0));

    SolutionRecord none;
    CHECK(score_shares(none, none) == 1.0);
    CHECK(score_shares(g, none) == 0.0);
}

TEST_CASE("adjustment scoring is gated on perfect upstream components") {
    SolutionRecord g;
    g.awl_or_radd = "عول";
    SolutionRecord p = g;
    CHECK(score_adjustment(p, g, 1.0, 1.0) == 1.0);
    p.awl_or_radd = "لا";
    CHECK(score_adjustment(p, g, 1.0, 1.0) == 0.0);
    p.awl_or_radd = "عول";
    CHECK(score_adjustment(p, g, 0.66, 1.0) == 0.0);
    CHECK(score_adjustment(p, g, 1.0, 0.9) == 0.0);
    p.awl_or_radd = "غامض";
    CHECK(score_adjustment(p, g, 1.0, 1.0) == 0.0);
}

TEST_CASE("final scoring counts entries within the percentage tolerance") {
    SolutionRecord g = gold_seven_relatives();
    CHECK(score_final(g, g) == 1.0);

    // The stale-distribution pattern: wife 8.33 vs 11.11, others 13.89 vs
    // 14.81 — every entry misses.
    SolutionRecord p = g;
    set_percent(p, "زوجة", "8.33");
    set_percent(p, "أم الأم", "13.89");
    set_percent(p, "أب الأب", "13.89");
    set_percent(p, "بنت ابن", "13.89");
    CHECK(score_final(p, g) == 0.0);

    // One of three entries inside tolerance.
    SolutionRecord g3;
    g3.post_tasil.distribution = {{"أم", 1, std::nullopt, "16.67"},
                                  {"أب الأب", 1, std::nullopt, "27.78"},
                                  {"أخ لأب", 4, std::nullopt, "13.89"}};
    SolutionRecord p3;
    p3.post_tasil.distribution = {{"أم", 1, std::nullopt, "16.67"},
                                  {"أب الأب", 1, std::nullopt, "16.67"},
                                  {"أخ لأب", 4, std::nullopt, "8.33"}};
    CHECK(score_final(p3, g3) == doctest::Approx(1.0 / 3.0));

    // The tolerance itself: 0.04pp passes, 0.06pp fails.
    SolutionRecord p1;
    p1.post_tasil.distribution = {{"أم", 1, std::nullopt, "16.71"},
                                  {"أب الأب", 1, std::nullopt, "27.78"},
                                  {"أخ لأب", 4, std::nullopt, "13.89"}};
    CHECK(score_final(p1, g3) == doctest::Approx(1.0));
    p1.post_tasil.distribution[0].percent = "16.73";
    CHECK(score_final(p1, g3) == doctest::Approx(2.0 / 3.0));

    // Missing heirs score zero for their entries.
    SolutionRecord missing;
    missing.post_tasil.distribution = {{"أم", 1, std::nullopt, "16.67"}};
    CHECK(score_final(missing, g3) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("the conditional gate holds over random component pairs") {
    std::mt19937 rng(7);
    SolutionRecord g = gold_seven_relatives();
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < 200; ++i) {
        SolutionRecord p = g;
        if (coin(rng)) p.heirs[0].label = "أم";
        if (coin(rng)) p.shares[0].share = ShareValue::of(Fraction(1, 7));
        if (coin(rng)) p.awl_or_radd = "لا";
        if (coin(rng)) p.post_tasil.distribution[0].percent = "1.00";
        MireComponents c = mire(p, g);
        CHECK(c.s_h >= 0.0);
        CHECK(c.s_h <= 1.0);
        CHECK(c.mire >= 0.0);
        CHECK(c.mire <= 1.0);
        if (c.s_h < 1.0 || c.s_s < 1.0) CHECK(c.s_a == 0.0);
        CHECK(c.mire == weighted_score(c, MireWeights{}));
    }
}

TEST_CASE("error categorization reproduces the four reference patterns") {
    // Calculation: perfect reasoning, stale final percentages.
    SolutionRecord g = gold_seven_relatives();
    SolutionRecord p = g;
    set_percent(p, "زوجة", "8.33");
    MireComponents c = mire(p, g);
    CHECK(c.s_h == 1.0);
    CHECK(c.s_s == 1.0);
    CHECK(c.s_a == 1.0);
    CHECK(c.s_f < 1.0);
    CHECK(categorize_error(p, g, c) == ErrorCategory::calculation);

    // Heir identification: a shortened blocked label.
    p = g;
    p.blocked[0].label = "عم";
    c = mire(p, g);
    CHECK(categorize_error(p, g, c) == ErrorCategory::heir_identification);

    // Radd detection: gold رد, predicted لا.
    SolutionRecord gr = solve("ماتت وتركت: ثلاث أخوات شقيقات و أم أب الأب. ما هو نصيب كل وريث؟");
    CHECK(gr.awl_or_radd == "رد");
    SolutionRecord pr = gr;
    pr.awl_or_radd = "لا";
    set_percent(pr, "أم أب الأب", "16.67");
    set_percent(pr, "أخت شقيقة", "22.22");
    c = mire(pr, gr);
    CHECK(c.s_a == 0.0);
    CHECK(categorize_error(pr, gr, c) == ErrorCategory::radd_detection);

    // Share assignment: wrong grandfather fraction among other damage.
    SolutionRecord gs;
    gs.heirs = {{"أم", 1}, {"أب الأب", 1}, {"أخ لأب", 4}};
    gs.shares = {{{"أم", 1}, ShareValue::of(Fraction(1, 6))},
                 {{"أب الأب", 1}, ShareValue::of(Fraction(5, 18))},
                 {{"أخ لأب", 4}, ShareValue::residue()}};
    gs.awl_or_radd = "لا";
    SolutionRecord ps = gs;
    ps.heirs.push_back({"أخ لأم", 1});
    ps.shares[1].share = ShareValue::of(Fraction(1, 3));
    ps.shares[2].share = ShareValue::of(Fraction(1, 6));
    c = mire(ps, gs);
    CHECK(c.s_s < 1.0);
    CHECK(categorize_error(ps, gs, c) == ErrorCategory::share_assignment);

    // Residue label avoidance: the only defect is the correct explicit
    // fraction where the designation belongs.
    SolutionRecord pa = gs;
    pa.shares[2].share = ShareValue::of(Fraction(5, 9));
    c = mire(pa, gs);
    CHECK(categorize_error(pa, gs, c) == ErrorCategory::residue_label_avoidance);

    // Perfection.
    c = mire(gs, gs);
    CHECK(categorize_error(gs, gs, c) == ErrorCategory::none);
}

TEST_CASE("residue behaviour classification") {
    SolutionRecord g;
    g.shares = {{{"أم", 1}, ShareValue::of(Fraction(1, 6))},
                {{"أخ لأب", 4}, ShareValue::residue()}};
    SolutionRecord p = g;
    CHECK(residue_behaviour(p, g) == ResidueBehaviour::provided);
    p.shares[1].share = ShareValue::of(Fraction(5, 6));
    CHECK(residue_behaviour(p, g) == ResidueBehaviour::avoided_correct);
    p.shares[1].share = ShareValue::of(Fraction(5, 24));   // per-individual form
    CHECK(residue_behaviour(p, g) == ResidueBehaviour::avoided_correct);
    p.shares[1].share = ShareValue::of(Fraction(1, 6));
    CHECK(residue_behaviour(p, g) == ResidueBehaviour::avoided_wrong);
    p.shares.pop_back();
    CHECK(residue_behaviour(p, g) == ResidueBehaviour::avoided_wrong);

    SolutionRecord no_residue;
    no_residue.shares = {{{"أم", 1}, ShareValue::of(Fraction(1, 3))}};
    CHECK(residue_behaviour(no_residue, no_residue) == ResidueBehaviour::not_required);
}

TEST_CASE("aggregation reproduces the back-of-envelope batch") {
    std::vector<CaseResult> results;
    auto push = [&](MireComponents c, size_t n, const std::string& cat) {
        c.mire = weighted_score(c, MireWeights{});
        for (size_t i = 0; i < n; ++i)
            results.push_back({"case-" + std::to_string(results.size()), c, cat,
                               ErrorCategory::none, ResidueBehaviour::not_required});
    };
    // 655 perfect; 345 imperfect averaging 0.71: 173 at 0.700 and 172 at 0.720.
    push({1, 1, 1, 1, 0}, 655, "simple");
    push({1, 1, 1, 0, 0}, 173, "عول");
    push({1, 1, 0, 0.4, 0}, 172, "رد");

    AnalysisReport r = aggregate(results);
    CHECK(r.cases == 1000);
    CHECK(r.mean_mire > 0.899);
    CHECK(r.mean_mire < 0.901);
    CHECK(r.rate_h == 1.0);
    CHECK(r.rate_hs == 1.0);
    CHECK(r.rate_hsa == doctest::Approx(0.828));
    CHECK(r.rate_all == doctest::Approx(0.655));
    REQUIRE(r.per_category.size() == 3);
    CHECK(r.per_category[0].name == "simple");
    CHECK(r.per_category[0].mire == doctest::Approx(1.0));
    CHECK(r.per_category[1].name == "عول");
    CHECK(r.per_category[1].n == 173);
    CHECK(r.per_category[1].mire == doctest::Approx(0.700));
    CHECK(r.per_category[2].name == "رد");
    CHECK(r.per_category[2].mire == doctest::Approx(0.720));
    CHECK(r.error_counts.at("none") == 1000);
}

TEST_CASE("single-result aggregation and the empty-input error") {
    MireComponents c{1, 1, 1, 0, 0.7};
    std::vector<CaseResult> one = {{"x", c, "عول", ErrorCategory::calculation,
                                    ResidueBehaviour::provided}};
    AnalysisReport r = aggregate(one);
    CHECK(r.rate_h == 1.0);
    CHECK(r.rate_hs == 1.0);
    CHECK(r.rate_hsa == 1.0);
    CHECK(r.rate_all == 0.0);
    CHECK(r.residue_required == 1);
    CHECK(r.residue_provided == 1);
    CHECK(r.error_counts.at("calculation") == 1);
    CHECK_THROWS_AS(aggregate({}), AggregationError);
}

TEST_CASE("gold categories come from the adjustment field") {
    SolutionRecord g;
    g.awl_or_radd = "عول";
    CHECK(gold_category_of(g) == "عول");
    g.awl_or_radd = "رد";
    CHECK(gold_category_of(g) == "رد");
    g.awl_or_radd = "لا";
    CHECK(gold_category_of(g) == "simple");
    g.awl_or_radd = "؟؟";
    CHECK(gold_category_of(g) == "simple");
}

TEST_CASE("custom weights rescale linearly") {
    MireComponents c{1, 0.5, 1, 0.5, 0};
    MireWeights w{0.30, 0.30, 0.10, 0.30};
    MireWeights doubled{0.60, 0.60, 0.20, 0.60};
    CHECK(weighted_score(c, doubled) == doctest::Approx(2.0 * weighted_score(c, w)));
}
