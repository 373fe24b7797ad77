#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irth/taxonomy.hpp"

#include <set>

using namespace irth;

TEST_CASE("the standard table carries the full closed category set") {
    const Taxonomy& tax = Taxonomy::standard();
    CHECK(tax.all().size() == 36);
    std::set<std::string> labels;
    for (const auto& c : tax.all()) {
        CHECK(c.id >= 0);
        CHECK(!c.label.empty());
        CHECK(labels.insert(c.label).second);   // labels unique
        CHECK(&tax.by_id(c.id) == &c);
    }
    // Spot the corners of the table.
    for (const char* label :
         {"زوج", "زوجة", "أب", "أم", "ابن", "بنت", "أب أب الأب", "أم أب الأب",
          "بنت ابن ابن", "أخ لأم", "ابن ابن أخ لأب", "عم الأب لأب", "ابن عم الأب"})
        CHECK(tax.find(label) != nullptr);
}

TEST_CASE("lookup is tolerant of tatweel, spacing and ya spelling") {
    const Taxonomy& tax = Taxonomy::standard();
    CHECK(tax.resolve("زوجـــة").label == "زوجة");
    CHECK(tax.resolve("أب   الأب").label == "أب الأب");
    CHECK(tax.resolve(" بنت ابن ").label == "بنت ابن");
}

TEST_CASE("lexical variants resolve to canonical labels") {
    const Taxonomy& tax = Taxonomy::standard();
    CHECK(tax.resolve("والدة").label == "أم");
    CHECK(tax.resolve("والد").label == "أب");
    CHECK(tax.resolve("جد").label == "أب الأب");
    CHECK(tax.resolve("جدة لأم").label == "أم الأم");
    CHECK(tax.resolve("جدة لأب").label == "أم الأب");
    CHECK(tax.resolve("أخ شقيق لأبوين").label == "أخ شقيق");
}

TEST_CASE("unknown labels fail loudly") {
    const Taxonomy& tax = Taxonomy::standard();
    CHECK(tax.find("عم الأم") == nullptr);   // maternal uncle is outside the table
    CHECK(tax.find("") == nullptr);
    CHECK_THROWS_AS(tax.resolve("قريب مجهول"), TaxonomyError);
}

TEST_CASE("agnate ranks order the residuary chain") {
    const Taxonomy& tax = Taxonomy::standard();
    CHECK(tax.resolve("ابن").agnate_rank == 0);
    CHECK(tax.resolve("ابن ابن").agnate_rank == 1);
    CHECK(tax.resolve("أب").agnate_rank == 3);
    CHECK(tax.resolve("أب الأب").agnate_rank == 4);
    CHECK(tax.resolve("أخ شقيق").agnate_rank == 6);
    CHECK(tax.resolve("أخ لأب").agnate_rank == 7);
    CHECK(tax.resolve("عم لأب").agnate_rank < tax.resolve("عم الأب").agnate_rank);
    // Fixed-share-only categories stay off the chain.
    CHECK(tax.resolve("أم").agnate_rank == -1);
    CHECK(tax.resolve("بنت").agnate_rank == -1);
    CHECK(tax.resolve("أخ لأم").agnate_rank == -1);
}

TEST_CASE("classification helpers") {
    const Taxonomy& tax = Taxonomy::standard();
    CHECK(is_male_descendant(tax.resolve("ابن")));
    CHECK(is_male_descendant(tax.resolve("ابن ابن ابن")));
    CHECK(!is_male_descendant(tax.resolve("بنت")));
    CHECK(!is_male_descendant(tax.resolve("أب")));

    CHECK(is_inheriting_descendant(tax.resolve("بنت ابن")));
    CHECK(!is_inheriting_descendant(tax.resolve("أم")));

    CHECK(is_grandmother(tax.resolve("أم الأم")));
    CHECK(is_grandmother(tax.resolve("أم أب الأب")));
    CHECK(!is_grandmother(tax.resolve("أم")));
    CHECK(grandmother_generation(tax.resolve("أم الأم")) == 1);
    CHECK(grandmother_generation(tax.resolve("أم أم الأب")) == 2);
    CHECK(is_paternal_line_grandmother(tax.resolve("أم الأب")));
    CHECK(is_paternal_line_grandmother(tax.resolve("أم أب الأب")));
    CHECK(!is_paternal_line_grandmother(tax.resolve("أم الأم")));
    CHECK(!is_paternal_line_grandmother(tax.resolve("أم أم الأم")));

    CHECK(is_sibling(tax.resolve("أخ شقيق")));
    CHECK(is_sibling(tax.resolve("أخت لأم")));
    CHECK(!is_sibling(tax.resolve("ابن أخ شقيق")));
}

TEST_CASE("parse rejects malformed tables") {
    CHECK_THROWS_AS(Taxonomy::parse("heir :: فقط"), TaxonomyError);
    CHECK_THROWS_AS(Taxonomy::parse("alias :: مجهول :: لا يوجد :: x"), TaxonomyError);
    // Comments and blank lines are fine.
    Taxonomy t = Taxonomy::parse(
        "# comment\n\nheir :: زوج :: male :: spouse :: - :: husband\n");
    CHECK(t.all().size() == 1);
}
