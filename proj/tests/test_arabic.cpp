#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irth/arabic.hpp"

using namespace irth;

TEST_CASE("strip_tatweel removes every stretch character") {
    CHECK(strip_tatweel("زوجـــة") == "زوجة");
    CHECK(strip_tatweel("ـأبـ") == "أب");
    CHECK(strip_tatweel("abc") == "abc");
    CHECK(strip_tatweel("") == "");
}

TEST_CASE("fold_ya folds alef maqsura only") {
    CHECK(fold_ya("باقى") == "باقي");
    CHECK(fold_ya("باقي") == "باقي");
    CHECK(fold_ya("على") == "علي");
}

TEST_CASE("trim handles ascii and no-break spaces") {
    CHECK(trim("  أب  ") == "أب");
    CHECK(trim("\t\nزوجة\r") == "زوجة");
    CHECK(trim(" أم ") == "أم");
    CHECK(trim("") == "");
    CHECK(trim("   ") == "");
}

TEST_CASE("squeeze_spaces collapses runs") {
    CHECK(squeeze_spaces("أب   الأب") == "أب الأب");
    CHECK(squeeze_spaces("  بنت \t ابن  ") == "بنت ابن");
    CHECK(squeeze_spaces("أم الأم") == "أم الأم");
}

TEST_CASE("match_key composes the three folds") {
    CHECK(match_key("بـاقى   التركـة") == "باقي التركة");
    CHECK(match_key(" زوجــة ") == "زوجة");
    CHECK(match_key("أب الأب") == match_key("أب   الأب"));
}

TEST_CASE("tokenize splits on whitespace") {
    auto toks = tokenize(" مات وترك:  زوجة و أب ");
    REQUIRE(toks.size() == 5);
    CHECK(toks[0] == "مات");
    CHECK(toks[1] == "وترك:");
    CHECK(toks[2] == "زوجة");
    CHECK(toks[3] == "و");
    CHECK(toks[4] == "أب");
    CHECK(tokenize("").empty());
}
