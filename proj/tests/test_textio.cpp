#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "natree/sampler.hpp"
#include "natree/textio.hpp"

using namespace natree;

TEST_CASE("parse_series on the grammar") {
    CHECK(parse_series("X^(-1/2) + X^(-3/4)") ==
          make_series({{rat(-1, 2), Rat(1)}, {rat(-3, 4), Rat(1)}}));
    CHECK(parse_series("0") == Series::zero());
    CHECK(parse_series("2*X - X - X") == Series::zero());
    CHECK(parse_series("  3/2 * X ^ ( -7 / 8 )  ") == Series::monomial(rat(-7, 8), rat(3, 2)));
    CHECK(parse_series("X^2") == Series::monomial(Rat(2), Rat(1)));   // bare integer exponent
    CHECK(parse_series("X^-2") == Series::monomial(Rat(-2), Rat(1)));
    CHECK(parse_series("-X + 1") == make_series({{Rat(1), Rat(-1)}, {Rat(0), Rat(1)}}));
    CHECK(parse_series("5/10") == Series::constant(rat(1, 2)));
}

TEST_CASE("parse_series errors carry byte offsets") {
    CHECK_THROWS_AS(parse_series("X^"), SyntaxError);
    CHECK_THROWS_AS(parse_series("1 +"), SyntaxError);
    CHECK_THROWS_AS(parse_series("X X"), SyntaxError);
    CHECK_THROWS_AS(parse_series(""), SyntaxError);
    CHECK_THROWS_AS(parse_series("X^(1/0)"), ZeroDenominator);
    CHECK_THROWS_AS(parse_series("1/0"), ZeroDenominator);

    try {
        parse_series("X + $");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.offset == 4);
    }
    try {
        parse_series("X^(3/0)");
        FAIL("expected ZeroDenominator");
    } catch (const ZeroDenominator& e) {
        CHECK(e.offset == 5);
    }
}

TEST_CASE("format_series canonical output") {
    CHECK(format_series(parse_series("X^(-3/4) + X^(-1/2)")) == "X^(-1/2) + X^(-3/4)");
    CHECK(format_series(parse_series("1+X")) == "X + 1");
    CHECK(format_series(Series::zero()) == "0");
    CHECK(format_series(parse_series("-X + 1")) == "-X + 1");
    CHECK(format_series(parse_series("3*X^(2) - 1/2*X")) == "3*X^(2) - 1/2*X");
    CHECK(format_series(Series::constant(Rat(1)).with_precision(Rat(-2))) == "1 + O(X^(-2))");
    CHECK(format_series(Series::zero().with_precision(Rat(0))) == "O(X^(0))");
}

TEST_CASE("round trip on random exact series") {
    Sampler smp(7);
    for (int i = 0; i < 300; ++i) {
        Series s = smp.series(6);
        CAPTURE(format_series(s));
        CHECK(parse_series(format_series(s)) == s);
    }
}

TEST_CASE("format then parse is idempotent on grammar strings") {
    for (const char* text : {"1+X", "2*X - X - X", "-3/4", "X^(-1/2)+X^(-1/2)"}) {
        Series once = parse_series(text);
        CHECK(parse_series(format_series(once)) == once);
    }
}

TEST_CASE("points and tree points") {
    HPoint z = parse_point("X^(-1/2) + X^(-3/4) ; X^(-3/4)");
    CHECK(z.x() == parse_series("X^(-1/2) + X^(-3/4)"));
    CHECK(format_point(z) == "X^(-1/2) + X^(-3/4) ; X^(-3/4)");
    CHECK_THROWS_AS(parse_point("0;0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_point("0"), SyntaxError);

    TreePoint p = parse_tree_point("X^(-1/2) ; -3/4");
    CHECK(p.height() == rat(-3, 4));
    CHECK(format_tree_point(p) == "X^(-1/2) ; -3/4");
    // canonicalized on input
    CHECK(parse_tree_point("X^(-1/2) + X^(-2) ; -3/4") == p);
}

TEST_CASE("report JSON schema and stability") {
    Report r;
    r.command = "verify cauchy";
    r.param("max_n", "4");
    r.add("pairwise rate", Status::pass, "10 pairs verified");
    r.add("broken thing", Status::fail, "n=1");
    r.add("unreachable", Status::skip, "bound 40");

    std::string doc = report_to_json(r);
    CHECK(doc ==
          "{\n"
          "  \"command\": \"verify cauchy\",\n"
          "  \"params\": {\n"
          "    \"max_n\": \"4\"\n"
          "  },\n"
          "  \"checks\": [\n"
          "    {\n"
          "      \"name\": \"pairwise rate\",\n"
          "      \"status\": \"pass\",\n"
          "      \"witness\": \"10 pairs verified\"\n"
          "    },\n"
          "    {\n"
          "      \"name\": \"broken thing\",\n"
          "      \"status\": \"fail\",\n"
          "      \"witness\": \"n=1\"\n"
          "    },\n"
          "    {\n"
          "      \"name\": \"unreachable\",\n"
          "      \"status\": \"skip\",\n"
          "      \"witness\": \"bound 40\"\n"
          "    }\n"
          "  ],\n"
          "  \"summary\": {\n"
          "    \"pass\": 1,\n"
          "    \"fail\": 1,\n"
          "    \"skip\": 1\n"
          "  }\n"
          "}\n");
    CHECK(report_to_json(r) == doc);
    CHECK(!r.ok());
}
