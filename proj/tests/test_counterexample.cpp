#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "natree/counterexample.hpp"
#include "natree/textio.hpp"
#include "natree/tree.hpp"
#include "natree/verify.hpp"

using namespace natree;

namespace {

Series S(const char* text) { return parse_series(text); }

}  // namespace

TEST_CASE("sequence values") {
    SequenceItem it0 = sequence_item(0);
    CHECK(it0.height == 0);
    CHECK(it0.foot == Series::zero());
    CHECK(it0.level == S("1"));
    CHECK(it0.point == HPoint(Series::zero(), S("1")));

    SequenceItem it2 = sequence_item(2);
    CHECK(it2.height == rat(-3, 4));
    CHECK(it2.foot == S("X^(-1/2) + X^(-3/4)"));
    CHECK(it2.level == S("X^(-3/4)"));

    CHECK(sequence_height(3) == rat(-7, 8));
    CHECK(sequence_height(32) == rat(Int("-4294967295"), Int("4294967296")));
}

TEST_CASE("sequence monotonicity") {
    for (unsigned n = 0; n < 16; ++n) {
        SequenceItem cur = sequence_item(n);
        SequenceItem nxt = sequence_item(n + 1);
        CHECK(nxt.height < cur.height);
        CHECK(cmp(cur.foot, nxt.foot) == Order::less);
        CHECK(cmp(nxt.level, cur.level) == Order::less);
    }
}

TEST_CASE("verify_cauchy") {
    CHECK(hp_distance(sequence_item(0).point, sequence_item(1).point) == rat(1, 2));

    Report r1 = verify_cauchy(1);
    CHECK(r1.ok());
    Report r5 = verify_cauchy(5);
    CHECK(r5.ok());
    CHECK(r5.checks.at(0).witness == "15 pairs verified");
    CHECK(verify_cauchy(0).ok());  // vacuous
}

TEST_CASE("verify_vertical_identification") {
    Report r = verify_vertical_identification(Series::zero(), S("X^(-1/2)"), {});
    CHECK(r.ok());

    // identified above the merge height, separated below it
    Report r2 = verify_vertical_identification(Series::zero(), S("X^(-1/2) + X^(-3/4)"),
                                               {rat(-1, 4), Rat(-1)});
    CHECK(r2.ok());
    CHECK(r2.checks.size() == 3);
    CHECK(r2.checks.at(2).name.find("separated") == 0);

    CHECK_THROWS_AS(verify_vertical_identification(S("X"), S("X"), {}), SameSeries);
}

TEST_CASE("branching of adjacent vertical lines") {
    // exact instance below the branch: d(a_1 + i X^(-7/8), a_2 + i X^(-3/4)) = 1/8
    HPoint below(sequence_foot(1), Series::monomial(rat(-7, 8), Rat(1)));
    HPoint probe(sequence_foot(2), Series::monomial(rat(-3, 4), Rat(1)));
    CHECK(hp_distance(below, probe) == rat(1, 8));

    // branch point of lines 0 and 1 is pi(p_1) = (0, -1/2)
    TreePoint branch = median(project(HPoint(sequence_foot(0), S("X^(-3/2)"))),
                              project(HPoint(sequence_foot(1), S("X^(-3/2)"))),
                              project(sequence_item(0).point));
    CHECK(branch == parse_tree_point("0 ; -1/2"));
    CHECK(branch == project(sequence_item(1).point));

    Report r = verify_branching(6, 5, 1);
    CHECK(r.ok());
    CHECK(r.checks.size() == 6);
}

TEST_CASE("limit_constraint") {
    Series a3 = sequence_foot(3);
    CHECK(limit_constraint(a3, 4));
    CHECK(!limit_constraint(a3, 5));
    CHECK(limit_constraint(Series::zero(), 1));
    CHECK(limit_constraint(a3, 3));  // exact zero difference
    CHECK_THROWS_AS(limit_constraint(S("1").with_precision(Rat(-1)), 1), std::invalid_argument);
}

TEST_CASE("obstruction witnesses") {
    ObstructionResult zero = find_obstruction(Series::zero(), 8);
    CHECK(zero.denominator_lcm == 1);
    CHECK(zero.predicted_bound == 2);
    CHECK(zero.witness == 2u);

    ObstructionResult a3 = find_obstruction(sequence_foot(3), 8);
    CHECK(a3.denominator_lcm == 8);
    CHECK(a3.predicted_bound == 5);
    CHECK(a3.witness == 5u);

    ObstructionResult naive = find_obstruction(S("X^(-1)"), 8);
    CHECK(naive.denominator_lcm == 1);
    CHECK(naive.witness == 2u);

    Report found = obstruction_witness(sequence_foot(3), 8);
    CHECK(found.ok());
    CHECK(found.checks.at(0).witness.find("n*=5") != std::string::npos);

    // not searched far enough: reported as a skip with the predicted bound
    Report shallow = obstruction_witness(sequence_foot(3), 3);
    CHECK(shallow.checks.at(0).status == Status::skip);
    CHECK(shallow.count(Status::fail) == 0);
}

TEST_CASE("obstruction corpus") {
    Report r = verify_obstruction_corpus(32, 5);
    CHECK(r.ok());
    CHECK(r.checks.size() >= 50);
    CHECK(r.count(Status::skip) == 0);
}

TEST_CASE("verify_all at depth zero is vacuous but sound") {
    VerifyParams params;
    params.max_n = 0;
    params.samples = 10;
    params.probes_below = 2;
    params.seed = 0;
    for (const Report& section : verify_all(params)) {
        CHECK(section.count(Status::fail) == 0);
        if (section.command == "verify obstruction") CHECK(section.count(Status::skip) > 0);
    }
}

TEST_CASE("verify_all is deterministic") {
    VerifyParams params;
    params.max_n = 4;
    params.samples = 40;
    params.probes_below = 4;
    params.seed = 7;

    std::vector<Report> first = verify_all(params);
    for (const Report& section : first) CHECK(section.ok());

    std::string once = report_to_json(merge_reports(first, params));
    std::string twice = report_to_json(merge_reports(verify_all(params), params));
    CHECK(once == twice);
}
