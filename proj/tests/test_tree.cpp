#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "natree/sampler.hpp"
#include "natree/textio.hpp"
#include "natree/tree.hpp"

using namespace natree;

namespace {

HPoint P(const char* text) { return parse_point(text); }
TreePoint T(const char* text) { return parse_tree_point(text); }

}  // namespace

TEST_CASE("project canonicalizes") {
    TreePoint p2 = project(P("X^(-1/2) + X^(-3/4);X^(-3/4)"));
    CHECK(p2 == T("X^(-1/2) ; -3/4"));
    // the canonical representative is at distance zero from the original point
    CHECK(hp_distance(P("X^(-1/2) + X^(-3/4);X^(-3/4)"),
                      HPoint(p2.u(), Series::monomial(p2.height(), Rat(1)))) == 0);

    CHECK(project(P("0;1")) == T("0 ; 0"));
    // a point of line 1 at height t_2 already represents pi(p_2)
    CHECK(project(P("X^(-1/2);X^(-3/4)")) == p2);
}

TEST_CASE("tree_distance") {
    CHECK(tree_distance(T("0;0"), T("0;-2")) == 2);
    CHECK(tree_distance(project(P("0;1")), project(P("X^(-1/2) + X^(-3/4);X^(-3/4)"))) ==
          rat(3, 4));
    CHECK(tree_distance(T("X^(-1/2) ; -3/4"), T("0 ; -2")) == rat(7, 4));
    CHECK(tree_distance(T("X ; 0"), T("X ; 0")) == 0);
}

TEST_CASE("merge_height") {
    CHECK(merge_height(T("0;-1"), T("0;-1")) == -1);
    CHECK(merge_height(project(P("0;X^(-2)")), project(P("X^(-1/2) + X^(-3/4);X^(-2)"))) ==
          rat(-1, 2));
    CHECK(merge_height(T("0;0"), T("0;-3")) == 0);

    Sampler smp(11);
    for (int i = 0; i < 100; ++i) {
        TreePoint a = smp.tree_point();
        TreePoint b = smp.tree_point();
        Rat h = merge_height(a, b);
        CHECK(h >= a.height());
        CHECK(h >= b.height());
        CHECK((h - a.height()) + (h - b.height()) == tree_distance(a, b));
        CHECK(segment_spec(a, b).length() == tree_distance(a, b));
    }
}

TEST_CASE("param_point") {
    TreePoint a = project(P("0;1"));
    TreePoint b = project(P("0;X^(-2)"));
    CHECK(param_point(a, b, Rat(0)) == a);
    CHECK(param_point(a, b, tree_distance(a, b)) == b);
    CHECK(param_point(a, b, rat(1, 2)) == T("0 ; -1/2"));
    CHECK_THROWS_AS(param_point(a, b, Rat(-1)), std::out_of_range);
    CHECK_THROWS_AS(param_point(a, b, Rat(5)), std::out_of_range);

    Sampler smp(13);
    for (int i = 0; i < 100; ++i) {
        TreePoint x = smp.tree_point();
        TreePoint y = smp.tree_point();
        Rat d = tree_distance(x, y);
        Rat s = d * rat(static_cast<long>(smp.below(17)), 16);
        Rat s2 = d * rat(static_cast<long>(smp.below(17)), 16);
        TreePoint m1 = param_point(x, y, s);
        TreePoint m2 = param_point(x, y, s2);
        CHECK(tree_distance(m1, m2) == abs_value(s - s2));  // exact isometry
        CHECK(tree_distance(x, m1) + tree_distance(m1, y) == d);
    }
}

TEST_CASE("gromov_product and median") {
    TreePoint p0 = project(P("0;1"));
    TreePoint p2 = project(P("X^(-1/2) + X^(-3/4);X^(-3/4)"));
    TreePoint deep = project(P("0;X^(-2)"));

    CHECK(gromov_product(p2, p2, p0) == tree_distance(p0, p2));
    CHECK(gromov_product(p2, deep, p2) == 0);
    CHECK(gromov_product(p2, deep, p0) == rat(1, 2));

    CHECK(median(p0, p0, deep) == p0);
    CHECK(median(p0, p2, deep) == T("0 ; -1/2"));
    // collinear case: the middle point by height
    CHECK(median(T("0;0"), T("0;-3"), T("0;-1")) == T("0;-1"));
}

TEST_CASE("is_on_segment") {
    TreePoint a = T("0;0");
    TreePoint b = T("0;-2");
    CHECK(is_on_segment(a, a, b));
    CHECK(is_on_segment(T("0;-1/2"), project(P("0;1")), T("0;-2")));
    CHECK(!is_on_segment(T("X^(-1/2) ; -3/4"), a, b));
}

TEST_CASE("four_point_ok") {
    TreePoint p = T("X ; 1/2");
    CHECK(four_point_ok(p, p, p, p));
    CHECK(four_point_ok(T("0;0"), T("0;-1/2"), T("X^(-1/2);-3/4"), T("X^(-1/2)+X^(-3/4);-7/8")));
    CHECK(four_point_ok(T("0;0"), T("0;-1"), T("0;-2"), T("0;-3")));
}

TEST_CASE("projection respects the quotient") {
    Sampler smp(19);
    for (int i = 0; i < 150; ++i) {
        HPoint z1 = smp.hpoint();
        HPoint z2 = smp.hpoint();
        CHECK(tree_distance(project(z1), project(z2)) == hp_distance(z1, z2));
        if (hp_distance(z1, z2) == 0) CHECK(project(z1) == project(z2));
    }
}

TEST_CASE("segment cover on random triples") {
    Sampler smp(31);
    for (int i = 0; i < 150; ++i) {
        TreePoint x = smp.tree_point();
        TreePoint y = smp.tree_point();
        TreePoint z = smp.tree_point();
        Rat s = tree_distance(y, z) * rat(static_cast<long>(smp.below(17)), 16);
        TreePoint on = param_point(y, z, s);
        CHECK((is_on_segment(on, x, y) || is_on_segment(on, x, z)));
    }
}

TEST_CASE("four point condition on random quadruples") {
    Sampler smp(37);
    for (int i = 0; i < 200; ++i) {
        CHECK(four_point_ok(smp.tree_point(), smp.tree_point(), smp.tree_point(),
                            smp.tree_point()));
    }
}
