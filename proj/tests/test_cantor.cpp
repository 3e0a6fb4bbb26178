#include "doctest.h"
#include "helpers.hpp"

#include "csurf/cantor.hpp"
#include "csurf/errors.hpp"

using namespace csurf;
using tst::iv;

namespace {
SequenceSpec constant_half() {
    return parse_spec(R"js({"family": "constant", "q": "1/2"})js");
}
}

TEST_CASE("constant-1/2 levels are exact dyadics") {
    CantorTree tree = build_levels(constant_half(), 3, 128);
    CHECK(tree.depth() == 3);
    CHECK(!tree.first_degenerate.has_value());

    const CantorLevel& l0 = tree.level(0);
    CHECK(l0.left.size() == 1);
    CHECK(l0.left[0].same_endpoints(Interval::from_long(0, 128)));
    CHECK(l0.right[0].same_endpoints(Interval::from_long(1, 128)));

    const CantorLevel& l1 = tree.level(1);
    REQUIRE(l1.left.size() == 2);
    CHECK(l1.length.same_endpoints(Interval::from_ratio(1, 4, 128)));
    CHECK(l1.left[0].same_endpoints(Interval::from_long(0, 128)));
    CHECK(l1.right[0].same_endpoints(Interval::from_ratio(1, 4, 128)));
    CHECK(l1.left[1].same_endpoints(Interval::from_ratio(3, 4, 128)));
    CHECK(l1.right[1].same_endpoints(Interval::from_long(1, 128)));
    REQUIRE(l1.gap_after.size() == 1);
    CHECK(l1.gap_after[0].same_endpoints(Interval::from_ratio(1, 2, 128)));

    const CantorLevel& l2 = tree.level(2);
    REQUIRE(l2.left.size() == 4);
    CHECK(l2.length.same_endpoints(Interval::from_ratio(1, 16, 128)));
    CHECK(l2.right[1].same_endpoints(Interval::from_ratio(4, 16, 128)));
    CHECK(l2.left[1].same_endpoints(Interval::from_ratio(3, 16, 128)));
    CHECK(l2.left[2].same_endpoints(Interval::from_ratio(12, 16, 128)));
    REQUIRE(l2.gap_after.size() == 3);
    // Central gaps sit at odd positions, the inherited parent gap between
    CHECK(l2.gap_after[0].same_endpoints(Interval::from_ratio(1, 8, 128)));
    CHECK(l2.gap_after[1].same_endpoints(Interval::from_ratio(1, 2, 128)));
    CHECK(l2.gap_after[2].same_endpoints(Interval::from_ratio(1, 8, 128)));
}

TEST_CASE("adjacent gap queries") {
    CantorTree tree = build_levels(constant_half(), 2, 128);
    GapPair g11 = gaps(tree, 1, 1);
    CHECK(!g11.left.has_value());  // leftmost interval: no gap on the left
    REQUIRE(g11.right.has_value());
    CHECK(g11.right->same_endpoints(Interval::from_ratio(1, 2, 128)));

    GapPair g22 = gaps(tree, 2, 2);
    REQUIRE(g22.left.has_value());
    REQUIRE(g22.right.has_value());
    CHECK(g22.left->same_endpoints(Interval::from_ratio(1, 8, 128)));
    CHECK(g22.right->same_endpoints(Interval::from_ratio(1, 2, 128)));

    GapPair g24 = gaps(tree, 2, 4);
    REQUIRE(g24.left.has_value());
    CHECK(!g24.right.has_value());
    CHECK(g24.left->same_endpoints(Interval::from_ratio(1, 8, 128)));

    CHECK_THROWS_AS(gaps(tree, 2, 5), DomainError);
    CHECK_THROWS_AS(gaps(tree, 3, 1), DomainError);
}

TEST_CASE("disjointness nesting and symmetry on a general family") {
    SequenceSpec a = parse_spec(R"js({"family": "alternating_half_power"})js");
    CantorTree tree = build_levels(a, 6, 128);
    CHECK(!tree.first_degenerate.has_value());
    Interval one = Interval::from_long(1, 128);

    for (long n = 1; n <= 6; ++n) {
        const CantorLevel& lvl = tree.level(n);
        const CantorLevel& up = tree.level(n - 1);
        size_t count = lvl.left.size();
        REQUIRE(count == (1u << n));
        CHECK(lvl.length.is_certainly_positive());
        for (size_t i = 0; i + 1 < count; ++i) {
            CHECK(lvl.right[i].certainly_less(lvl.left[i + 1]));
        }
        for (size_t i = 0; i < count; ++i) {
            // child inside its parent
            size_t p = i / 2;
            CHECK(mpfr_lessequal_p(up.left[p].lo(), lvl.left[i].lo()));
            CHECK(mpfr_lessequal_p(lvl.right[i].hi(), up.right[p].hi()));
            // mirror symmetry of the construction
            Interval mirrored = one - lvl.right[count - 1 - i];
            CHECK(mirrored.intersects(lvl.left[i]));
        }
    }
}

TEST_CASE("degenerate levels are marked and stay sound") {
    SequenceSpec it = parse_spec(R"js({"family": "iterated_exp", "q1": "1/2"})js");
    CantorTree tree = build_levels(it, 5, 128);
    REQUIRE(tree.first_degenerate.has_value());
    CHECK(*tree.first_degenerate == 4);
    CHECK(!tree.level(3).degenerate);
    CHECK(tree.level(4).degenerate);
    CHECK(tree.level(5).degenerate);

    // Degenerate endpoints widen to the parent span but lengths stay pinned
    const CantorLevel& l4 = tree.level(4);
    CHECK(l4.length.is_certainly_positive());
    CHECK(l4.left[0].contains(tree.level(3).left[0]));
    // Non-degenerate level 3 keeps certified separation
    const CantorLevel& l3 = tree.level(3);
    for (size_t i = 0; i + 1 < l3.left.size(); ++i) {
        CHECK(l3.right[i].certainly_less(l3.left[i + 1]));
    }
}

TEST_CASE("query and depth guards") {
    CantorTree tree = build_levels(constant_half(), 2, 128);
    auto [l, r] = interval_endpoints(tree, 1, 2);
    CHECK(l.same_endpoints(Interval::from_ratio(3, 4, 128)));
    CHECK(r.same_endpoints(Interval::from_long(1, 128)));
    CHECK_THROWS_AS(interval_endpoints(tree, 1, 3), DomainError);
    CHECK_THROWS_AS(interval_endpoints(tree, 0, 2), DomainError);
    CHECK_THROWS_AS(tree.level(7), DomainError);
    CHECK_THROWS_AS(build_levels(constant_half(), 21, 128), DomainError);
    CHECK_THROWS_AS(build_levels(constant_half(), -1, 128), DomainError);
}

TEST_CASE("tree endpoints nest with precision") {
    SequenceSpec u = parse_spec(R"js({"family": "user_closed_form", "expr": "1/(n+2)"})js");
    CantorTree lo = build_levels(u, 4, 64);
    CantorTree hi = build_levels(u, 4, 128);
    for (long n = 1; n <= 4; ++n) {
        const CantorLevel& a = lo.level(n);
        const CantorLevel& b = hi.level(n);
        CHECK(a.length.contains(b.length));
        for (size_t i = 0; i < a.left.size(); ++i) {
            CHECK(a.left[i].contains(b.left[i]));
            CHECK(a.right[i].contains(b.right[i]));
        }
    }
}
