#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torus/planner.hpp"

using namespace torus;

namespace {

long long abs_delta_chi(const TorusLink& a, const TorusLink& b) {
    const long long d = a.chi() - b.chi();
    return d < 0 ? -d : d;
}

}  // namespace

TEST_CASE("rectangle cost equals the chi gap when legal") {
    // T(2,3) sits inside T(3,4) with the braid axis along the second factor
    CHECK(rectangle_cost(3, 2, 3, 4) ==
          abs_delta_chi(TorusLink(2, 3), TorusLink(3, 4)));
    CHECK(rectangle_cost(2, 2, 5, 5) == 15);
    // same braid index trim
    CHECK(rectangle_cost(3, 4, 3, 7) == 6);
    CHECK_THROWS_AS(rectangle_cost(2, 3, 3, 4), std::domain_error);
    CHECK_THROWS_AS(rectangle_cost(3, 5, 4, 4), std::domain_error);
    CHECK_THROWS_AS(rectangle_cost(5, 2, 3, 4), std::domain_error);
}

TEST_CASE("rectangle edge is direction free") {
    const TorusLink a(2, 3), b(3, 4);
    const auto fwd = rectangle_edge(a, b);
    const auto bwd = rectangle_edge(b, a);
    REQUIRE(fwd.has_value());
    REQUIRE(bwd.has_value());
    CHECK(*fwd == *bwd);
    CHECK(*fwd == abs_delta_chi(a, b));
}

TEST_CASE("split move severs the braid at a chosen strand") {
    const auto [left, right, cost] = split_move(5, 7, 2);
    CHECK(left == TorusLink(2, 7));
    CHECK(right == TorusLink(3, 7));
    CHECK(cost == 7);
    CHECK_THROWS_AS(split_move(5, 7, 0), std::domain_error);
    CHECK_THROWS_AS(split_move(5, 7, 5), std::domain_error);
}

TEST_CASE("swap plan has the advertised cost") {
    const auto p1 = prop1_plan(4, 2, 5);
    CHECK(p1.total_cost == 1);
    CHECK(p1.moves.size() == 1);
    CHECK(p1.moves[0].kind == MoveKind::Prop1Swap);
    CHECK(validate_plan(p1));

    const auto p2 = prop1_plan(3, 2, 7);
    CHECK(p2.total_cost == 4);
    CHECK(validate_plan(p2));

    // b = 1 swaps nothing
    CHECK(prop1_plan(3, 1, 5).total_cost == 0);
}

TEST_CASE("swap pattern detection works in both orders") {
    const auto m1 = prop1_match(TorusLink(8, 5), TorusLink(4, 10));
    REQUIRE(m1.has_value());
    CHECK(m1->total_cost == 1);
    CHECK(m1->start == TorusLink(5, 8));
    CHECK(m1->end == TorusLink(4, 10));
    CHECK(validate_plan(*m1));

    const auto m2 = prop1_match(TorusLink(4, 10), TorusLink(8, 5));
    REQUIRE(m2.has_value());
    CHECK(m2->total_cost == 1);
    CHECK(m2->start == TorusLink(4, 10));

    CHECK_FALSE(prop1_match(TorusLink(2, 3), TorusLink(2, 5)).has_value());
}

TEST_CASE("d_chi(T(2n,n+1), T(n,2n+2)) = 1") {
    for (long long n = 2; n <= 10; ++n) {
        const auto m = prop1_match(TorusLink(2 * n, n + 1), TorusLink(n, 2 * n + 2));
        REQUIRE(m.has_value());
        CHECK(m->total_cost == 1);
    }
}

TEST_CASE("theorem2 upper examples") {
    const auto p1 = theorem2_upper(3, 4, 7, 5);
    CHECK(p1.total_cost == 18);
    CHECK(validate_plan(p1));

    const auto p2 = theorem2_upper(2, 3, 2, 5);
    CHECK(p2.total_cost == 2);
    CHECK(validate_plan(p2));

    CHECK(theorem2_upper(2, 3, 3, 2).total_cost == 0);
}

TEST_CASE("theorem2 cost obeys the correction bound on a grid") {
    for (long long a = 1; a <= 8; ++a)
        for (long long b = a; b <= 8; ++b)
            for (long long c = 1; c <= 8; ++c)
                for (long long d = c; d <= 8; ++d) {
                    const auto plan = theorem2_upper(a, b, c, d);
                    const long long gap = abs_delta_chi(TorusLink(a, b), TorusLink(c, d));
                    CAPTURE(a); CAPTURE(b); CAPTURE(c); CAPTURE(d);
                    CHECK(plan.total_cost >= gap);
                    CHECK(plan.total_cost - gap <= 2 * (a + b + c + d));
                    CHECK(validate_plan(plan));
                }
}

TEST_CASE("theorem1 composite plan") {
    const auto plan = theorem1_plan(3, 100, 5, 27);
    CHECK(plan.total_cost == 126);
    CHECK(plan.start == TorusLink(3, 100));
    CHECK(plan.end == TorusLink(5, 27));
    CHECK(validate_plan(plan));
    CHECK_THROWS_AS(theorem1_plan(1, 5, 3, 7), std::domain_error);
    CHECK_THROWS_AS(theorem1_plan(5, 6, 3, 7), std::domain_error);
}

TEST_CASE("best upper beats or ties each strategy") {
    const auto best = best_upper(5, 8, 4, 11, 32);
    CHECK(best.total_cost == 4);
    CHECK(best.exhaustive);
    CHECK(validate_plan(best));
    CHECK(best.total_cost <= theorem2_upper(5, 8, 4, 11).total_cost);

    const auto swap = best_upper(8, 5, 4, 10, 32);
    CHECK(swap.total_cost == 1);
    CHECK(validate_plan(swap));

    const auto id = best_upper(2, 3, 3, 2, 32);
    CHECK(id.total_cost == 0);
    CHECK(id.moves.empty());
}

TEST_CASE("best upper flags skipped search") {
    const auto plan = best_upper(3, 100, 5, 27, 16);
    CHECK_FALSE(plan.exhaustive);
    CHECK(validate_plan(plan));
    CHECK(plan.total_cost <= theorem1_plan(3, 100, 5, 27).total_cost);
}

TEST_CASE("plans reverse cleanly") {
    const auto plan = theorem2_upper(3, 4, 7, 5);
    const auto rev = reverse_plan(plan);
    CHECK(rev.start == plan.end);
    CHECK(rev.end == plan.start);
    CHECK(rev.total_cost == plan.total_cost);
    CHECK(rev.moves.size() == plan.moves.size());
    CHECK(validate_plan(rev));
}

TEST_CASE("validator rejects tampered plans") {
    auto plan = theorem2_upper(3, 4, 7, 5);
    plan.total_cost += 1;
    std::vector<std::string> why;
    CHECK_FALSE(validate_plan(plan, &why));
    CHECK(!why.empty());

    auto plan2 = prop1_plan(4, 2, 5);
    plan2.moves[0].cost = 0;
    plan2.total_cost = 0;
    CHECK_FALSE(validate_plan(plan2));

    auto plan3 = theorem1_plan(3, 100, 5, 27);
    plan3.end = TorusLink(2, 3);
    CHECK_FALSE(validate_plan(plan3));
}

TEST_CASE("plan json names every move") {
    const auto plan = theorem1_plan(3, 100, 5, 27);
    const std::string json = plan_to_json(plan);
    CHECK(json.find("\"total_cost\":126") != std::string::npos);
    CHECK(json.find("\"swap\"") != std::string::npos);
    CHECK(json.find("rectangle_smoothing") != std::string::npos);
}
