#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torus/link.hpp"
#include "torus/numeric.hpp"
#include "torus/theta.hpp"

using namespace torus;

TEST_CASE("torus link normalizes parameter order") {
    CHECK(TorusLink(8, 5) == TorusLink(5, 8));
    CHECK(TorusLink(8, 5).p() == 5);
    CHECK(TorusLink(8, 5).q() == 8);
    CHECK(normalize(7, 3).p() == 3);
}

TEST_CASE("torus link rejects bad parameters") {
    CHECK_THROWS_AS(TorusLink(0, 5), std::domain_error);
    CHECK_THROWS_AS(TorusLink(3, -1), std::domain_error);
    CHECK_THROWS_AS(TorusLink(2, TorusLink::kMaxParam + 1), std::domain_error);
    CHECK_NOTHROW(TorusLink(1, TorusLink::kMaxParam));
}

TEST_CASE("component count and knot predicates") {
    CHECK(TorusLink(2, 3).component_count() == 1);
    CHECK(TorusLink(2, 3).is_knot());
    CHECK(TorusLink(4, 6).component_count() == 2);
    CHECK_FALSE(TorusLink(4, 6).is_knot());
    CHECK(TorusLink(1, 9).is_unknot());
    CHECK_FALSE(TorusLink(2, 9).is_unknot());
}

TEST_CASE("euler characteristic and 4-genus") {
    CHECK(TorusLink(2, 3).chi() == -1);
    CHECK(TorusLink(1, 5).chi() == 1);
    CHECK(TorusLink(5, 8).genus4() == Rat(14));
    CHECK(TorusLink(4, 11).genus4() == Rat(15));
    CHECK_THROWS_AS(TorusLink(4, 6).genus4(), std::domain_error);
}

TEST_CASE("links order and render") {
    CHECK(TorusLink(2, 3) < TorusLink(2, 5));
    CHECK(TorusLink(2, 9) < TorusLink(3, 4));
    CHECK(TorusLink(3, 2).str() == "T(2,3)");
}

TEST_CASE("theta accepts exactly the open unit interval") {
    CHECK_NOTHROW(Theta(1, 2));
    CHECK_NOTHROW(Theta(Rat(1, 1000000)));
    CHECK_THROWS_AS(Theta(Rat(0)), std::domain_error);
    CHECK_THROWS_AS(Theta(Rat(1)), std::domain_error);
    CHECK_THROWS_AS(Theta(Rat(3, 2)), std::domain_error);
    CHECK_THROWS_AS(Theta(Rat(-1, 2)), std::domain_error);
}

TEST_CASE("theta conjugation mirrors about 1/2") {
    CHECK(Theta(1, 6).conjugate() == Theta(5, 6));
    CHECK(Theta(1, 2).conjugate() == Theta(1, 2));
    CHECK(Theta(3, 7).conjugate().value() == Rat(4, 7));
}

TEST_CASE("rational parsing is exact and strict") {
    CHECK(parse_rational("3/6") == Rat(1, 2));
    CHECK(parse_rational("-2/4") == Rat(-1, 2));
    CHECK(parse_rational("7") == Rat(7));
    CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("rational rendering round-trips") {
    for (const char* text : {"1/2", "-3/7", "5", "0", "123456789/987654321"}) {
        const Rat r = parse_rational(text);
        CHECK(parse_rational(to_string(r)) == r);
    }
    CHECK(to_string(Rat(4, 8)) == "1/2");
    CHECK(to_string(Rat(6, 3)) == "2");
}
