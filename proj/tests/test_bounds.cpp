#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torus/bounds.hpp"

using namespace torus;

TEST_CASE("chi gap") {
    CHECK(delta_chi(TorusLink(2, 3), TorusLink(2, 3)) == 0);
    CHECK(delta_chi(TorusLink(2, 3), TorusLink(3, 4)) == 4);
    CHECK(delta_chi(TorusLink(3, 4), TorusLink(2, 3)) == 4);
    CHECK(delta_chi(TorusLink(5, 8), TorusLink(4, 11)) == 2);
}

TEST_CASE("signature sup gap with witness") {
    const auto [sup, witness] = delta_sigma_sup(TorusLink(2, 3), TorusLink(2, 7));
    CHECK(sup == 4);
    const long long diff = signature_at(TorusLink(2, 3), witness) -
                           signature_at(TorusLink(2, 7), witness);
    CHECK(std::abs(diff) == 4);

    const auto same = delta_sigma_sup(TorusLink(3, 5), TorusLink(3, 5));
    CHECK(same.first == 0);
}

TEST_CASE("tau dominates both gaps") {
    for (auto [a, b, c, d] : {std::array<long long, 4>{5, 8, 4, 11},
                              {2, 3, 2, 7}, {6, 7, 3, 14}, {2, 3, 3, 4}}) {
        const TorusLink K(a, b), L(c, d);
        const long long t = tau(K, L);
        CHECK(t >= delta_chi(K, L));
        CHECK(t >= delta_sigma_sup(K, L).first);
        CHECK(t == std::max(delta_chi(K, L), delta_sigma_sup(K, L).first));
    }
}

TEST_CASE("tau is symmetric") {
    CHECK(tau(TorusLink(5, 8), TorusLink(4, 11)) ==
          tau(TorusLink(4, 11), TorusLink(5, 8)));
    CHECK(tau(TorusLink(2, 3), TorusLink(2, 3)) == 0);
}

TEST_CASE("report for the flat-ball pair") {
    const auto rep = report(5, 8, 4, 11, 32);
    CHECK(rep.delta_chi == 2);
    CHECK(rep.tau >= 2);
    CHECK(rep.upper == 4);
    CHECK(rep.tau <= rep.upper);
    CHECK(validate_plan(rep.plan));
    CHECK(rep.f_interval.first >= 0);
    CHECK(rep.f_interval.second == rep.upper - rep.delta_chi);
    REQUIRE(rep.witness_theta.has_value());
}

TEST_CASE("report where the swap is sharp") {
    const auto rep = report(6, 7, 3, 14, 32);
    CHECK(rep.tau == 4);
    CHECK(rep.upper == 4);
    REQUIRE(rep.gamma_ratio.has_value());
    CHECK(*rep.gamma_ratio == Rat(1));
}

TEST_CASE("report of a pair with itself is all zeros") {
    const auto rep = report(2, 3, 2, 3, 32);
    CHECK(rep.delta_chi == 0);
    CHECK(rep.delta_sigma_sup == 0);
    CHECK(rep.tau == 0);
    CHECK(rep.upper == 0);
    CHECK(rep.plan.moves.empty());
}

TEST_CASE("report json carries the schema fields") {
    const std::string json = report_to_json(report(5, 8, 4, 11, 32));
    for (const char* key : {"\"pair\"", "\"delta_chi\"",
                            "\"delta_sigma_sup\"", "\"tau\"", "\"upper\"",
                            "\"plan\"", "\"f_interval\"", "\"witness_theta\""}) {
        CAPTURE(key);
        CHECK(json.find(key) != std::string::npos);
    }
}

TEST_CASE("upper bound respects the chi gap on a small grid") {
    for (long long a = 1; a <= 5; ++a)
        for (long long b = a; b <= 6; ++b)
            for (long long c = 1; c <= 5; ++c)
                for (long long d = c; d <= 6; ++d) {
                    const auto rep = report(a, b, c, d, 24);
                    CAPTURE(a); CAPTURE(b); CAPTURE(c); CAPTURE(d);
                    CHECK(rep.tau <= rep.upper);
                    CHECK(rep.upper >= rep.delta_chi);
                }
}
