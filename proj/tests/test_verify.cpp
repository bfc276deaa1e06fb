#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "torus/verify.hpp"

using namespace torus;

TEST_CASE("claim registry is complete and sorted") {
    const auto ids = list_claims();
    CHECK(ids.size() == 15);
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    for (const char* id :
         {"glm-odd", "glm-even", "lemma1-odd", "lemma1-even",
          "quasimorphism-defect", "theorem2-bound", "prop1-exactness",
          "remark1-identity", "section4-family-a", "section4-family-b",
          "first-jump", "profile-symmetry", "oracle-agreement", "slope-limits",
          "ratio-limits"}) {
        CAPTURE(id);
        CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
    }
}

TEST_CASE("unknown claim raises a usage error") {
    CHECK_THROWS_AS(run_claim("no-such-claim"), std::invalid_argument);
}

TEST_CASE("small claim scans are clean") {
    for (const char* id : {"glm-odd", "glm-even", "first-jump",
                           "profile-symmetry", "prop1-exactness",
                           "remark1-identity", "section4-family-b"}) {
        CAPTURE(id);
        const auto r = run_claim(id, 0, 2);
        CHECK(r.claim_id == id);
        CHECK(r.checked > 0);
        CHECK(r.violations.empty());
        CHECK(r.elapsed_seconds >= 0.0);
        CHECK(!r.range.empty());
    }
}

TEST_CASE("reduced ranges still pass") {
    CHECK(run_claim("lemma1-odd", 60, 2).violations.empty());
    CHECK(run_claim("lemma1-even", 60, 2).violations.empty());
    CHECK(run_claim("theorem2-bound", 12, 2).violations.empty());
    CHECK(run_claim("quasimorphism-defect", 20, 2).violations.empty());
    CHECK(run_claim("section4-family-a", 8, 2).violations.empty());
    CHECK(run_claim("slope-limits", 4, 2).violations.empty());
    CHECK(run_claim("ratio-limits", 6, 2).violations.empty());
}

TEST_CASE("results are independent of the job count") {
    for (int jobs : {1, 2, 5}) {
        const auto r = run_claim("glm-odd", 40, jobs);
        const auto base = run_claim("glm-odd", 40, 1);
        CHECK(r.checked == base.checked);
        CHECK(r.violations == base.violations);
        CHECK(r.range == base.range);
    }
}

TEST_CASE("max widens or narrows the range string") {
    const auto narrow = run_claim("first-jump", 8, 1);
    const auto wide = run_claim("first-jump", 12, 1);
    CHECK(narrow.checked < wide.checked);
    CHECK(narrow.range != wide.range);
}
