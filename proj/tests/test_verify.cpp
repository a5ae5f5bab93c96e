#include "constaclass/verify.hpp"
#include "doctest.h"

using namespace constaclass;

TEST_CASE("verify: smallest lengths") {
    CHECK(smallest_length_with_degree(1, 1) == 1);
    CHECK(smallest_length_with_degree(1, 2) == 3);
    CHECK(smallest_length_with_degree(1, 3) == 7);
    CHECK(smallest_length_with_degree(2, 1) == 1);
    CHECK(smallest_length_with_degree(2, 2) == 5);
}

TEST_CASE("verify: complete-scheme suites pass") {
    VerifyOptions opt;
    opt.scheme = Scheme::Complete;
    for (auto name : {"brute-ideals", "closure", "units", "length2"}) {
        const auto r = run_suite(name, opt);
        INFO(r.to_text());
        CHECK(r.passed());
    }
}

TEST_CASE("verify: stated scheme reports the two unlisted ideals") {
    VerifyOptions opt;
    const auto r = verify_brute_ideals(opt);
    CHECK(r.failures() == 2);
    const auto js = r.to_json();
    CHECK(js["pass"] == false);
    CHECK(js["checks"][1]["expected"] == "21");
    CHECK(js["checks"][1]["actual"] == "23");
}

TEST_CASE("verify: unknown suite") { CHECK_THROWS(run_suite("nope", {})); }
