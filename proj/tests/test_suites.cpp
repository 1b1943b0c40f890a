#include "k3z3/suites.hpp"

#include <doctest.h>

using namespace k3z3::suites;

TEST_CASE("every suite passes with default options") {
    Options opt;
    for (const std::string& name : suite_names()) {
        SuiteReport r = run_suite(name, opt);
        CHECK(r.pass());
        CHECK(!r.checks.empty());
        for (const Check& c : r.checks) {
            CHECK((c.status == "pass" || c.status == "skipped"));
            CHECK(!c.id.empty());
        }
    }
}

TEST_CASE("unknown suites are rejected") {
    Options opt;
    CHECK_THROWS_AS(run_suite("nosuch", opt), std::invalid_argument);
}

TEST_CASE("the genus suite prints the stated coefficient lines") {
    Options opt;
    opt.order = 1;
    std::string text = format_text(run_suite("genus", opt));
    CHECK(text.find("20y^-2 -128y^-1 +216 -128y +20y^2 pass") != std::string::npos);
    CHECK(text.find("2y^-1 +20 +2y pass") != std::string::npos);
}

TEST_CASE("the codes suite prints the octad count line") {
    Options opt;
    std::string text = format_text(run_suite("codes", opt));
    CHECK(text.find("weight-8 count: 759 pass") != std::string::npos);
}

TEST_CASE("JSON reports are byte-identical across runs with identical flags") {
    Options opt;
    opt.seed = 12345;
    auto a = reports_to_json({run_suite("lattices", opt), run_suite("codes", opt)}, opt);
    auto b = reports_to_json({run_suite("lattices", opt), run_suite("codes", opt)}, opt);
    CHECK(a == b);
    CHECK(a.find("\"schema\": \"k3z3-report/1\"") != std::string::npos);
}

TEST_CASE("suite results do not depend on the sampling seed") {
    for (std::uint64_t seed : {1ull, 99ull, 31337ull}) {
        Options opt;
        opt.seed = seed;
        CHECK(run_suite("codes", opt).pass());
        CHECK(run_suite("lattices", opt).pass());
    }
}
