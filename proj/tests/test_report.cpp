#include <doctest.h>

#include <cmath>

#include "ineqforge/report.hpp"
#include "ineqforge/sharp_constants.hpp"
#include "ineqforge/suite.hpp"

using namespace ineqforge;

TEST_CASE("verification report fields") {
    const Json j = to_json(verify_chain(builtin_registry(), "M5"));
    CHECK(j["chain"] == "M5");
    CHECK(j["verdict"] == "verified_numeric");
    CHECK(j["witness"].is_null());
    CHECK(j["config"]["samples"] == 20001);
    REQUIRE(j["links"].size() == 3);
    for (const auto& l : j["links"]) {
        CHECK(l["min_margin"].get<double>() > 0.0);
        CHECK(l["relation"] == "<");
        CHECK(l["witness"].is_null());
    }
    CHECK(j["domain"][0] == 0.0);
}

TEST_CASE("falsified reports carry a witness") {
    ChainSpec c = builtin_registry().get("M1");
    c.set_param("p", 0.6);
    const Json j = to_json(verify_chain(c));
    CHECK(j["verdict"] == "falsified");
    CHECK(j["witness"]["t"].is_number());
    CHECK(j["params"]["p"] == 0.6);
}

TEST_CASE("probe, endpoint, monotone and constant fields") {
    const Json p = to_json(probe_sharpness(builtin_registry(), find_probe("M6a:q-")));
    CHECK(p["expected_region"] == "near_zero");
    CHECK(p["falsified"] == true);
    CHECK(p["direction"] == "-");

    const Json e = to_json(verify_endpoint_limits(builtin_registry().get("M6")));
    CHECK(e["ok"] == true);
    CHECK(e["claims"][0]["side"] == "lo");
    CHECK(e["claims"][0]["deltas"].size() == 3);

    const Json m = to_json(verify_monotone("h_ratio", Direction::Increasing));
    CHECK(m["verdict"] == "monotone_numeric");
    CHECK(m["ties"].is_number_integer());

    const Json k = to_json(solve_constant(constant_specs()[0]));
    CHECK(k["kind"] == "root");
    CHECK(std::abs(k["residual"].get<double>()) < 1e-13);
}

TEST_CASE("a mutated link fails the suite and is named") {
    ChainSpec c = builtin_registry().get("M1c");
    c.relations[4] = Relation::Greater;
    ChainRegistry r;
    r.add(c);
    SuiteOptions o;
    o.config.samples = 2001;
    const SuiteResult s = run_suite(r, o);
    CHECK_FALSE(s.passed());
    bool named = false;
    for (const auto& i : s.items) {
        if (i.category == "chains" && !i.passed) named = i.detail.find("link 4") != std::string::npos;
    }
    CHECK(named);
    const Json j = to_json(s);
    CHECK(j["passed"] == false);
    CHECK(j["failures"].get<int>() >= 1);
}
