#include <doctest.h>

#include <stdexcept>

#include "essq/runner.hpp"

using namespace essq;

TEST_CASE("report json matches the documented schema and round-trips") {
    Report r;
    r.pass("a.b", "fine", {{"value", 3}});
    r.fail("a.c", "broken");
    r.info("a.d", "note");
    nlohmann::json j = r.to_json();
    REQUIRE(j.contains("checks"));
    REQUIRE(j.contains("summary"));
    CHECK(j["summary"]["pass"] == 1);
    CHECK(j["summary"]["fail"] == 1);
    CHECK(j["summary"]["info"] == 1);
    CHECK(j["checks"].size() == 3);
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("id"));
        CHECK(c.contains("status"));
        CHECK(c.contains("message"));
        CHECK(c.contains("witness"));
    }
    // round trip through text serialization of the json
    nlohmann::json back = nlohmann::json::parse(j.dump());
    CHECK(back == j);
    CHECK(!r.all_passed());
}

TEST_CASE("text rendering carries id: status lines") {
    Report r;
    r.pass("products.prop-ess10-4", "holds");
    std::string text = r.to_text();
    CHECK(text.find("products.prop-ess10-4: pass") != std::string::npos);
}

TEST_CASE("runner validates configuration") {
    Config bad;
    bad.qmax = 4;
    bad.only = {"e3"};
    CHECK_THROWS_AS((void)run_checks(bad), std::invalid_argument);
    Config unknown;
    unknown.only = {"nonsense"};
    CHECK_THROWS_AS((void)run_checks(unknown), std::invalid_argument);
    // a group-only run never builds the spectral sequence, so any window works
    Config group_only;
    group_only.qmax = 4;
    group_only.only = {"group"};
    CHECK(run_checks(group_only).all_passed());
}

TEST_CASE("identical configurations produce identical reports") {
    Config cfg;
    cfg.only = {"group", "relations"};
    Report r1 = run_checks(cfg);
    Report r2 = run_checks(cfg);
    CHECK(r1.to_text() == r2.to_text());
    CHECK(r1.to_json() == r2.to_json());
}
