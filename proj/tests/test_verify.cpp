#include <catch_amalgamated.hpp>

#include "flawset/verify.hpp"

using namespace flawset;

namespace {
VerifyOptions small() {
    VerifyOptions o;
    o.nmax = 5;
    o.series_order = 12;
    o.recurrence_nmax = 10;
    o.identity_nmax = 12;
    o.section_kmax = 4;
    o.stats_closed_nmax = 20;
    o.stats_series_nmax = 8;
    return o;
}
} // namespace

TEST_CASE("each suite passes at small bounds") {
    for (const auto& s : suite_names()) {
        INFO(s);
        const auto rep = run_suite(s, small());
        CHECK(rep.pass());
        CHECK(rep.failures() == 0);
        CHECK(!rep.entries.empty());
    }
}

TEST_CASE("known discrepancies are recorded, not failed") {
    const auto rec = run_suite("recurrences", small());
    CHECK(rec.discrepancies.size() == 10);
    const auto st = run_suite("stats", small());
    CHECK(!st.discrepancies.empty());
    CHECK(run_suite("bijections", small()).discrepancies.empty());
}

TEST_CASE("report JSON is sorted and versioned") {
    const auto rep = run_suite("all", small());
    const auto j = rep.to_json();
    CHECK(j["schema"] == 1);
    CHECK(j["pass"] == true);
    CHECK(j["checks"] == rep.entries.size());
    for (std::size_t i = 1; i < rep.entries.size(); ++i) {
        const auto& a = rep.entries[i - 1];
        const auto& b = rep.entries[i];
        REQUIRE(std::tie(a.check, a.params) <= std::tie(b.check, b.params));
    }
    // Same options, same report apart from timing.
    auto again = run_suite("all", small()).to_json();
    auto first = j;
    again.erase("metadata");
    first.erase("metadata");
    CHECK(again == first);
}

TEST_CASE("a failing entry flips the verdict") {
    VerificationReport rep;
    rep.add("x", {{"n", 1}}, "1", "1");
    CHECK(rep.pass());
    rep.add("x", {{"n", 2}}, "1", "2");
    CHECK(!rep.pass());
    CHECK(rep.failures() == 1);
}

TEST_CASE("bad options are rejected") {
    CHECK_THROWS_AS(run_suite("nope"), InvalidInput);
    auto o = small();
    o.nmax = 0;
    CHECK_THROWS_AS(run_suite("formulas", o), InvalidInput);
}
