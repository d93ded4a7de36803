#include <catch_amalgamated.hpp>

#include "flawset/recurrences.hpp"

using namespace flawset;

TEST_CASE("worked instances") {
    const auto e1 = recurrence::leading_diagonal(5, 1);
    CHECK(e1.lhs == 48);
    CHECK(op_exact_lead(5, 1, 2) == 28);
    CHECK(op_exact_lead(5, 2, 2) == 6);
    CHECK(op_exact_lead(5, 2, 3) == 14);
    CHECK(e1.pass());

    const auto e3 = recurrence::leading_convolution(6, 2, 1);
    CHECK(e3.lhs == 35);
    CHECK(e3.pass());

    const auto conv = recurrence::flaw_convolution(6, 2);
    CHECK(conv.lhs == 110);
    CHECK(conv.rhs == 110);
}

TEST_CASE("all identities hold for n <= 20") {
    const auto checks = check_recurrences(20);
    CHECK(checks.size() > 1000);
    for (const auto& c : checks) {
        INFO(c.identity << " " << params_string(c.params));
        REQUIRE(c.pass());
    }
}

TEST_CASE("the flaw convolution fails at k = 0") {
    for (long n = 1; n <= 10; ++n) {
        const auto c = recurrence::flaw_convolution(n, 0);
        CHECK(c.lhs == catalan(n));
        CHECK(c.rhs == 0);
    }
    const auto rep = recurrence_report(8);
    CHECK(rep.pass());
    CHECK(rep.discrepancies.size() == 8);
}

TEST_CASE("recurrence JSON shape") {
    const auto j = recurrence::leading_diagonal(5, 1).to_json();
    CHECK(j["identity"] == "leading_diagonal");
    CHECK(j["parameters"]["n"] == 5);
    CHECK(j["lhs"] == "48");
    CHECK(j["rhs"] == "48");
    CHECK(j["pass"] == true);
}
