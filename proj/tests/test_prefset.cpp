#include <catch_amalgamated.hpp>

#include "flawset/enumeration.hpp"
#include "flawset/prefset.hpp"

using namespace flawset;

TEST_CASE("parking the worked example leaves spaces 6, 7, 8 empty") {
    const PreferenceSet a({1, 1, 3, 3, 5, 9, 9, 9, 9});
    const auto out = simulate_parking(a);
    CHECK(out.flaw_count == 3);
    CHECK(out.empty_spaces == std::vector<int>{6, 7, 8});
    CHECK(flaw_count(a) == 3);
    CHECK(leading_term(a) == 1);
    CHECK(max_term(a) == 9);
    CHECK(is_ordered(a));
}

TEST_CASE("parking small cases") {
    CHECK(simulate_parking(PreferenceSet({1, 2, 3, 4, 5})).flaw_count == 0);
    CHECK(simulate_parking(PreferenceSet({1, 2, 3, 4, 5})).empty_spaces.empty());

    const auto out = simulate_parking(PreferenceSet({3, 3, 3}));
    CHECK(out.flaw_count == 2);
    CHECK(out.empty_spaces == std::vector<int>{1, 2});
    REQUIRE(out.assignment.size() == 3);
    CHECK(out.assignment[0] == 3);
    CHECK_FALSE(out.assignment[1].has_value());
    CHECK_FALSE(out.assignment[2].has_value());

    CHECK(flaw_count(PreferenceSet({2, 2})) == 1);
    for (int n = 1; n <= 7; ++n)
        CHECK(flaw_count(PreferenceSet(std::vector<int>(static_cast<std::size_t>(n), n))) == n - 1);
}

TEST_CASE("unordered input is accepted by the simulator") {
    const auto out = simulate_parking(PreferenceSet({2, 1}));
    CHECK(out.flaw_count == 0);
    CHECK(out.assignment[0] == 2);
    CHECK(out.assignment[1] == 1);
    CHECK_FALSE(is_ordered(PreferenceSet({2, 1})));
}

TEST_CASE("specification and its inverse") {
    const PreferenceSet a({1, 1, 3, 3, 5, 9, 9, 9, 9});
    const auto r = specification(a);
    CHECK(std::vector<int>(r.counts().begin(), r.counts().end()) ==
          std::vector<int>{2, 0, 2, 0, 1, 0, 0, 0, 4});
    CHECK(from_specification(Specification({2, 0, 2, 0, 1, 0, 0, 0, 4})) == a);
    CHECK(to_string(specification(PreferenceSet({2, 2}))) == "0,2");
    CHECK(to_string(from_specification(Specification({0, 2}))) == "2,2");
    CHECK(to_string(from_specification(Specification({1, 1, 1, 1}))) == "1,2,3,4");
}

TEST_CASE("invalid input is rejected") {
    CHECK_THROWS_AS(PreferenceSet(std::vector<int>{}), InvalidInput);
    CHECK_THROWS_AS(PreferenceSet({0, 1}), InvalidInput);
    CHECK_THROWS_AS(PreferenceSet({1, 3}), InvalidInput);
    CHECK_THROWS_AS(Specification({1, 1, 0}), InvalidInput);
    CHECK_THROWS_AS(Specification({3, -1, 0}), InvalidInput);
    CHECK_THROWS_AS(parse_preference_set("1,,2"), InvalidInput);
    CHECK_THROWS_AS(parse_preference_set("1,x"), InvalidInput);
    CHECK_THROWS_AS(parse_preference_set(""), InvalidInput);
}

TEST_CASE("serialization round trip") {
    const auto a = parse_preference_set("1,1,3,3,5,9,9,9,9");
    CHECK(to_string(a) == "1,1,3,3,5,9,9,9,9");
    CHECK(parse_int_list("4") == std::vector<int>{4});
}

TEST_CASE("properties over every ordered set with n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& a : ordered_preference_sets(n)) {
            const auto r = specification(a);
            REQUIRE(from_specification(r) == a);
            const auto out = simulate_parking(a);
            // Flaw count equals the deficiency max(0, max_i (i - sum_{j<=i} r_j)).
            REQUIRE(out.flaw_count == deficiency(r));
            REQUIRE(out.flaw_count == static_cast<int>(out.empty_spaces.size()));
            REQUIRE(out.flaw_count <= n - 1);
            std::vector<int> used;
            for (const auto& s : out.assignment)
                if (s)
                    used.push_back(*s);
            std::sort(used.begin(), used.end());
            REQUIRE(std::adjacent_find(used.begin(), used.end()) == used.end());
            if (out.flaw_count == 0) {
                int prefix = 0;
                for (int i = 1; i <= n; ++i) {
                    prefix += r.at(i);
                    REQUIRE(prefix >= i);
                }
            }
        }
    }
}

TEST_CASE("flaw count of unordered sets stays in [0, n-1]") {
    const auto d = unordered_flaw_distribution(5);
    BigInt total = 0;
    for (const auto& [k, c] : d) {
        CHECK(k >= 0);
        CHECK(k <= 4);
        total += c;
    }
    CHECK(total == 3125);
    // Parking functions of length n number (n+1)^{n-1}.
    CHECK(d.at(0) == 1296);
}
