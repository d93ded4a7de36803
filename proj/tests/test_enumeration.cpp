#include <catch_amalgamated.hpp>

#include "flawset/closed_forms.hpp"
#include "flawset/enumeration.hpp"

using namespace flawset;

namespace {

long count_sets(int n) {
    long c = 0;
    for ([[maybe_unused]] const auto& a : ordered_preference_sets(n))
        ++c;
    return c;
}

CountQuery exact(int n, int k) { return {n, FlawFilter::exactly(k), std::nullopt, std::nullopt}; }
CountQuery at_least(int n, int k) {
    return {n, FlawFilter::at_least(k), std::nullopt, std::nullopt};
}

} // namespace

TEST_CASE("ordered sets are listed once each, lexicographically") {
    std::vector<std::string> two;
    for (const auto& a : ordered_preference_sets(2))
        two.push_back(to_string(a));
    CHECK(two == std::vector<std::string>{"1,1", "1,2", "2,2"});
    CHECK(count_sets(1) == 1);
    CHECK(count_sets(3) == 10);
    CHECK(count_sets(6) == 462);

    std::vector<PreferenceSet> five;
    for (const auto& a : ordered_preference_sets(5)) {
        CHECK(a.is_ordered());
        five.push_back(a);
    }
    CHECK(std::is_sorted(five.begin(), five.end()));
    CHECK(std::adjacent_find(five.begin(), five.end()) == five.end());
    CHECK_THROWS_AS(ordered_preference_sets(0), InvalidInput);
}

TEST_CASE("count table marginals") {
    const auto t6 = build_count_table(6);
    CHECK(t6.total() == 462);
    CHECK(t6.count({6, FlawFilter::exactly(2), 3, std::nullopt}) == 48);
    CHECK(build_count_table(5).count({5, FlawFilter::exactly(1), 2, std::nullopt}) == 28);
    CHECK(build_count_table(4).count({4, FlawFilter::exactly(3), 4, std::nullopt}) == 1);
    for (int k = 0; k < 6; ++k)
        for (int m = k + 2; m <= 6; ++m)
            for (int l = 1; l <= 6; ++l)
                CHECK(t6.at(k, m, l) == 0);
    CHECK(t6.at(-1, 1, 1) == 0);
    CHECK(t6.at(0, 7, 1) == 0);
}

TEST_CASE("filtered counts") {
    CHECK(count(at_least(6, 3)) == 55);
    CHECK(count(exact(6, 2)) == 110);
    CHECK(count({9, FlawFilter::exactly(3), 1, MaxTermFilter::exactly(9)}) == 910);
    CHECK(count({5, FlawFilter::at_least(2), std::nullopt, MaxTermFilter::at_most(3)}) == 1);
    CHECK(count({6, FlawFilter::at_least(3), std::nullopt, MaxTermFilter::at_most(4)}) == 1);
    // Contradictory filters give zero.
    CHECK(count({6, FlawFilter::exactly(0), 3, std::nullopt}) == 0);
    CHECK(count({6, FlawFilter::exactly(2), std::nullopt, MaxTermFilter::at_most(2)}) == 0);
    CHECK_THROWS_AS(build_count_table(kOracleMaxN + 1), InvalidInput);
}

TEST_CASE("flaw distributions") {
    CHECK(flaw_distribution(2, Family::all()) == FlawDistribution{{0, 2}, {1, 1}});
    CHECK(flaw_distribution(1, Family::all()) == FlawDistribution{{0, 1}});
    CHECK(flaw_distribution(6, Family::diagonal()) ==
          FlawDistribution{{0, 132}, {1, 90}, {2, 48}, {3, 20}, {4, 6}, {5, 1}});
    CHECK(flaw_distribution(6, Family::leading_excess(1)) ==
          FlawDistribution{{1, 75}, {2, 35}, {3, 9}, {4, 1}});
    CHECK(flaw_distribution(6, Family::leading(1)) ==
          FlawDistribution{{0, 132}, {1, 75}, {2, 35}, {3, 9}, {4, 1}});
}

TEST_CASE("oracle invariants for n <= 9") {
    for (int n = 1; n <= 9; ++n) {
        const auto t = build_count_table(n);
        BigInt sum = 0;
        for (int k = 0; k <= n; ++k) {
            const BigInt e = t.count(exact(n, k));
            sum += e;
            CHECK(t.count(at_least(n, k)) - t.count(at_least(n, k + 1)) == e);
            CHECK(t.count(at_least(n, k)) >= t.count(at_least(n, k + 1)));
        }
        CHECK(sum == binomial(2 * n - 1, n - 1));
        CHECK(t.count(exact(n, 0)) == catalan(n));
    }
}

TEST_CASE("serialization") {
    const auto t = build_count_table(2);
    CHECK(t.to_tsv() == "n\tk\tm\tl\tcount\n2\t0\t1\t1\t1\n2\t0\t1\t2\t1\n2\t1\t2\t2\t1\n");
    const auto j = t.to_json();
    CHECK(j["schema"] == 1);
    CHECK(j["total"] == "3");
    CHECK(j["cells"].size() == 3);
}
