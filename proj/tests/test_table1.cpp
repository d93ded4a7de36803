#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "flawset/table1.hpp"

using namespace flawset;

namespace {
std::string slurp(const std::string& name) {
    std::ifstream in(std::string(FLAWSET_DATA) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}
} // namespace

TEST_CASE("table matches the published values for n <= 6") {
    const auto t = build_table1(6);
    CHECK(t.agrees());
    const auto& ref = reference_table();
    REQUIRE(t.rows.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
        const auto& r = t.rows[i];
        INFO("n=" << r.n << " k=" << r.k);
        CHECK(r.n == ref[i].n);
        CHECK(r.k == ref[i].k);
        REQUIRE(r.formula.size() == ref[i].by_leading.size());
        for (std::size_t m = 0; m < r.formula.size(); ++m)
            CHECK(r.formula[m] == ref[i].by_leading[m]);
        CHECK(r.formula_total == ref[i].total);
    }
}

TEST_CASE("TSV output is byte-identical to the golden files") {
    CHECK(build_table1(6).to_tsv() == slurp("table1_n6.tsv"));
    CHECK(build_table1(8).to_tsv() == slurp("table1_n8.tsv"));
}

TEST_CASE("text and JSON forms") {
    const auto text = build_table1(6).to_text();
    CHECK(text.find("(6,3): 9, 8, 7, 20, 0 -> 44\n") != std::string::npos);
    const auto one = build_table1(1);
    REQUIRE(one.rows.size() == 1);
    CHECK(one.to_text() == "(1,0): 1, 0 -> 1\n");
    const auto j = build_table1(3).to_json();
    CHECK(j["schema"] == 1);
    CHECK(j["agrees"] == true);
    CHECK(j["rows"].size() == 6);
    CHECK_THROWS_AS(build_table1(0), InvalidInput);
    CHECK_THROWS_AS(build_table1(13), InvalidInput);
}
