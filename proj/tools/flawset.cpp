// flawset: counting, bijections, tables, verification and statistics for
// ordered k-flaw preference sets.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "flawset/flawset.hpp"

namespace {

using namespace flawset;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

/// "<=l", "≤l" or "=l".
MaxTermFilter parse_max_term(std::string s) {
    auto number = [&](std::size_t skip) {
        const std::string rest = s.substr(skip);
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            throw InvalidInput("--max-term expects <=l or =l, got '" + s + "'");
        return std::stoi(rest);
    };
    if (s.rfind("<=", 0) == 0)
        return MaxTermFilter::at_most(number(2));
    if (s.rfind("\xE2\x89\xA4", 0) == 0) // U+2264
        return MaxTermFilter::at_most(number(3));
    if (s.rfind("=", 0) == 0)
        return MaxTermFilter::exactly(number(1));
    throw InvalidInput("--max-term expects <=l or =l, got '" + s + "'");
}

struct CountArgs {
    int n = 0;
    std::optional<int> flaws, min_flaws, max_flaws, leading;
    std::optional<std::string> max_term;
    std::string method = "formula";
};

int run_count(const CountArgs& a) {
    CountQuery q;
    q.n = a.n;
    if (a.flaws)
        q.flaws = FlawFilter::exactly(*a.flaws);
    else if (a.min_flaws)
        q.flaws = FlawFilter::at_least(*a.min_flaws);
    else if (a.max_flaws)
        q.flaws = FlawFilter::at_most(*a.max_flaws);
    if (q.flaws.k < 0)
        throw InvalidInput("flaw bound must be >= 0");
    q.leading = a.leading;
    if (a.max_term)
        q.max_term = parse_max_term(*a.max_term);
    if (a.n < 1)
        throw InvalidInput("n must be >= 1");
    if (a.method != "formula" && a.n > kOracleMaxN)
        throw InvalidInput("oracle method supports n <= " + std::to_string(kOracleMaxN));

    if (a.method == "formula") {
        std::cout << count_by_formula(q) << '\n';
        return kOk;
    }
    if (a.method == "oracle") {
        std::cout << count(q) << '\n';
        return kOk;
    }
    const BigInt f = count_by_formula(q), o = count(q);
    std::cout << f << (f == o ? " = " : " != ") << o << '\n';
    return f == o ? kOk : kMismatch;
}

int run_table1(int nmax, const std::string& format) {
    const auto t = build_table1(nmax);
    if (format == "tsv")
        std::cout << t.to_tsv();
    else if (format == "json")
        std::cout << t.to_json().dump(2) << '\n';
    else
        std::cout << t.to_text();
    if (!t.agrees()) {
        for (const auto& r : t.rows)
            for (std::size_t i = 0; i < r.formula.size(); ++i)
                if (r.formula[i] != r.oracle[i])
                    std::cerr << "mismatch n=" << r.n << " k=" << r.k << " m=" << i + 1
                              << ": formula " << r.formula[i] << ", oracle " << r.oracle[i]
                              << '\n';
        return kMismatch;
    }
    return kOk;
}

int run_map(const std::string& which, const std::string& input, std::optional<int> k) {
    if (which == "zeta") {
        if (!k)
            throw InvalidInput("map zeta needs --k");
        std::cout << to_string(zeta(parse_preference_set(input), *k)) << '\n';
    } else if (which == "zeta-inv") {
        const auto x = parse_composition(input);
        if (k && *k != x.k())
            throw InvalidInput("composition lies in S_{" + std::to_string(x.n()) + "," +
                               std::to_string(x.k()) + "}, not k = " + std::to_string(*k));
        std::cout << to_string(zeta_inv(x)) << '\n';
    } else if (which == "omega") {
        std::cout << to_string(omega(parse_preference_set(input))) << '\n';
    } else {
        std::cout << to_string(omega_inv(parse_flaw_path(input))) << '\n';
    }
    return kOk;
}

int run_verify(const std::string& suite, const VerifyOptions& opt,
               const std::string& output, bool json) {
    const auto rep = run_suite(suite, opt);
    const auto j = rep.to_json();
    if (!output.empty()) {
        std::ofstream f(output);
        if (!f)
            throw InvalidInput("cannot write " + output);
        f << j.dump(2) << '\n';
    }
    if (json) {
        std::cout << j.dump(2) << '\n';
    } else {
        for (const auto& e : rep.entries)
            if (!e.pass)
                std::cout << "FAIL " << e.check << " [" << params_string(e.params)
                          << "] expected " << e.expected << ", got " << e.actual << '\n';
        std::cout << "suite " << rep.suite << ": " << rep.entries.size() << " checks, "
                  << rep.failures() << " failures, " << rep.discrepancies.size()
                  << " documented discrepancies, " << rep.wall_seconds << " s\n"
                  << (rep.pass() ? "PASS" : "FAIL") << '\n';
    }
    return rep.pass() ? kOk : kMismatch;
}

struct StatsArgs {
    int n = 0;
    std::string family = "all";
    int m = 1;
    std::string method = "closed";
    bool json = false;
};

int run_stats(const StatsArgs& a) {
    if (a.n < 1)
        throw InvalidInput("n must be >= 1");
    std::string selector = a.family;
    Family fam = Family::all();
    if (a.family == "diagonal") {
        fam = Family::diagonal();
    } else if (a.family == "leading") {
        fam = Family::leading_excess(a.m);
        selector = "leading=" + std::to_string(a.m) + ",flaws>=m";
    }
    auto closed = [&] {
        if (a.family == "all")
            return mean_var_all(a.n);
        if (a.family == "diagonal")
            return mean_var_diagonal(a.n);
        return mean_var_lead(a.n, a.m);
    };
    if (a.method != "closed" && a.n > kOracleMaxN)
        throw InvalidInput("oracle method supports n <= " + std::to_string(kOracleMaxN));

    auto print = [&](const std::string& label, const Moments& mo) {
        if (a.json) {
            auto j = stats_json(a.n, selector, mo);
            j["method"] = label;
            std::cout << j.dump(2) << '\n';
            return;
        }
        std::cout << label << " mean " << to_string(mo.mean) << " (" << to_decimal(mo.mean)
                  << ")\n"
                  << label << " variance " << to_string(mo.variance) << " ("
                  << to_decimal(mo.variance) << ")\n";
    };
    if (a.method == "closed") {
        print("closed", closed());
        return kOk;
    }
    if (a.method == "oracle") {
        print("oracle", oracle_moments(a.n, fam));
        return kOk;
    }
    const auto c = closed(), o = oracle_moments(a.n, fam);
    print("closed", c);
    print("oracle", o);
    return c == o ? kOk : kMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ordered k-flaw preference sets: counts, bijections, verification"};
    app.require_subcommand(1);

    CountArgs ca;
    auto* count_cmd = app.add_subcommand("count", "Count ordered preference sets");
    count_cmd->add_option("n", ca.n, "Length")->required();
    auto* f_exact = count_cmd->add_option("--flaws", ca.flaws, "Exactly k flaws");
    auto* f_min = count_cmd->add_option("--min-flaws", ca.min_flaws, "At least k flaws");
    auto* f_max = count_cmd->add_option("--max-flaws", ca.max_flaws, "At most k flaws");
    f_exact->excludes(f_min, f_max);
    f_min->excludes(f_max);
    count_cmd->add_option("--leading", ca.leading, "Leading term m");
    count_cmd->add_option("--max-term", ca.max_term, "Largest entry: <=l or =l");
    count_cmd->add_option("--method", ca.method)
        ->check(CLI::IsMember({"formula", "oracle", "both"}));

    int table_nmax = kReferenceTableMaxN;
    std::string table_format = "tsv";
    auto* table_cmd = app.add_subcommand("table1", "op_{n,k}^m table with row sums");
    table_cmd->add_option("--nmax", table_nmax)->check(CLI::Range(1, kOracleMaxN));
    table_cmd->add_option("--format", table_format)
        ->check(CLI::IsMember({"tsv", "json", "text"}));

    std::string map_which, map_input;
    std::optional<int> map_k;
    auto* map_cmd = app.add_subcommand("map", "Apply zeta, omega or their inverses");
    map_cmd->add_option("map", map_which)
        ->required()
        ->check(CLI::IsMember({"zeta", "zeta-inv", "omega", "omega-inv"}));
    map_cmd->add_option("input", map_input, "Comma-separated integers or U/D word")->required();
    map_cmd->add_option("--k", map_k, "Flaw parameter");

    std::string suite = "all", output;
    bool verify_json = false;
    VerifyOptions vo;
    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    verify_cmd->add_option("--suite", suite)
        ->check(CLI::IsMember({"all", "bijections", "formulas", "recurrences", "series", "stats"}));
    verify_cmd->add_option("--nmax", vo.nmax, "Oracle bound")->check(CLI::Range(1, kOracleMaxN));
    verify_cmd->add_option("--series-order", vo.series_order)->check(CLI::Range(1, 128));
    verify_cmd->add_option("--recurrence-nmax", vo.recurrence_nmax)->check(CLI::Range(1, 128));
    verify_cmd->add_option("--output", output, "Write the JSON report to a file");
    verify_cmd->add_flag("--json", verify_json, "Print the JSON report");

    std::string path_word;
    auto* path_cmd = app.add_subcommand("path", "Draw a U/D path");
    path_cmd->add_option("word", path_word)->required();

    StatsArgs sa;
    auto* stats_cmd = app.add_subcommand("stats", "Mean and variance of the flaw count");
    stats_cmd->add_option("n", sa.n)->required();
    stats_cmd->add_option("--family", sa.family)
        ->check(CLI::IsMember({"all", "diagonal", "leading"}));
    stats_cmd->add_option("--m", sa.m, "Leading term for --family leading");
    stats_cmd->add_option("--method", sa.method)
        ->check(CLI::IsMember({"closed", "oracle", "both"}));
    stats_cmd->add_flag("--json", sa.json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*count_cmd)
            return run_count(ca);
        if (*table_cmd)
            return run_table1(table_nmax, table_format);
        if (*map_cmd)
            return run_map(map_which, map_input, map_k);
        if (*verify_cmd)
            return run_verify(suite, vo, output, verify_json);
        if (*path_cmd) {
            std::cout << render_path(parse_flaw_path(path_word));
            return kOk;
        }
        if (*stats_cmd)
            return run_stats(sa);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const TruncationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ConsistencyError& e) {
        std::cerr << "internal consistency error: " << e.what() << '\n';
        return kMismatch;
    }
    return kUsage;
}
