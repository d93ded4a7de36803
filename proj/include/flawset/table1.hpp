#pragma once

// The op_{n,k}^m table: one row per (n, k) with 0 <= k < n, columns
// m = 1..k+2 and the row sum op_{n,k}. Each cell is computed twice, from
// the closed forms and by enumeration.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "closed_forms.hpp"
#include "enumeration.hpp"

namespace flawset {

inline constexpr int kReferenceTableMaxN = 6;

struct ReferenceRow {
    int n;
    int k;
    std::vector<long> by_leading; ///< m = 1..k+2
    long total;
};

/// Published values for n <= 6, transcribed cell by cell.
inline const std::vector<ReferenceRow>& reference_table() {
    static const std::vector<ReferenceRow> rows = {
        {1, 0, {1, 0}, 1},
        {2, 0, {2, 0}, 2},
        {2, 1, {0, 1, 0}, 1},
        {3, 0, {5, 0}, 5},
        {3, 1, {1, 3, 0}, 4},
        {3, 2, {0, 0, 1, 0}, 1},
        {4, 0, {14, 0}, 14},
        {4, 1, {5, 9, 0}, 14},
        {4, 2, {1, 1, 4, 0}, 6},
        {4, 3, {0, 0, 0, 1, 0}, 1},
        {5, 0, {42, 0}, 42},
        {5, 1, {20, 28, 0}, 48},
        {5, 2, {7, 6, 14, 0}, 27},
        {5, 3, {1, 1, 1, 5, 0}, 8},
        {5, 4, {0, 0, 0, 0, 1, 0}, 1},
        {6, 0, {132, 0}, 132},
        {6, 1, {75, 90, 0}, 165},
        {6, 2, {35, 27, 48, 0}, 110},
        {6, 3, {9, 8, 7, 20, 0}, 44},
        {6, 4, {1, 1, 1, 1, 6, 0}, 10},
        {6, 5, {0, 0, 0, 0, 0, 1, 0}, 1},
    };
    return rows;
}

struct Table1Row {
    int n;
    int k;
    std::vector<BigInt> formula; ///< m = 1..k+2
    std::vector<BigInt> oracle;
    BigInt formula_total;
    BigInt oracle_total;

    bool agrees() const { return formula == oracle && formula_total == oracle_total; }
};

struct Table1 {
    std::vector<Table1Row> rows;

    bool agrees() const {
        for (const auto& r : rows)
            if (!r.agrees())
                return false;
        return true;
    }

    /// Header `n k m count_formula count_oracle`; m is `sum` on the row-total line.
    std::string to_tsv() const {
        std::ostringstream os;
        os << "n\tk\tm\tcount_formula\tcount_oracle\n";
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.formula.size(); ++i)
                os << r.n << '\t' << r.k << '\t' << i + 1 << '\t' << r.formula[i] << '\t'
                   << r.oracle[i] << '\n';
            os << r.n << '\t' << r.k << "\tsum\t" << r.formula_total << '\t' << r.oracle_total
               << '\n';
        }
        return os.str();
    }

    /// `(6,3): 9, 8, 7, 20, 0 -> 44`, one line per row, formula values.
    /// Rows where the oracle disagrees carry a trailing `!= oracle ...`.
    std::string to_text() const {
        std::ostringstream os;
        for (const auto& r : rows) {
            os << '(' << r.n << ',' << r.k << "): ";
            for (std::size_t i = 0; i < r.formula.size(); ++i)
                os << (i ? ", " : "") << r.formula[i];
            os << " -> " << r.formula_total;
            if (!r.agrees()) {
                os << "  != oracle ";
                for (std::size_t i = 0; i < r.oracle.size(); ++i)
                    os << (i ? ", " : "") << r.oracle[i];
                os << " -> " << r.oracle_total;
            }
            os << '\n';
        }
        return os.str();
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json f = nlohmann::ordered_json::array();
            nlohmann::ordered_json o = nlohmann::ordered_json::array();
            for (const auto& v : r.formula)
                f.push_back(v.str());
            for (const auto& v : r.oracle)
                o.push_back(v.str());
            list.push_back({{"n", r.n},
                            {"k", r.k},
                            {"formula", std::move(f)},
                            {"oracle", std::move(o)},
                            {"formula_total", r.formula_total.str()},
                            {"oracle_total", r.oracle_total.str()}});
        }
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["agrees"] = agrees();
        j["rows"] = std::move(list);
        return j;
    }
};

/// Rows for 1 <= n <= n_max; n_max is bounded by the oracle.
inline Table1 build_table1(int n_max) {
    if (n_max < 1 || n_max > kOracleMaxN)
        throw InvalidInput("table1 supports 1 <= nmax <= " + std::to_string(kOracleMaxN));
    Table1 t;
    for (int n = 1; n <= n_max; ++n) {
        const auto oracle = build_count_table(n);
        for (int k = 0; k < n; ++k) {
            Table1Row row{n, k, {}, {}, op_exact(n, k), 0};
            for (int m = 1; m <= k + 2; ++m) {
                row.formula.push_back(op_exact_lead(n, k, m));
                row.oracle.push_back(oracle.count({n, FlawFilter::exactly(k), m, std::nullopt}));
            }
            row.oracle_total = oracle.count({n, FlawFilter::exactly(k), std::nullopt, std::nullopt});
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

} // namespace flawset
