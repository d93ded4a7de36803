#pragma once

// Verification suites. Each returns a VerificationReport whose entries
// compare an expected value (ground truth) against an actual one. Printed
// formulas that are known to disagree with ground truth are recorded as
// discrepancies and do not fail the suite.

#include <chrono>
#include <functional>
#include <future>
#include <set>
#include <string>
#include <vector>

#include "bijections.hpp"
#include "closed_forms.hpp"
#include "enumeration.hpp"
#include "recurrences.hpp"
#include "report.hpp"
#include "series.hpp"
#include "statistics.hpp"
#include "table1.hpp"

namespace flawset {

struct VerifyOptions {
    int nmax = 6;              ///< oracle bound for bijections, formulas, stats
    int series_order = kDefaultSeriesOrder;
    int recurrence_nmax = 20;
    int identity_nmax = 30;    ///< formula-level identities and psi_n
    int section_kmax = 6;      ///< k, m range for generating-function sections
    int stats_closed_nmax = 50;
    int stats_lead_mmax = 4;
    int stats_series_nmax = 12;
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"bijections", "formulas", "recurrences",
                                                   "series", "stats"};
    return names;
}

namespace detail {

inline void check_bound(int n, int limit, const char* what) {
    if (n < 1 || n > limit)
        throw InvalidInput(std::string(what) + " must be in [1, " + std::to_string(limit) + "]");
}

template <class F>
VerificationReport timed(const std::string& suite, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep = body();
    rep.suite = suite;
    rep.sort();
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

/// Runs body(n) for n = 1..nmax concurrently and merges the reports.
inline VerificationReport per_n(int nmax, const std::function<VerificationReport(int)>& body) {
    std::vector<std::future<VerificationReport>> jobs;
    for (int n = 1; n <= nmax; ++n)
        jobs.push_back(std::async(std::launch::async, body, n));
    VerificationReport rep;
    for (auto& j : jobs)
        rep.absorb(j.get());
    return rep;
}

inline std::string str(long v) { return std::to_string(v); }
inline std::string str(const BigInt& v) { return v.str(); }
inline std::string str(const Rational& v) { return to_string(v); }

inline VerificationReport bijections_for(int n) {
    VerificationReport rep;
    std::vector<std::set<Composition>> images(static_cast<std::size_t>(n));
    std::vector<long> by_level(static_cast<std::size_t>(n) + 1, 0);
    long sets = 0, zeta_ok = 0, zeta_pairs = 0, omega_ok = 0, level_ok = 0;
    for (const auto& alpha : ordered_preference_sets(n)) {
        ++sets;
        const int flaws = flaw_count(alpha);
        for (int k = 0; k <= flaws; ++k) {
            ++zeta_pairs;
            const auto x = zeta(alpha, k);
            if (zeta_inv(x) == alpha)
                ++zeta_ok;
            images[static_cast<std::size_t>(k)].insert(x);
        }
        const auto p = omega(alpha);
        if (omega_inv(p) == alpha)
            ++omega_ok;
        if (flaw_level(p) == flaws)
            ++level_ok;
    }
    const Params pn{{"n", n}};
    rep.add("zeta.round_trip", pn, str(zeta_pairs), str(zeta_ok));
    rep.add("omega.round_trip", pn, str(sets), str(omega_ok));
    rep.add("omega.flaw_level_equals_flaws", pn, str(sets), str(level_ok));

    for (int k = 0; k < n; ++k) {
        const Params pk{{"n", n}, {"k", k}};
        const auto& img = images[static_cast<std::size_t>(k)];
        const auto all = compositions(n, k);
        rep.add("zeta.image_size", pk, str(op_ge(n, k)), str(static_cast<long>(img.size())));
        rep.add("zeta.image_is_S_nk", pk, "true",
                std::set<Composition>(all.begin(), all.end()) == img ? "true" : "false");
        rep.add("compositions.count", pk, str(op_ge(n, k)), str(static_cast<long>(all.size())));
        long inv_ok = 0;
        for (const auto& x : all) {
            const auto alpha = zeta_inv(x);
            if (alpha.is_ordered() && flaw_count(alpha) >= k && zeta(alpha, k) == x)
                ++inv_ok;
        }
        rep.add("zeta_inv.round_trip", pk, str(static_cast<long>(all.size())), str(inv_ok));
    }

    const auto paths = flaw_paths(n);
    long path_ok = 0;
    for (const auto& p : paths) {
        ++by_level[static_cast<std::size_t>(flaw_level(p))];
        if (omega(omega_inv(p)) == p)
            ++path_ok;
    }
    rep.add("omega_inv.round_trip", pn, str(static_cast<long>(paths.size())), str(path_ok));
    for (int k = 0; k <= n; ++k)
        rep.add("paths.d_nk", {{"n", n}, {"k", k}}, str(flaw_path_count(n, k)),
                str(by_level[static_cast<std::size_t>(k)]));
    return rep;
}

inline VerificationReport formulas_for(int n) {
    VerificationReport rep;
    const auto t = build_count_table(n);
    using FF = FlawFilter;
    using MF = MaxTermFilter;
    auto oracle = [&](FF f, std::optional<int> lead, std::optional<MF> mx) {
        return t.count({n, f, lead, mx});
    };
    for (int k = 0; k <= n; ++k) {
        const Params pk{{"n", n}, {"k", k}};
        rep.add("op_ge", pk, str(oracle(FF::at_least(k), {}, {})), str(op_ge(n, k)));
        rep.add("op_exact", pk, str(oracle(FF::exactly(k), {}, {})), str(op_exact(n, k)));
        rep.add("op_le", pk, str(oracle(FF::at_most(k), {}, {})), str(op_le(n, k)));
        for (int l = 1; l <= n; ++l) {
            const Params pl{{"n", n}, {"k", k}, {"l", l}};
            rep.add("op_ge_maxle", pl, str(oracle(FF::at_least(k), {}, MF::at_most(l))),
                    str(op_ge_maxle(n, k, l)));
            for (int m = 1; m <= n; ++m) {
                const Params pm{{"n", n}, {"k", k}, {"l", l}, {"m", m}};
                rep.add("op_ge_maxle_lead", pm, str(oracle(FF::at_least(k), m, MF::at_most(l))),
                        str(op_ge_maxle_lead(n, k, l, m)));
                rep.add("op_exact_maxle_lead", pm,
                        str(oracle(FF::exactly(k), m, MF::at_most(l))),
                        str(op_exact_maxle_lead(n, k, l, m)));
                rep.add("op_exact_maxeq_lead", pm,
                        str(oracle(FF::exactly(k), m, MF::exactly(l))),
                        str(op_exact_maxeq_lead(n, k, l, m)));
            }
        }
        for (int m = 1; m <= n; ++m)
            rep.add("op_exact_lead", {{"n", n}, {"k", k}, {"m", m}},
                    str(oracle(FF::exactly(k), m, {})), str(op_exact_lead(n, k, m)));
    }

    // Every filter combination through the query dispatcher, one entry per n.
    long queries = 0, agree = 0;
    for (auto kind : {FF::Kind::exactly, FF::Kind::at_least, FF::Kind::at_most})
        for (int k = 0; k <= n; ++k)
            for (int m = 0; m <= n; ++m)
                for (int mk = 0; mk < 3; ++mk)
                    for (int l = 1; l <= (mk == 0 ? 1 : n); ++l) {
                        CountQuery q{n, FF{kind, k}, {}, {}};
                        if (m > 0)
                            q.leading = m;
                        if (mk == 1)
                            q.max_term = MF::at_most(l);
                        else if (mk == 2)
                            q.max_term = MF::exactly(l);
                        ++queries;
                        if (t.count(q) == count_by_formula(q))
                            ++agree;
                        else
                            rep.add("count_query.mismatch", {{"n", n}}, str(t.count(q)),
                                    describe(q) + " -> " + str(count_by_formula(q)));
                    }
    rep.add("count_query", {{"n", n}}, str(queries), str(agree));
    return rep;
}

inline VerificationReport table1_reference() {
    VerificationReport rep;
    const auto built = build_table1(kReferenceTableMaxN);
    for (std::size_t r = 0; r < built.rows.size(); ++r) {
        const auto& ref = reference_table()[r];
        const auto& row = built.rows[r];
        for (std::size_t i = 0; i < ref.by_leading.size(); ++i) {
            const Params p{{"n", ref.n}, {"k", ref.k}, {"m", static_cast<long>(i) + 1}};
            rep.add("table1.formula", p, str(ref.by_leading[i]), str(row.formula[i]));
            rep.add("table1.oracle", p, str(ref.by_leading[i]), str(row.oracle[i]));
        }
        const Params p{{"n", ref.n}, {"k", ref.k}};
        rep.add("table1.row_sum.formula", p, str(ref.total), str(row.formula_total));
        rep.add("table1.row_sum.oracle", p, str(ref.total), str(row.oracle_total));
    }
    return rep;
}

inline VerificationReport formula_identities(int nmax, int lmax_n) {
    VerificationReport rep;
    for (int n = 1; n <= nmax; ++n)
        for (int k = 0; k < n; ++k) {
            const Params p{{"n", n}, {"k", k}};
            rep.add("identity.op_ge_difference", p, str(op_exact(n, k)),
                    str(op_ge(n, k) - op_ge(n, k + 1)));
            BigInt by_m = 0;
            for (int m = 1; m <= k + 1; ++m)
                by_m += op_exact_lead(n, k, m);
            rep.add("identity.sum_over_leading", p, str(op_exact(n, k)), str(by_m));
            if (n > lmax_n)
                continue;
            for (int m = 1; m <= k + 1; ++m) {
                BigInt by_l = 0;
                for (int l = k + 1; l <= n; ++l)
                    by_l += op_exact_maxeq_lead(n, k, l, m);
                rep.add("identity.sum_over_max", {{"n", n}, {"k", k}, {"m", m}},
                        str(op_exact_lead(n, k, m)), str(by_l));
            }
        }
    return rep;
}

inline void add_series(VerificationReport& rep, const std::string& check, Params base,
                       const IntSeries& expected, const IntSeries& actual) {
    const int order = std::min(expected.order(), actual.order());
    for (int i = 0; i <= order; ++i) {
        Params p = base;
        p.emplace_back("y", i);
        rep.add(check, std::move(p), str(expected.coeff(i)), str(actual.coeff(i)));
    }
}

inline IntSeries series_from(int order, const std::function<BigInt(int)>& f) {
    std::vector<BigInt> c(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i)
        c[static_cast<std::size_t>(i)] = f(i);
    return IntSeries(std::move(c));
}

} // namespace detail

inline VerificationReport verify_bijections(const VerifyOptions& o = {}) {
    detail::check_bound(o.nmax, kOracleMaxN, "nmax");
    return detail::timed("bijections", [&] { return detail::per_n(o.nmax, detail::bijections_for); });
}

inline VerificationReport verify_formulas(const VerifyOptions& o = {}) {
    detail::check_bound(o.nmax, kOracleMaxN, "nmax");
    return detail::timed("formulas", [&] {
        auto rep = detail::per_n(o.nmax, detail::formulas_for);
        rep.absorb(detail::table1_reference());
        rep.absorb(detail::formula_identities(o.identity_nmax, o.recurrence_nmax));
        return rep;
    });
}

inline VerificationReport verify_recurrences(const VerifyOptions& o = {}) {
    detail::check_bound(o.recurrence_nmax, detail::kPascalRows / 2, "recurrence nmax");
    return detail::timed("recurrences", [&] { return recurrence_report(o.recurrence_nmax); });
}

inline VerificationReport verify_series(const VerifyOptions& o = {}) {
    const int N = o.series_order;
    if (N < 1 || N > detail::kPascalRows / 2)
        throw InvalidInput("series order must be in [1, " +
                           std::to_string(detail::kPascalRows / 2) + "]");
    return detail::timed("series", [&] {
        VerificationReport rep;
        using detail::add_series;
        using detail::series_from;
        const auto c = catalan_series(N);
        const auto b = central_binomial_series(N);
        add_series(rep, "catalan.coefficients", {}, series_from(N, [](int i) { return catalan(i); }), c);
        add_series(rep, "catalan.functional_equation_residual", {}, IntSeries::zero(N),
                   catalan_residual(N));
        add_series(rep, "central_binomial.coefficients", {},
                   series_from(N, [](int i) { return binomial(2 * i, i); }), b);
        add_series(rep, "central_binomial.derivative_of_yC", {},
                   b.truncated(N - 1), series_derivative(series_shift(c, 1)));
        add_series(rep, "central_binomial.catalan_ratio", {}, b,
                   series_from(N, [&](int i) { return BigInt(i + 1) * c.coeff(i); }));

        const int K = o.section_kmax;
        for (int k = 0; k <= K; ++k) {
            const Params pk{{"k", k}};
            add_series(rep, "gf_phi_k", pk,
                       series_from(N, [&](int n) { return n ? op_exact(n, k) : BigInt(0); }),
                       gf_phi_k(k, N));
            add_series(rep, "gf_varphi_k", pk,
                       series_from(N, [&](int n) { return n ? op_exact_lead(n, k, k + 1) : BigInt(0); }),
                       gf_varphi_k(k, N));
            if (k < K)
                add_series(rep, "gf_varphi_k.recurrence", pk, gf_varphi_k(k + 1, N),
                           series_shift(series_mul(c, gf_varphi_k(k, N)), 1));
            if (k >= 1) {
                add_series(rep, "gf_rho_kk.closed_form", pk,
                           series_shift(series_pow(c, k + 4), k + 2), gf_rho_mk(k, k, N));
                add_series(rep, "gf_rho_1k.closed_form", pk,
                           series_shift(series_pow(c, 2 * k + 3), k + 2), gf_rho_mk(1, k, N));
            }
            for (int m = 1; m <= k; ++m) {
                const Params pm{{"k", k}, {"m", m}};
                add_series(rep, "gf_rho_mk", pm,
                           series_from(N, [&](int n) { return n ? op_exact_lead(n, k, m) : BigInt(0); }),
                           gf_rho_mk(m, k, N));
                if (m < k)
                    add_series(rep, "gf_rho_mk.recurrence", pm, gf_rho_mk(m, k, N),
                               series_mul(c, gf_rho_mk(m + 1, k, N)));
            }
        }

        for (int n = 1; n <= o.identity_nmax; ++n) {
            const auto psi = psi_polynomial(n);
            for (int k = 0; k <= n; ++k)
                rep.add("psi_polynomial", {{"n", n}, {"k", k}}, detail::str(op_ge(n, k)),
                        detail::str(psi.coeff(k)));
            rep.add("psi_polynomial.degree", {{"n", n}}, detail::str(long(n - 1)),
                    detail::str(long(psi.degree())));
        }
        return rep;
    });
}

inline VerificationReport verify_stats(const VerifyOptions& o = {}) {
    detail::check_bound(o.nmax, kOracleMaxN, "nmax");
    return detail::timed("stats", [&] {
        VerificationReport rep = detail::per_n(o.nmax, [](int n) {
            VerificationReport r;
            const auto t = build_count_table(n);
            auto both = [&](const std::string& check, Params p, const Moments& expected,
                            const Moments& actual) {
                p.insert(p.begin(), {"n", n});
                r.add(check + ".mean", p, detail::str(expected.mean), detail::str(actual.mean));
                r.add(check + ".variance", p, detail::str(expected.variance),
                      detail::str(actual.variance));
            };
            const auto all = t.flaw_distribution(Family::all());
            const auto diag = t.flaw_distribution(Family::diagonal());
            both("mean_var_all", {}, moments_of(all), mean_var_all(n));
            both("mean_var_diagonal", {}, moments_of(diag), mean_var_diagonal(n));
            both("variance_two_ways.all", {}, moments_of(all), raw_moments_of(all));
            both("variance_two_ways.diagonal", {}, moments_of(diag), raw_moments_of(diag));
            for (int m = 1; m <= n; ++m) {
                const auto lead = t.flaw_distribution(Family::leading(m));
                const auto excess = t.flaw_distribution(Family::leading_excess(m));
                both("variance_two_ways.leading", {{"m", m}}, moments_of(lead),
                     raw_moments_of(lead));
                both("variance_two_ways.leading_excess", {{"m", m}}, moments_of(excess),
                     raw_moments_of(excess));
                if (n >= m + 2)
                    both("mean_var_lead", {{"m", m}}, moments_of(excess), mean_var_lead(n, m));
            }
            return r;
        });

        std::vector<MomentSeries> lead_sections;
        for (int m = 1; m <= o.stats_lead_mmax; ++m)
            lead_sections.push_back(lead_moment_series(m, o.stats_closed_nmax));
        for (int n = 1; n <= o.stats_closed_nmax; ++n) {
            const Params p{{"n", n}};
            rep.add("nonnegative_variance.all", p, "true",
                    mean_var_all(n).variance >= 0 ? "true" : "false");
            rep.add("nonnegative_variance.diagonal", p, "true",
                    mean_var_diagonal(n).variance >= 0 ? "true" : "false");
            for (int m = 1; m <= o.stats_lead_mmax && n >= m + 2; ++m)
                rep.add("nonnegative_variance.lead", {{"n", n}, {"m", m}}, "true",
                        lead_moments(lead_sections[static_cast<std::size_t>(m - 1)], n, m).variance >= 0 ? "true" : "false");
        }

        const int N = o.stats_series_nmax;
        for (int m = 1; m <= o.stats_lead_mmax; ++m) {
            const auto sections = lead_moment_series(m, N);
            const Params pm{{"m", m}};
            detail::add_series(rep, "lead_first_moment.closed_form", pm, sections.first,
                               lead_first_moment_closed(m, N));
            detail::add_series(rep, "lead_second_factorial.closed_form", pm,
                               sections.second_factorial, lead_second_factorial_closed(m, N));
            const auto literal = lead_first_moment_printed_indices(m, N);
            for (int n = m + 2; n <= N; ++n) {
                const Params p{{"n", n}, {"m", m}};
                const BigInt& first = sections.first.coeff(n);
                const BigInt& second = sections.second_factorial.coeff(n);
                rep.add("t_sum", p, detail::str(Rational(first)), detail::str(t_sum(n, m)));
                const Rational r = r_sum(n, m);
                if (r != Rational(second))
                    rep.discrepancies.push_back(
                        {"r_sum", p, detail::str(r), detail::str(second),
                         "printed sum differs from [y^n] sum_k k(k-1) rho_{m,k}; "
                         "series side used for the variance"});
                if (literal.coeff(n) != first)
                    rep.discrepancies.push_back(
                        {"t_series_printed_indices", p, detail::str(literal.coeff(n)),
                         detail::str(first),
                         "m varphi_{m+2}/sqrt(1-4y) + varphi_{m+3}/(1-4y) is off by one in "
                         "the varphi index; varphi_{m+1}, varphi_{m+2} match t(n,m)"});
            }
        }
        return rep;
    });
}

inline VerificationReport run_suite(const std::string& name, const VerifyOptions& o = {}) {
    if (name == "bijections")
        return verify_bijections(o);
    if (name == "formulas")
        return verify_formulas(o);
    if (name == "recurrences")
        return verify_recurrences(o);
    if (name == "series")
        return verify_series(o);
    if (name == "stats")
        return verify_stats(o);
    if (name != "all")
        throw InvalidInput("unknown suite '" + name + "'");
    return detail::timed("all", [&] {
        std::vector<std::future<VerificationReport>> jobs;
        for (const auto& s : suite_names())
            jobs.push_back(std::async(std::launch::async, [s, &o] { return run_suite(s, o); }));
        VerificationReport rep;
        for (auto& j : jobs)
            rep.absorb(j.get());
        return rep;
    });
}

} // namespace flawset
