#pragma once

// Mean and variance of the flaw count over three families of ordered sets:
//   all          every ordered set of length n
//   diagonal     leading term = flaws + 1 (union over k)
//   leading m    leading term m with at least m flaws (union over k >= m)
//
// The leading-m moments come from series: sum_k k rho_{m,k} and
// sum_k k(k-1) rho_{m,k}. The printed sums t(n,m), r(n,m) are exposed for
// comparison only; r(n,m) disagrees with enumeration for n >= m+3.

#include <string>

#include <json.hpp>

#include "bigint.hpp"
#include "closed_forms.hpp"
#include "enumeration.hpp"
#include "series.hpp"

namespace flawset {

struct Moments {
    Rational mean;
    Rational variance;
    friend bool operator==(const Moments&, const Moments&) = default;
};

namespace detail {

inline BigInt pow2(long e) {
    BigInt p = 1;
    p <<= static_cast<unsigned>(e);
    return p;
}

inline void require_lead_range(long n, long m, const char* what) {
    if (m < 1 || n < m + 2)
        throw PreconditionError(std::string(what) + " needs m >= 1 and n >= m+2");
}

} // namespace detail

/// mean = 2^{2n-1}/C(2n,n) - 1, variance = n - (2^{2n-1}/C(2n,n))^2.
inline Moments mean_var_all(long n) {
    detail::require_n(n, "mean_var_all");
    const Rational q(detail::pow2(2 * n - 1), central_binomial(n));
    return {q - 1, Rational(n) - q * q};
}

/// mean = 5(n-1)/(3(n+3)), variance = 4(n-1)(2n+1)(4n+7)/(9(n+3)^2(n+4)).
inline Moments mean_var_diagonal(long n) {
    detail::require_n(n, "mean_var_diagonal");
    const Rational mean(BigInt(5 * (n - 1)), BigInt(3 * (n + 3)));
    const Rational var(BigInt(4) * (n - 1) * (2 * n + 1) * (4 * n + 7),
                       BigInt(9) * (n + 3) * (n + 3) * (n + 4));
    return {mean, var};
}

/// Printed first-moment sum for the leading-m family.
inline Rational t_sum(long n, long m) {
    detail::require_lead_range(n, m, "t_sum");
    Rational s = 0;
    for (long i = 0; i <= n - m - 2; ++i) {
        const BigInt num = BigInt(m * (m + 3)) * central_binomial(i) *
                               binomial(2 * n - m - 2 - 2 * i, n - m - 2 - i) +
                           detail::pow2(2 * i) * (m + 4) *
                               binomial(2 * n - m - 3 - 2 * i, n - m - 3 - i);
        s += Rational(num, BigInt(n - i + 1));
    }
    return s;
}

/// Printed second-factorial-moment sum for the leading-m family.
inline Rational r_sum(long n, long m) {
    detail::require_lead_range(n, m, "r_sum");
    Rational s(BigInt(m * (m - 1) * (m + 4)) * binomial(2 * n - m, n - m - 2), BigInt(2 * n - m));
    for (long i = 0; i <= n - m - 2; ++i) {
        const long a = 2 * (n - i) - m - 1;
        s += Rational(BigInt(m + 5) * binomial(a, n - i - m - 3) * central_binomial(i), BigInt(a));
        const long b = 2 * (n - i - 1) - m;
        s += Rational(BigInt(m + 4) * binomial(b, n - i - m - 3) * detail::pow2(2 * i), BigInt(b));
    }
    return s;
}

/// Family size, first moment and second factorial moment, as series in y.
struct MomentSeries {
    IntSeries count;
    IntSeries first;
    IntSeries second_factorial;
};

namespace detail {

template <class Section>
MomentSeries accumulate_sections(int k_begin, int k_end, int order, Section section) {
    MomentSeries s{IntSeries::zero(order), IntSeries::zero(order), IntSeries::zero(order)};
    for (int k = k_begin; k <= k_end; ++k) {
        const auto g = section(k);
        s.count = s.count + g;
        s.first = s.first + BigInt(k) * g;
        s.second_factorial = s.second_factorial + BigInt(k) * BigInt(k - 1) * g;
    }
    return s;
}

} // namespace detail

/// Sections phi_k summed with weights 1, k, k(k-1).
inline MomentSeries all_moment_series(int order) {
    return detail::accumulate_sections(0, order, order, [&](int k) { return gf_phi_k(k, order); });
}

inline MomentSeries diagonal_moment_series(int order) {
    return detail::accumulate_sections(0, order, order,
                                       [&](int k) { return gf_varphi_k(k, order); });
}

inline MomentSeries lead_moment_series(int m, int order) {
    if (order < m + 2)
        return {IntSeries::zero(order), IntSeries::zero(order), IntSeries::zero(order)};
    return detail::accumulate_sections(m, order - 2, order,
                                       [&](int k) { return gf_rho_mk(m, k, order); });
}

/// d/dx rho_m(x,y) at x = 1 in closed form:
///   m y^{m+2} C^{m+3} / sqrt(1-4y) + y^{m+3} C^{m+4} / (1-4y).
inline IntSeries lead_first_moment_closed(int m, int order) {
    const auto c = catalan_series(order);
    const auto first = series_shift(series_mul(series_pow(c, m + 3), central_binomial_series(order)),
                                    m + 2);
    const auto second = series_shift(
        series_mul(series_pow(c, m + 4), quadruple_geometric_series(order)), m + 3);
    return BigInt(m) * first + second;
}

/// The same expression with the varphi indices as printed,
/// m varphi_{m+2}/sqrt(1-4y) + varphi_{m+3}/(1-4y);
/// the matching indices are m+1 and m+2.
inline IntSeries lead_first_moment_printed_indices(int m, int order) {
    return BigInt(m) * series_mul(gf_varphi_k(m + 2, order), central_binomial_series(order)) +
           series_mul(gf_varphi_k(m + 3, order), quadruple_geometric_series(order));
}

/// d^2/dx^2 of x^m A / (1 - xE) at x = 1, with A = y^{m+2} C^{m+4}, E = y C^2:
///   A [ m(m-1)/(1-E) + 2mE/(1-E)^2 + 2E^2/(1-E)^3 ].
inline IntSeries lead_second_factorial_closed(int m, int order) {
    const auto c = catalan_series(order);
    const auto a = series_shift(series_pow(c, m + 4), m + 2);
    const auto e = series_shift(series_pow(c, 2), 1);
    const auto inv = series_inverse(IntSeries::one(order) - e);
    const auto inv2 = series_mul(inv, inv);
    const auto inv3 = series_mul(inv2, inv);
    const auto bracket = BigInt(m) * BigInt(m - 1) * inv +
                         BigInt(2 * m) * series_mul(e, inv2) +
                         BigInt(2) * series_mul(series_mul(e, e), inv3);
    return series_mul(a, bracket);
}

namespace detail {

inline Moments moments_from(const BigInt& count, const BigInt& first, const BigInt& second_fact) {
    if (count == 0)
        return {Rational(0), Rational(0)};
    const Rational mean(first, count);
    return {mean, Rational(second_fact, count) + mean - mean * mean};
}

} // namespace detail

/// Moments at length n from precomputed leading-m sections of order >= n.
inline Moments lead_moments(const MomentSeries& s, long n, long m) {
    detail::require_lead_range(n, m, "lead_moments");
    const auto& total = s.count.coeff(static_cast<int>(n));
    if (total != binomial(2 * n - m - 1, n - m - 2))
        throw ConsistencyError("leading-m family size disagrees with C(2n-m-1, n-m-2)");
    return detail::moments_from(total, s.first.coeff(static_cast<int>(n)),
                                s.second_factorial.coeff(static_cast<int>(n)));
}

/// Series-side moments of the leading-m family (k >= m). Authoritative.
inline Moments mean_var_lead(long n, long m) {
    detail::require_lead_range(n, m, "mean_var_lead");
    return lead_moments(lead_moment_series(static_cast<int>(m), static_cast<int>(n)), n, m);
}

/// Moments as printed: t/N and r/N + t/N - (t/N)^2, N = C(2n-m-1, n-m-2).
inline Moments mean_var_lead_printed(long n, long m) {
    detail::require_lead_range(n, m, "mean_var_lead_printed");
    const Rational norm(binomial(2 * n - m - 1, n - m - 2));
    const Rational mean = t_sum(n, m) / norm;
    return {mean, r_sum(n, m) / norm + mean - mean * mean};
}

/// Central moments straight from a histogram: sum w (k - mean)^2 / sum w.
inline Moments moments_of(const FlawDistribution& d) {
    BigInt total = 0, first = 0;
    for (const auto& [k, w] : d) {
        total += w;
        first += w * k;
    }
    if (total == 0)
        return {Rational(0), Rational(0)};
    const Rational mean(first, total);
    Rational acc = 0;
    for (const auto& [k, w] : d) {
        const Rational dev = Rational(k) - mean;
        acc += Rational(w) * dev * dev;
    }
    return {mean, acc / Rational(total)};
}

/// Same histogram via raw moments: E[k^2] - E[k]^2.
inline Moments raw_moments_of(const FlawDistribution& d) {
    BigInt total = 0, first = 0, second = 0;
    for (const auto& [k, w] : d) {
        total += w;
        first += w * k;
        second += w * k * k;
    }
    if (total == 0)
        return {Rational(0), Rational(0)};
    const Rational mean(first, total);
    return {mean, Rational(second, total) - mean * mean};
}

inline Moments oracle_moments(int n, const Family& family) {
    return moments_of(flaw_distribution(n, family));
}

inline nlohmann::ordered_json stats_json(long n, const std::string& selector, const Moments& mo) {
    return {{"schema", 1},
            {"n", n},
            {"selector", selector},
            {"mean", to_string(mo.mean)},
            {"variance", to_string(mo.variance)},
            {"mean_decimal", to_decimal(mo.mean)},
            {"variance_decimal", to_decimal(mo.variance)}};
}

} // namespace flawset
