#pragma once

// Closed-form counts of ordered preference sets, exact in BigInt.
//
// Naming: op_<flaws>[_max<le|eq>][_lead]
//   ge / exact / le   at least k, exactly k, at most k flaws
//   maxle / maxeq     every entry <= l / largest entry == l
//   lead              leading term a_1 == m
//
// Every function returns 0 outside its meaningful parameter range; only
// n <= 0 is rejected. Fractional forms are divided exactly and throw
// ConsistencyError if the quotient is not an integer.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "query.hpp"

namespace flawset {

namespace detail {

inline constexpr long kPascalRows = 256;

/// Rows 0..kPascalRows-1 of Pascal's triangle, built on first use.
inline const std::vector<std::vector<BigInt>>& pascal() {
    static const std::vector<std::vector<BigInt>> rows = [] {
        std::vector<std::vector<BigInt>> t(kPascalRows);
        for (long a = 0; a < kPascalRows; ++a) {
            t[a].resize(static_cast<std::size_t>(a) + 1);
            t[a][0] = t[a][a] = 1;
            for (long b = 1; b < a; ++b)
                t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
        }
        return t;
    }();
    return rows;
}

inline void require_n(long n, const char* what) {
    if (n < 1)
        throw InvalidInput(std::string(what) + ": n must be >= 1");
}

} // namespace detail

/// C(a, b); zero when a < 0, b < 0 or b > a.
inline BigInt binomial(long a, long b) {
    if (a < 0 || b < 0 || b > a)
        return 0;
    if (a < detail::kPascalRows)
        return detail::pascal()[a][b];
    b = std::min(b, a - b);
    BigInt r = 1;
    for (long i = 1; i <= b; ++i)
        r = r * (a - b + i) / i;
    return r;
}

inline BigInt catalan(long n) {
    if (n < 0)
        return 0;
    return exact_div(binomial(2 * n, n), n + 1, "catalan");
}

inline BigInt central_binomial(long n) { return binomial(2 * n, n); }

/// Ordered sets of length n with at least k flaws: C(2n-1, n-1-k).
inline BigInt op_ge(long n, long k) {
    detail::require_n(n, "op_ge");
    if (k < 0)
        return 0;
    return binomial(2 * n - 1, n - 1 - k);
}

/// Exactly k flaws: (k+1)/n * C(2n, n-k-1).
inline BigInt op_exact(long n, long k) {
    detail::require_n(n, "op_exact");
    if (k < 0 || k > n - 1)
        return 0;
    return exact_div((k + 1) * binomial(2 * n, n - k - 1), n, "op_exact");
}

/// d_{n,k}: U/D paths of semilength n whose minimum height is exactly -k.
inline BigInt flaw_path_count(long n, long k) { return op_exact(n, k); }

/// At most k flaws: C(2n-1, n-1) - C(2n-1, n-k-2).
inline BigInt op_le(long n, long k) {
    detail::require_n(n, "op_le");
    if (k < 0)
        return 0;
    return binomial(2 * n - 1, n - 1) - binomial(2 * n - 1, n - k - 2);
}

/// At least k flaws, entries <= l: C(n+l-1, l-k-1) for k+1 <= l <= n.
inline BigInt op_ge_maxle(long n, long k, long l) {
    detail::require_n(n, "op_ge_maxle");
    if (k < 0 || l > n || l <= k)
        return 0;
    return binomial(n + l - 1, l - k - 1);
}

/// At least k flaws, entries <= l, leading term m.
///   m = k+1:  C(n+l-k-2, l-k-1)
///   m <= k:   C(n+l-m-1, l-k-2)
/// A set with leading term m has at least m-1 flaws, so for m > k+1 the flaw
/// bound is vacuous and the m = (m-1)+1 case applies.
inline BigInt op_ge_maxle_lead(long n, long k, long l, long m) {
    detail::require_n(n, "op_ge_maxle_lead");
    if (k < 0 || m < 1 || l > n)
        return 0;
    if (m > k + 1)
        k = m - 1;
    if (l <= k)
        return 0;
    if (m == k + 1)
        return binomial(n + l - k - 2, l - k - 1);
    return binomial(n + l - m - 1, l - k - 2);
}

/// Exactly k flaws, entries <= l, leading term m.
///   m = k+1:  (n-l+k+2)/(n+1) * C(n+l-k-1, l-k-1)
///   m <= k:   (n-l+2k-m+4)/(n-m+k+2) * C(n+l-m-1, l-k-2)
inline BigInt op_exact_maxle_lead(long n, long k, long l, long m) {
    detail::require_n(n, "op_exact_maxle_lead");
    if (k < 0 || k > n - 1 || l <= k || l > n || m < 1 || m > k + 1)
        return 0;
    if (m == k + 1)
        return exact_div((n - l + k + 2) * binomial(n + l - k - 1, l - k - 1), n + 1,
                         "op_exact_maxle_lead");
    return exact_div((n - l + 2 * k - m + 4) * binomial(n + l - m - 1, l - k - 2),
                     n - m + k + 2, "op_exact_maxle_lead");
}

/// Exactly k flaws, leading term m.
///   m = k+1:  (k+2)/(n+1) * C(2n-k-1, n-k-1)
///   m <= k:   (2k-m+4)/(2n-m) * C(2n-m, n-k-2)
inline BigInt op_exact_lead(long n, long k, long m) {
    detail::require_n(n, "op_exact_lead");
    if (k < 0 || k > n - 1 || m < 1 || m > k + 1)
        return 0;
    if (m == k + 1)
        return exact_div((k + 2) * binomial(2 * n - k - 1, n - k - 1), n + 1, "op_exact_lead");
    return exact_div((2 * k - m + 4) * binomial(2 * n - m, n - k - 2), 2 * n - m,
                     "op_exact_lead");
}

/// Exactly k flaws, largest entry exactly l, leading term m.
///   m = k+1:  (n-l+k+1)/(n+l-k-1) * C(n+l-k-1, l-k-1)
///   m <= k:   ((n-l+2k-m+4)(n-m+k+1) - (l-k-2)) / ((n-m+k+2)(n+l-m-1))
///             * C(n+l-m-1, l-k-2)
inline BigInt op_exact_maxeq_lead(long n, long k, long l, long m) {
    detail::require_n(n, "op_exact_maxeq_lead");
    if (k < 0 || k > n - 1 || l <= k || l > n || m < 1 || m > k + 1)
        return 0;
    if (m == k + 1)
        return exact_div((n - l + k + 1) * binomial(n + l - k - 1, l - k - 1), n + l - k - 1,
                         "op_exact_maxeq_lead");
    const BigInt num =
        BigInt((n - l + 2 * k - m + 4) * (n - m + k + 1) - (l - k - 2)) *
        binomial(n + l - m - 1, l - k - 2);
    return exact_div(num, BigInt(n - m + k + 2) * (n + l - m - 1), "op_exact_maxeq_lead");
}

namespace detail {

inline BigInt exact_flaws_by_formula(long n, long k, const CountQuery& q) {
    const auto& mf = q.max_term;
    auto with_max = [&](long m) -> BigInt {
        if (!mf)
            return op_exact_lead(n, k, m);
        if (mf->kind == MaxTermFilter::Kind::at_most)
            return op_exact_maxle_lead(n, k, mf->l, m);
        return op_exact_maxeq_lead(n, k, mf->l, m);
    };
    if (q.leading)
        return with_max(*q.leading);
    if (!mf)
        return op_exact(n, k);
    BigInt s = 0;
    for (long m = 1; m <= k + 1; ++m)
        s += with_max(m);
    return s;
}

inline BigInt at_least_by_formula(long n, long k, std::optional<int> lead, long l) {
    if (lead)
        return op_ge_maxle_lead(n, k, l, *lead);
    return l == n ? op_ge(n, k) : op_ge_maxle(n, k, l);
}

} // namespace detail

/// Answers any CountQuery from the closed forms above.
inline BigInt count_by_formula(CountQuery q) {
    const long n = q.n;
    detail::require_n(n, "count_by_formula");
    if (q.leading && (*q.leading < 1 || *q.leading > n))
        return 0;
    if (q.max_term) {
        const long l = q.max_term->l;
        if (l < 1)
            return 0;
        if (q.max_term->kind == MaxTermFilter::Kind::at_most && l >= n)
            q.max_term.reset();
        else if (l > n)
            return 0;
    }
    const long k = q.flaws.k;
    switch (q.flaws.kind) {
    case FlawFilter::Kind::exactly:
        return detail::exact_flaws_by_formula(n, k, q);
    case FlawFilter::Kind::at_most: {
        if (!q.leading && !q.max_term)
            return op_le(n, k);
        BigInt s = 0;
        for (long j = 0; j <= std::min(k, n - 1); ++j)
            s += detail::exact_flaws_by_formula(n, j, q);
        return s;
    }
    case FlawFilter::Kind::at_least: {
        const long kk = std::max(k, 0L);
        if (!q.max_term)
            return detail::at_least_by_formula(n, kk, q.leading, n);
        const long l = q.max_term->l;
        if (q.max_term->kind == MaxTermFilter::Kind::at_most)
            return detail::at_least_by_formula(n, kk, q.leading, l);
        BigInt below = l > 1 ? detail::at_least_by_formula(n, kk, q.leading, l - 1) : BigInt(0);
        return detail::at_least_by_formula(n, kk, q.leading, l) - below;
    }
    }
    return 0;
}

} // namespace flawset
