#pragma once

// Recurrences among the closed forms, evaluated on both sides from
// closed_forms.hpp. Out-of-range terms are zero by closed_forms' convention,
// so boundary tuples need no special casing.

#include <string>
#include <vector>

#include <json.hpp>

#include "closed_forms.hpp"
#include "report.hpp"

namespace flawset {

struct RecurrenceCheck {
    std::string identity;
    Params params;
    BigInt lhs;
    BigInt rhs;
    bool pass() const { return lhs == rhs; }

    nlohmann::ordered_json to_json() const {
        return {{"identity", identity},
                {"parameters", params_json(params)},
                {"lhs", lhs.str()},
                {"rhs", rhs.str()},
                {"pass", pass()}};
    }
};

namespace recurrence {

/// op_{n+1,k+1}^{k+2} = op_{n,k}^{k+1} + op_{n,k+1}^{k+1} + op_{n,k+1}^{k+2}
inline RecurrenceCheck leading_diagonal(long n, long k) {
    return {"leading_diagonal",
            {{"n", n}, {"k", k}},
            op_exact_lead(n + 1, k + 1, k + 2),
            op_exact_lead(n, k, k + 1) + op_exact_lead(n, k + 1, k + 1) +
                op_exact_lead(n, k + 1, k + 2)};
}

/// Same as the diagonal recurrence with the largest entry pinned:
/// op_{n+1,k+1,=l+1}^{k+2} = op_{n,k,=l}^{k+1} + op_{n,k+1,=l}^{k+1} + op_{n,k+1,=l}^{k+2}
inline RecurrenceCheck leading_diagonal_max(long n, long k, long l) {
    return {"leading_diagonal_max",
            {{"n", n}, {"k", k}, {"l", l}},
            op_exact_maxeq_lead(n + 1, k + 1, l + 1, k + 2),
            op_exact_maxeq_lead(n, k, l, k + 1) + op_exact_maxeq_lead(n, k + 1, l, k + 1) +
                op_exact_maxeq_lead(n, k + 1, l, k + 2)};
}

/// op_{n,k}^m = sum_{j=m+1}^{k+1} sum_{i=1}^{n-k} c_i op_{n-i,k}^j, 1 <= m <= k
inline RecurrenceCheck leading_convolution(long n, long k, long m) {
    BigInt rhs = 0;
    for (long j = m + 1; j <= k + 1; ++j)
        for (long i = 1; i <= n - k; ++i)
            if (n - i >= 1)
                rhs += catalan(i) * op_exact_lead(n - i, k, j);
    return {"leading_convolution", {{"n", n}, {"k", k}, {"m", m}}, op_exact_lead(n, k, m),
            rhs};
}

/// op_{n,k,=l}^m = sum_{j=m+1}^{k+1} sum_{i=1}^{n-k} c_i op_{n-i,k,=l-i}^j, 1 <= m <= k
inline RecurrenceCheck leading_max_convolution(long n, long k, long l, long m) {
    BigInt rhs = 0;
    for (long j = m + 1; j <= k + 1; ++j)
        for (long i = 1; i <= n - k; ++i)
            if (n - i >= 1)
                rhs += catalan(i) * op_exact_maxeq_lead(n - i, k, l - i, j);
    return {"leading_max_convolution",
            {{"n", n}, {"k", k}, {"l", l}, {"m", m}},
            op_exact_maxeq_lead(n, k, l, m),
            rhs};
}

/// op_{n,k} = sum_{i=0}^{n-k-1} c_i [op_{n-i,k} - op_{n-i,k}^1].
/// Holds for k >= 1 only: the decomposition splits at the first empty space.
inline RecurrenceCheck flaw_convolution(long n, long k) {
    BigInt rhs = 0;
    for (long i = 0; i <= n - k - 1; ++i)
        rhs += catalan(i) * (op_exact(n - i, k) - op_exact_lead(n - i, k, 1));
    return {"flaw_convolution", {{"n", n}, {"k", k}}, op_exact(n, k), rhs};
}

} // namespace recurrence

/// Every identity at every valid tuple with n <= n_max (left-hand side length).
inline std::vector<RecurrenceCheck> check_recurrences(long n_max) {
    std::vector<RecurrenceCheck> out;
    for (long n = 1; n + 1 <= n_max; ++n)
        for (long k = 0; k <= n - 1; ++k) {
            out.push_back(recurrence::leading_diagonal(n, k));
            for (long l = k + 1; l <= n; ++l)
                out.push_back(recurrence::leading_diagonal_max(n, k, l));
        }
    for (long n = 1; n <= n_max; ++n)
        for (long k = 1; k <= n - 1; ++k) {
            for (long m = 1; m <= k; ++m) {
                out.push_back(recurrence::leading_convolution(n, k, m));
                for (long l = k + 1; l <= n; ++l)
                    out.push_back(recurrence::leading_max_convolution(n, k, l, m));
            }
            out.push_back(recurrence::flaw_convolution(n, k));
        }
    return out;
}

inline VerificationReport recurrence_report(long n_max) {
    VerificationReport rep;
    rep.suite = "recurrences";
    for (const auto& c : check_recurrences(n_max))
        rep.add(c.identity, c.params, c.lhs.str(), c.rhs.str());
    // The printed statement also claims k = 0, where the right-hand side vanishes.
    for (long n = 1; n <= n_max; ++n) {
        const auto c = recurrence::flaw_convolution(n, 0);
        if (!c.pass())
            rep.discrepancies.push_back(
                {c.identity, c.params, c.rhs.str(), c.lhs.str(),
                 "stated for k >= 0 but fails at k = 0: op_{n,0}^1 = op_{n,0}, so every "
                 "bracket is zero; the identity needs an empty space (k >= 1)"});
    }
    return rep;
}

} // namespace flawset
