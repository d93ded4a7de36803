#pragma once

// Truncated formal power series and polynomials over BigInt.
//
// An IntSeries of order N knows coefficients 0..N. Binary operations
// truncate to the smaller order; asking for a coefficient past the order
// throws TruncationError.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "bigint.hpp"
#include "closed_forms.hpp"
#include "errors.hpp"

namespace flawset {

inline constexpr int kDefaultSeriesOrder = 24;

class IntSeries {
public:
    explicit IntSeries(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) {
        if (c_.empty())
            throw InvalidInput("series needs at least one coefficient");
    }

    static IntSeries zero(int order) {
        return IntSeries(std::vector<BigInt>(static_cast<std::size_t>(order) + 1, BigInt(0)));
    }
    static IntSeries one(int order) {
        auto s = zero(order);
        s.c_[0] = 1;
        return s;
    }

    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }

    const BigInt& coeff(int n) const {
        if (n < 0 || n > order())
            throw TruncationError("coefficient " + std::to_string(n) + " beyond order " +
                                  std::to_string(order()));
        return c_[static_cast<std::size_t>(n)];
    }
    const std::vector<BigInt>& coefficients() const noexcept { return c_; }

    IntSeries truncated(int order) const {
        std::vector<BigInt> c(c_.begin(), c_.begin() + std::min(order, this->order()) + 1);
        return IntSeries(std::move(c));
    }

    friend IntSeries operator+(const IntSeries& a, const IntSeries& b) {
        const int n = std::min(a.order(), b.order());
        auto r = zero(n);
        for (int i = 0; i <= n; ++i)
            r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend IntSeries operator-(const IntSeries& a, const IntSeries& b) {
        const int n = std::min(a.order(), b.order());
        auto r = zero(n);
        for (int i = 0; i <= n; ++i)
            r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend IntSeries operator*(const BigInt& s, const IntSeries& a) {
        auto r = a;
        for (auto& c : r.c_)
            c *= s;
        return r;
    }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const BigInt& c) { return c == 0; });
    }

    friend bool operator==(const IntSeries&, const IntSeries&) = default;

    nlohmann::json to_json() const {
        auto j = nlohmann::json::array();
        for (const auto& c : c_)
            j.push_back(c.str());
        return j;
    }

private:
    std::vector<BigInt> c_;
};

/// Cauchy product truncated to min(order a, order b).
inline IntSeries series_mul(const IntSeries& a, const IntSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i) == 0)
            continue;
        for (int j = 0; i + j <= n; ++j)
            c[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
    return IntSeries(std::move(c));
}

inline IntSeries series_pow(const IntSeries& a, int e) {
    if (e < 0)
        throw InvalidInput("series_pow needs e >= 0");
    auto result = IntSeries::one(a.order());
    auto base = a;
    while (e > 0) {
        if (e & 1)
            result = series_mul(result, base);
        e >>= 1;
        if (e)
            base = series_mul(base, base);
    }
    return result;
}

/// Multiplication by y^d, same order.
inline IntSeries series_shift(const IntSeries& a, int d) {
    if (d < 0)
        throw InvalidInput("series_shift needs d >= 0");
    std::vector<BigInt> c(static_cast<std::size_t>(a.order()) + 1, BigInt(0));
    for (int i = 0; i + d <= a.order(); ++i)
        c[static_cast<std::size_t>(i + d)] = a.coeff(i);
    return IntSeries(std::move(c));
}

inline const BigInt& coeff(const IntSeries& a, int n) { return a.coeff(n); }

/// d/dy, order drops by one (order 0 gives the zero series of order 0).
inline IntSeries series_derivative(const IntSeries& a) {
    if (a.order() == 0)
        return IntSeries::zero(0);
    std::vector<BigInt> c(static_cast<std::size_t>(a.order()));
    for (int i = 1; i <= a.order(); ++i)
        c[static_cast<std::size_t>(i - 1)] = i * a.coeff(i);
    return IntSeries(std::move(c));
}

/// 1/a for a constant term of +1 or -1, which keeps coefficients integral.
inline IntSeries series_inverse(const IntSeries& a) {
    const BigInt& a0 = a.coeff(0);
    if (a0 != 1 && a0 != -1)
        throw InvalidInput("series_inverse needs constant term +-1");
    const int n = a.order();
    std::vector<BigInt> b(static_cast<std::size_t>(n) + 1, BigInt(0));
    b[0] = a0;
    for (int i = 1; i <= n; ++i) {
        BigInt s = 0;
        for (int j = 1; j <= i; ++j)
            s += a.coeff(j) * b[static_cast<std::size_t>(i - j)];
        b[static_cast<std::size_t>(i)] = -s * a0;
    }
    return IntSeries(std::move(b));
}

/// C(y) = sum c_n y^n from c_{n+1} = sum_i c_i c_{n-i}.
inline IntSeries catalan_series(int order) {
    std::vector<BigInt> c(static_cast<std::size_t>(order) + 1, BigInt(0));
    c[0] = 1;
    for (int n = 0; n < order; ++n) {
        BigInt s = 0;
        for (int i = 0; i <= n; ++i)
            s += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(n - i)];
        c[static_cast<std::size_t>(n + 1)] = s;
    }
    return IntSeries(std::move(c));
}

/// B(y) = 1/sqrt(1-4y) = sum C(2n, n) y^n.
inline IntSeries central_binomial_series(int order) {
    std::vector<BigInt> c(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n)
        c[static_cast<std::size_t>(n)] = central_binomial(n);
    return IntSeries(std::move(c));
}

/// 1/(1-4y) = sum 4^n y^n.
inline IntSeries quadruple_geometric_series(int order) {
    std::vector<BigInt> c(static_cast<std::size_t>(order) + 1);
    BigInt p = 1;
    for (auto& v : c) {
        v = p;
        p *= 4;
    }
    return IntSeries(std::move(c));
}

/// C(y) - 1 - y C(y)^2, identically zero to the truncation order.
inline IntSeries catalan_residual(int order) {
    const auto c = catalan_series(order);
    return c - IntSeries::one(order) - series_shift(series_pow(c, 2), 1);
}

/// varphi_k(y) = y^{k+1} C^{k+2}: ordered sets with k flaws and leading term k+1.
inline IntSeries gf_varphi_k(int k, int order) {
    if (k < 0)
        throw PreconditionError("gf_varphi_k needs k >= 0");
    return series_shift(series_pow(catalan_series(order), k + 2), k + 1);
}

/// rho_{m,k}(y) = y^{k+2} C^{2k-m+4}: k flaws and leading term m, 1 <= m <= k.
inline IntSeries gf_rho_mk(int m, int k, int order) {
    if (m < 1 || m > k)
        throw PreconditionError("gf_rho_mk needs 1 <= m <= k");
    return series_shift(series_pow(catalan_series(order), 2 * k - m + 4), k + 2);
}

/// phi_k(y) = y^{k+1} C^{2(k+1)}: ordered sets with exactly k flaws.
inline IntSeries gf_phi_k(int k, int order) {
    if (k < 0)
        throw PreconditionError("gf_phi_k needs k >= 0");
    return series_shift(series_pow(catalan_series(order), 2 * (k + 1)), k + 1);
}

/// Polynomial in the flaw-marking variable x.
class IntPolynomial {
public:
    IntPolynomial() : c_{BigInt(0)} {}
    explicit IntPolynomial(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) {
        if (c_.empty())
            c_.push_back(0);
        normalize();
    }

    /// -1 for the zero polynomial.
    int degree() const noexcept {
        return (c_.size() == 1 && c_[0] == 0) ? -1 : static_cast<int>(c_.size()) - 1;
    }
    BigInt coeff(int i) const {
        return (i < 0 || i >= static_cast<int>(c_.size())) ? BigInt(0)
                                                            : c_[static_cast<std::size_t>(i)];
    }
    const std::vector<BigInt>& coefficients() const noexcept { return c_; }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return IntPolynomial(std::move(c));
    }
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return IntPolynomial(std::move(c));
    }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return IntPolynomial(std::move(c));
    }
    friend IntPolynomial operator*(const BigInt& s, const IntPolynomial& a) {
        auto c = a.c_;
        for (auto& v : c)
            v *= s;
        return IntPolynomial(std::move(c));
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    nlohmann::json to_json() const {
        auto j = nlohmann::json::array();
        for (const auto& c : c_)
            j.push_back(c.str());
        return j;
    }

private:
    void normalize() {
        while (c_.size() > 1 && c_.back() == 0)
            c_.pop_back();
    }
    std::vector<BigInt> c_;
};

/// psi_n(x) = sum_k op_{n,>=k} x^k from
///   2x psi_n = 2(1+x)^2 psi_{n-1} + (x-1) C(2n-2, n-1),  psi_1 = 1.
inline IntPolynomial psi_polynomial(int n) {
    if (n < 1)
        throw InvalidInput("psi_polynomial needs n >= 1");
    IntPolynomial psi(std::vector<BigInt>{1});
    const IntPolynomial one_plus_x_sq(std::vector<BigInt>{1, 2, 1});
    for (int j = 2; j <= n; ++j) {
        const BigInt b = central_binomial(j - 1);
        const IntPolynomial rhs =
            BigInt(2) * (one_plus_x_sq * psi) + IntPolynomial(std::vector<BigInt>{-b, b});
        if (rhs.coeff(0) != 0)
            throw ConsistencyError("psi recurrence: constant term " + rhs.coeff(0).str() +
                                   " at n = " + std::to_string(j));
        std::vector<BigInt> next(static_cast<std::size_t>(std::max(rhs.degree(), 1)), BigInt(0));
        for (int i = 1; i <= rhs.degree(); ++i)
            next[static_cast<std::size_t>(i - 1)] = exact_div(rhs.coeff(i), 2, "psi recurrence");
        psi = IntPolynomial(std::move(next));
    }
    return psi;
}

} // namespace flawset
