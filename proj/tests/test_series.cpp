#include <catch_amalgamated.hpp>

#include "flawset/closed_forms.hpp"
#include "flawset/series.hpp"

using namespace flawset;

namespace {
std::vector<BigInt> big(std::initializer_list<long> v) { return {v.begin(), v.end()}; }
} // namespace

TEST_CASE("Catalan series") {
    const auto c = catalan_series(6);
    CHECK(c.coefficients() == big({1, 1, 2, 5, 14, 42, 132}));
    CHECK(catalan_residual(20).is_zero());
    const auto c20 = catalan_series(20);
    CHECK(series_shift(series_pow(c20, 2), 1) + IntSeries::one(20) == c20);
}

TEST_CASE("central binomial series") {
    const int N = 20;
    const auto b = central_binomial_series(N);
    const auto c = catalan_series(N);
    CHECK(b.coeff(0) == 1);
    CHECK(b.coeff(6) == 924);
    for (int n = 0; n <= N; ++n)
        CHECK(b.coeff(n) == (n + 1) * c.coeff(n));
    CHECK(series_derivative(series_shift(c, 1)) == b.truncated(N - 1));
    CHECK(series_mul(b, b) == quadruple_geometric_series(N));
}

TEST_CASE("arithmetic") {
    const auto c = catalan_series(10);
    CHECK(coeff(series_shift(series_pow(c, 6), 3), 6) == 110);
    CHECK(coeff(series_shift(series_pow(c, 2), 1), 6) == 132);
    CHECK(series_pow(c, 0) == IntSeries::one(10));
    CHECK(series_mul(c, series_inverse(c)) == IntSeries::one(10));
    CHECK_THROWS_AS(c.coeff(11), TruncationError);
    CHECK_THROWS_AS(series_pow(c, -1), InvalidInput);
    CHECK_THROWS_AS(series_shift(c, -1), InvalidInput);
    CHECK_THROWS_AS(series_inverse(BigInt(2) * c), InvalidInput);
    // Mixed orders truncate to the smaller one.
    CHECK((catalan_series(4) + catalan_series(8)).order() == 4);
    CHECK(series_mul(catalan_series(3), catalan_series(8)).order() == 3);
    CHECK(c.to_json().dump() == R"(["1","1","2","5","14","42","132","429","1430","4862","16796"])");
}

TEST_CASE("generating-function sections") {
    CHECK(gf_varphi_k(2, 10).coeff(6) == 48);
    CHECK(gf_varphi_k(4, 10).coeff(6) == 6);
    CHECK(gf_rho_mk(1, 2, 10).coeff(6) == 35);
    CHECK(gf_rho_mk(2, 2, 10).coeff(6) == 27);
    CHECK(gf_phi_k(2, 10).coeff(6) == 110);
    CHECK(gf_phi_k(1, 10).coeff(6) == 165);
    CHECK(gf_varphi_k(0, 12) == catalan_series(12) - IntSeries::one(12));
    CHECK(gf_phi_k(0, 12) == catalan_series(12) - IntSeries::one(12));
    CHECK_THROWS_AS(gf_rho_mk(3, 2, 10), PreconditionError);
    CHECK_THROWS_AS(gf_rho_mk(0, 2, 10), PreconditionError);
    CHECK_THROWS_AS(gf_varphi_k(-1, 10), PreconditionError);
}

TEST_CASE("sections equal closed forms, n <= 24 and k, m <= 6") {
    const int N = 24;
    const auto c = catalan_series(N);
    for (int k = 0; k <= 6; ++k) {
        const auto phi = gf_phi_k(k, N);
        const auto vphi = gf_varphi_k(k, N);
        for (int n = 1; n <= N; ++n) {
            REQUIRE(phi.coeff(n) == op_exact(n, k));
            REQUIRE(vphi.coeff(n) == op_exact_lead(n, k, k + 1));
        }
        if (k < 6)
            CHECK(gf_varphi_k(k + 1, N) == series_shift(series_mul(c, vphi), 1));
        for (int m = 1; m <= k; ++m) {
            const auto rho = gf_rho_mk(m, k, N);
            for (int n = 1; n <= N; ++n)
                REQUIRE(rho.coeff(n) == op_exact_lead(n, k, m));
            if (m < k)
                CHECK(rho == series_mul(c, gf_rho_mk(m + 1, k, N)));
        }
        if (k >= 1) {
            CHECK(gf_rho_mk(k, k, N) == series_shift(series_pow(c, k + 4), k + 2));
            CHECK(gf_rho_mk(1, k, N) == series_shift(series_pow(c, 2 * k + 3), k + 2));
        }
    }
}

TEST_CASE("psi polynomials") {
    CHECK(psi_polynomial(1) == IntPolynomial(big({1})));
    CHECK(psi_polynomial(2) == IntPolynomial(big({3, 1})));
    CHECK(psi_polynomial(6).coefficients() == big({462, 330, 165, 55, 11, 1}));
    for (int n = 1; n <= 30; ++n) {
        const auto p = psi_polynomial(n);
        CHECK(p.degree() == n - 1);
        for (int k = 0; k <= n; ++k)
            REQUIRE(p.coeff(k) == op_ge(n, k));
    }
    CHECK_THROWS_AS(psi_polynomial(0), InvalidInput);
}

TEST_CASE("polynomial arithmetic") {
    const IntPolynomial a(big({1, 1}));
    CHECK(a * a == IntPolynomial(big({1, 2, 1})));
    CHECK((a - a).degree() == -1);
    CHECK(IntPolynomial(big({0, 0, 0})).degree() == -1);
    CHECK((BigInt(3) * a).coeff(1) == 3);
    CHECK(a.coeff(7) == 0);
    CHECK(a.to_json().dump() == R"(["1","1"])");
}
