#include "macmahon/divisor_forms.hpp"
#include "macmahon/qcombinatorics.hpp"
#include "macmahon/umbral_identities.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace macmahon;
using namespace testsupport;

TEST_CASE("sigma")
{
    CHECK(sigma(1, 4) == 7);
    CHECK(sigma(5, 4) == 7 * 151);
    CHECK(sigma(3, 4) == 73);
    CHECK(sigma(0, 12) == 6);
    for (unsigned s : {0u, 1u, 2u, 3u, 5u})
        for (unsigned long n = 1; n <= 60; ++n)
            CHECK(sigma(s, n) == sigma_naive(s, n));
    CHECK_THROWS_AS(sigma(1, 0), std::invalid_argument);
}

TEST_CASE("sigma_series")
{
    const auto s1 = sigma_series(1, 6);
    CHECK(s1 == from_ints({0, 1, 3, 4, 7, 6, 12}));
    CHECK(sigma_series(1, 30) == lambert_S(1, 30));
    const auto big = sigma_series(1, 8 * 10 + 4);
    for (unsigned n = 0; n <= 10; ++n)
        CHECK(big[8 * n + 4].get_num() % 7 == 0);
}

TEST_CASE("eisenstein")
{
    const auto e2 = eisenstein(Eisenstein::E2, 40);
    const auto e4 = eisenstein(Eisenstein::E4, 40);
    const auto e6 = eisenstein(Eisenstein::E6, 40);
    CHECK(e2[0] == 1);
    CHECK(e2[1] == -24);
    CHECK(e4[1] == 240);
    CHECK(e6[1] == -504);
    CHECK(scale(12, q_derivative(e2)) == e2 * e2 - e4);
    CHECK(scale(2, q_derivative(e6)) == e2 * e6 - e4 * e4);
    CHECK(scale(3, q_derivative(e4)) == e2 * e4 - e6);
    // E4^2 = E8 = 1 + 480 sum sigma_7 q^n
    const auto e8 = TruncatedSeries::one(40) + scale(480, sigma_series(7, 40));
    CHECK(e4 * e4 == e8);
}

TEST_CASE("lambert_S")
{
    CHECK(lambert_S(1, 30) == sigma_series(1, 30));
    CHECK(lambert_S(0, 12)[12] == 6);
    CHECK(lambert_S(3, 50) == sigma_series(3, 50));
}

TEST_CASE("bigG")
{
    CHECK(bigG(1, 30) == sigma_series(1, 30));
    for (unsigned t = 1; t <= 4; ++t) {
        const auto g = bigG(t, 60);
        for (unsigned n = 1; n <= 60; ++n) {
            BigInt expect = 0;
            for (unsigned k = 1; k <= n; ++k)
                if (n % k == 0)
                    expect += pascal(n / k + t - 1, 2 * t - 1);
            CHECK(g[n] == BigRational(expect));
        }
    }
    for (unsigned t = 1; t <= 4; ++t)
        CHECK(stirling_lambert_check(t, 40).pass);
}

TEST_CASE("dilcher_R")
{
    // R_0 = sum_m q^m prod_{j>m} (1 - q^j) telescopes to 1 - (q)_inf
    CHECK(dilcher_R(0, 30) == TruncatedSeries::one(30) - euler_function(30));
    for (unsigned t = 0; t <= 5; ++t)
        CHECK(dilcher_R(t, 10)[1] == 1);
    CHECK(dilcher_R_umbral_check(2, 30).pass);
}

TEST_CASE("J_series")
{
    const auto j0 = J_series(0, 10);
    CHECK(j0 == from_ints({1, -1, 0, 1, 0, 0, -1, 0, 0, 0, 1}));
    CHECK(J_series(1, 10)[3] == 5);
    const auto e = euler_function(40);
    CHECK(J_series(1, 40) == e * e * e);
}

TEST_CASE("umbral_eval")
{
    CHECK(umbral_eval(UmbralPolynomial::monomial(1), j_family(), 25) == J_series(1, 25));
    // (2t-1)! G_t for t = 3
    CHECK(umbral_eval(central_s_product(3), s_family(), 40) == scale(120, bigG(3, 40)));
    // R(R+1) = R_2 + R_1 against 2! times the alternating series at t = 2
    CHECK(umbral_eval(rising_r_product(2), r_family(), 30) == scale(2, dilcher_alternating(2, 30)));
    // products are expanded before substitution: (X-1)(X-1) has S_0 with coefficient 1
    const auto sq = UmbralPolynomial::linear(-1, 1) * UmbralPolynomial::linear(-1, 1);
    CHECK(sq.coefficient(0) == 1);
    CHECK(sq.coefficient(1) == -2);
    CHECK(sq.coefficient(2) == 1);
}

TEST_CASE("umbral and central factorial identities")
{
    for (unsigned t = 1; t <= 4; ++t) {
        CHECK(central_factorial_inversion_check(t, 40).pass);
        CHECK(power_lambert_umbral_check(t, 40).pass);
        CHECK(dilcher_R_umbral_check(t, 40).pass);
    }
    for (unsigned t = 1; t <= 6; ++t)
        CHECK(central_factorial_polynomial_check(t).pass);
    for (unsigned t = 1; t <= 3; ++t)
        CHECK(macmahon_umbral_check(t, 40).pass);
}

TEST_CASE("explicit R-combination needs signed Stirling numbers")
{
    CHECK(dilcher_R_unsigned_explicit_check(1, 30).pass);
    for (unsigned t = 2; t <= 4; ++t) {
        const auto r = dilcher_R_unsigned_explicit_check(t, 30);
        CHECK_FALSE(r.pass);
        CHECK(r.discrepancy_index == std::optional<std::size_t>(1));
    }
}

TEST_CASE("sigma multiplicativity")
{
    for (unsigned s : {1u, 3u, 5u, 7u})
        for (unsigned long a = 1; a <= 200; ++a)
            for (unsigned long b = 1; a * b <= 200; ++b) {
                unsigned long x = a, y = b;
                while (y) {
                    const auto r = x % y;
                    x = y;
                    y = r;
                }
                if (x == 1)
                    CHECK(sigma(s, a * b) == sigma(s, a) * sigma(s, b));
            }
}
