#include "macmahon/divisor_forms.hpp"
#include "macmahon/mod_series.hpp"
#include "macmahon/series.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace macmahon;
using namespace testsupport;

TEST_CASE("construction and canonical form")
{
    TruncatedSeries z(5);
    CHECK(z.order() == 5);
    CHECK(z.coefficients().size() == 6);
    CHECK(z.is_zero());
    CHECK_THROWS_AS(TruncatedSeries(std::vector<BigRational>{}), std::invalid_argument);
    const auto m = TruncatedSeries::monomial(4, 2, BigRational(6, 4));
    CHECK(m[2].get_num() == 3);
    CHECK(m[2].get_den() == 2);
}

TEST_CASE("add")
{
    const auto a = from_ints({1, 1});
    const auto b = from_ints({1, -1});
    CHECK(a + b == from_ints({2, 0}));

    const auto r = random_series(12);
    CHECK(r + TruncatedSeries(12) == r);

    const auto s1 = sigma_series(1, 10);
    CHECK((s1 + s1)[2] == 6);

    // order of a result is the smaller operand order
    CHECK((random_series(8) + random_series(5)).order() == 5);
}

TEST_CASE("mul")
{
    std::vector<long> ones(11, 1);
    const auto prod = from_ints({1, -1}) * from_ints(ones);
    CHECK(prod.order() == 1);
    const auto prod10 = multiply_by_one_minus_q_power(from_ints(ones), 1);
    CHECK(prod10 == TruncatedSeries::one(10));

    const auto a = random_series(20), b = random_series(20);
    CHECK(a * b == b * a);

    // 1/(1-q)^2 = sum (i+1) q^i, built by hand
    std::vector<long> hand;
    for (long i = 0; i <= 15; ++i)
        hand.push_back(i + 1);
    const auto one_minus_q_sq = from_ints({1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    CHECK(one_minus_q_sq * from_ints(hand) == TruncatedSeries::one(15));
    CHECK(geometric_pow(1, 2, 15) == from_ints(hand));
}

TEST_CASE("invert_unit")
{
    std::vector<long> ones(13, 1);
    std::vector<long> one_minus_q(13, 0);
    one_minus_q[0] = 1;
    one_minus_q[1] = -1;
    CHECK(invert_unit(from_ints(one_minus_q)) == from_ints(ones));

    for (int i = 0; i < 5; ++i) {
        const auto a = random_series(15, true);
        CHECK(invert_unit(invert_unit(a)) == a);
    }
    CHECK_THROWS_AS(invert_unit(from_ints({0, 1, 2})), ComputationError);

    // 1/(q)_inf at q^3: partitions of 3 are 3, 2+1, 1+1+1
    const auto p = invert_unit(euler_function(20));
    CHECK(p[3] == 3);
    const auto cube = power(p, 3);
    for (unsigned n = 0; n <= 20; ++n)
        CHECK(cube[n] == BigRational(coloured_partitions(n, 3)));
}

TEST_CASE("geometric_pow")
{
    const auto g = geometric_pow(1, 2, 10);
    for (unsigned i = 0; i <= 10; ++i)
        CHECK(g[i] == i + 1);

    const auto g3 = geometric_pow(3, 1, 12);
    for (unsigned i = 0; i <= 12; ++i)
        CHECK(g3[i] == (i % 3 == 0 ? 1 : 0));

    // (1 - q^2)^{-4} by repeated multiplication of 1 + q^2 + q^4 + ...
    std::vector<long> base(13, 0);
    for (unsigned i = 0; i <= 12; i += 2)
        base[i] = 1;
    const auto brute = power(from_ints(base), 4);
    CHECK(brute[6] == 20);
    CHECK(geometric_pow(2, 4, 12) == brute);
}

TEST_CASE("euler_function")
{
    const auto e = euler_function(7);
    CHECK(e == from_ints({1, -1, -1, 0, 0, 1, 0, 1}));
    CHECK(euler_function(30) * invert_unit(euler_function(30)) == TruncatedSeries::one(30));

    const auto naive = naive_euler_product(50);
    const auto pent = euler_function(50);
    for (unsigned i = 0; i <= 50; ++i)
        CHECK(pent[i] == BigRational(naive[i]));
}

TEST_CASE("q_derivative")
{
    CHECK(q_derivative(TruncatedSeries::monomial(6, 0, 7)).is_zero());
    CHECK(q_derivative(sigma_series(1, 10))[4] == 28);

    const auto e2 = eisenstein(Eisenstein::E2, 40);
    const auto e4 = eisenstein(Eisenstein::E4, 40);
    CHECK(scale(12, q_derivative(e2)) == e2 * e2 - e4);
}

TEST_CASE("shift and truncation")
{
    const auto a = from_ints({1, 2, 3, 4});
    CHECK(shift(a, 2) == from_ints({0, 0, 1, 2}));
    CHECK(a.truncated(1) == from_ints({1, 2}));
    CHECK_THROWS_AS(a.truncated(4), std::invalid_argument);
    CHECK(first_mismatch(a, from_ints({1, 2, 0})) == std::optional<std::size_t>(2));
    CHECK_FALSE(first_mismatch(a, from_ints({1, 2})).has_value());
}

TEST_CASE("mod-p backend")
{
    CHECK_THROWS_AS(require_scan_modulus(2), std::invalid_argument);
    CHECK_THROWS_AS(require_scan_modulus(9), std::invalid_argument);
    CHECK_THROWS_AS(require_scan_modulus(std::uint64_t{1} << 31), std::invalid_argument);
    CHECK_NOTHROW(require_scan_modulus(2147483647));

    CHECK(reduce_mod(BigRational(-1), 7) == 6);
    CHECK(reduce_mod(BigRational(1, 2), 7) == 4);
    CHECK_THROWS(reduce_mod(BigRational(1, 7), 7));

    const auto e = euler_function(60);
    CHECK(euler_function_mod(60, 11) == reduce(e, 11));
    const auto e11 = euler_function_mod(60, 11);
    for (auto c : e11.coefficients())
        CHECK(c < 11);

    const auto a = random_integer_series(25);
    CHECK(invert_unit(reduce(TruncatedSeries::one(25) + shift(a, 1), 13)) ==
          reduce(invert_unit(TruncatedSeries::one(25) + shift(a, 1)), 13));
    CHECK(divide_by_one_minus_q_power(reduce(a, 5), 3, 2) == reduce(divide_by_one_minus_q_power(a, 3, 2), 5));
}
