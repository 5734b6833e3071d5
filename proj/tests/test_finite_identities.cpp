#include "macmahon/finite_identities.hpp"
#include "macmahon/macmahon_sums.hpp"
#include "macmahon/qcombinatorics.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace macmahon;
using namespace testsupport;

namespace {

TruncatedSeries normalized(const TruncatedSeries& x, unsigned t)
{
    return divide_by_one_minus_q_power(x, 1, 2 * t);
}

}  // namespace

TEST_CASE("F series")
{
    for (unsigned t = 1; t <= 3; ++t)
        CHECK(F_series(t, 0, 20).is_zero());
    CHECK(F_series(0, 5, 10) == TruncatedSeries::one(10));
    // [1]_q = 1, so F_t(1) = q^t; after dividing by (1-q)^{2t} it is q^t/(1-q)^{2t}
    CHECK(F_series(2, 1, 20) == TruncatedSeries::monomial(20, 2));
    CHECK(normalized(F_series(2, 1, 20), 2) == shift(geometric_pow(1, 4, 20), 2));
    // F_t(n)/(1-q)^{2t} keeps parts <= n; for t = 2 a part above 12 first
    // shows up at weight 1 + 13
    const auto f = normalized(F_series(2, 12, 30), 2);
    const auto v = v_multisum(2, 30);
    for (unsigned i = 0; i <= 13; ++i)
        CHECK(f[i] == v[i]);
    CHECK(f[14] != v[14]);
}

TEST_CASE("G series")
{
    CHECK(G_series(2, 1, 20) == TruncatedSeries::monomial(20, 2));
    for (unsigned t = 1; t <= 4; ++t)
        for (unsigned n = 1; n <= 5; ++n)
            CHECK(G_series(t, n, 60) == F_series(t, n, 60));
    CHECK(G_series_central(2, 3, 40) == G_series(2, 3, 40));
}

TEST_CASE("H series")
{
    CHECK(H_series(1, 1, 20) == TruncatedSeries::monomial(20, 1));
    CHECK(normalized(H_series(1, 1, 20), 1) == shift(geometric_pow(1, 2, 20), 1));
    for (unsigned t = 1; t <= 3; ++t)
        for (unsigned n = 1; n <= 4; ++n)
            CHECK(H_series(t, n, 50) == F_series(t, n, 50));
    // H_2(3) - H_2(2) = q^3/[3]^2 H_1(3), with 1/[3] = (1-q)/(1-q^3)
    const auto lhs = H_series(2, 3, 40) - H_series(2, 2, 40);
    auto rhs = shift(H_series(1, 3, 40), 3);
    rhs = divide_by_one_minus_q_power(multiply_by_one_minus_q_power(rhs, 1, 2), 3, 2);
    CHECK(lhs == rhs);
    for (unsigned t = 1; t <= 4; ++t)
        for (unsigned n = 1; n <= 5; ++n)
            CHECK(fgh_recurrence_check(t, n, 40).pass);
}

TEST_CASE("certification")
{
    const auto f = F_series(1, 1, 5), g = G_series(1, 1, 5);
    CHECK(certify_rational_equality(f, g, 2));
    CHECK_THROWS_AS(certify_rational_equality(F_series(1, 1, 4), G_series(1, 1, 4), 2), ComputationError);

    const std::size_t b = fgh_degree_bound(2, 2);
    CHECK(b == 2 * 2 * (1 + 2 + 3 + 4));
    CHECK(certify_rational_equality(F_series(2, 2, 2 * b + 1), G_series(2, 2, 2 * b + 1), b));
    for (unsigned t = 1; t <= 2; ++t)
        for (unsigned n = 1; n <= 3; ++n)
            CHECK(certified_fgh_check(t, n).pass);

    // Two different series that agree through q^{2B+1}: the check trusts the
    // bound it is given, so a wrong bound is the caller's mistake.
    const std::size_t bad = 3;
    const auto x = TruncatedSeries::one(2 * bad + 2);
    const auto y = x + TruncatedSeries::monomial(2 * bad + 2, 2 * bad + 2);
    CHECK(certify_rational_equality(x, y, bad));
    // an honest bound for x - y needs more terms than either series has
    CHECK_THROWS_AS(certify_rational_equality(x, y, bad + 1), ComputationError);
}

TEST_CASE("Dilcher and MSS identities")
{
    CHECK(dilcher_check(1, 1, 20).pass);
    for (unsigned t = 1; t <= 4; ++t)
        for (unsigned n = 1; n <= 4; ++n) {
            CHECK(dilcher_check(t, n, 50).pass);
            CHECK(mss_check(t, n, 0, 50).pass);
        }
    CHECK(mss_check(2, 3, 1, 40).pass);
    for (unsigned t = 1; t <= 4; ++t)
        for (unsigned n = 1; n <= 6; ++n)
            CHECK(dilcher_rational_check(t, n).pass);

    // direct rational oracle for the q = 1 Dilcher sum, t = 2, n = 3
    BigRational lhs = 0, rhs = 0;
    for (unsigned k = 1; k <= 3; ++k)
        lhs += BigRational(k % 2 ? 1 : -1) * BigRational(pascal(3, k)) / (k * k);
    for (unsigned a = 1; a <= 3; ++a)
        for (unsigned b = a; b <= 3; ++b)
            rhs += BigRational(1) / (a * b);
    CHECK(lhs == rhs);
}

TEST_CASE("MSS precursor readings")
{
    CHECK(mss_precursor_check(1, 2, 1, 40).pass);
    for (unsigned t = 1; t <= 2; ++t)
        for (unsigned n = 1; n <= 3; ++n)
            for (unsigned x = 0; x <= 2; ++x)
                CHECK(mss_precursor_check(t, n, x, 40, PrecursorReading::InversePair).pass);
    // the printed reading only survives n = 1
    CHECK(mss_precursor_check(1, 1, 1, 40, PrecursorReading::AsPrinted).pass);
    CHECK_FALSE(mss_precursor_check(1, 2, 1, 40, PrecursorReading::AsPrinted).pass);
}

TEST_CASE("q-analogue companions")
{
    CHECK(atidB_check(1, 2, 0, 40).pass);
    CHECK(cor52_check(1, 2, 1, 1, 40).pass);
    CHECK(cor53_check(2, 3, 1, 40).pass);
    for (unsigned t = 1; t <= 4; ++t)
        for (unsigned n = 1; n <= 5; ++n)
            CHECK(atidA_check(t, n, 40).pass);
}

TEST_CASE("q transform lemma with arbitrary input")
{
    std::vector<TruncatedSeries> a;
    for (unsigned i = 0; i < 4; ++i)
        a.push_back(TruncatedSeries::monomial(30, i + 1, random_rational()) + TruncatedSeries::one(30));
    for (unsigned t = 1; t <= 3; ++t)
        for (unsigned z = 0; z <= 2; ++z)
            CHECK(q_transform_lemma_check(a, t, z).pass);
}

TEST_CASE("rational identities")
{
    // z = x = 0, t = 2, n = 3 by brute force on both sides
    BigRational lhs = 0;
    for (unsigned k = 1; k <= 3; ++k)
        lhs += BigRational(k % 2 ? 1 : -1) * BigRational(pascal(3, k)) / (k * k);
    BigRational rhs = 0;
    for (unsigned a = 1; a <= 3; ++a)
        for (unsigned b = a; b <= 3; ++b)
            rhs += BigRational(a) / (BigRational(a) * a * b);
    CHECK(lhs == rhs);
    CHECK(rational_master_check(2, 3, 0, 0).pass);

    // t = n = 1: both sides are 1/((z+1)(x+1))
    const BigRational z(1, 2), x(1, 3);
    CHECK(1 / ((z + 1) * (x + 1)) == BigRational(1, 2));
    CHECK(rational_master_check(1, 1, z, x).pass);

    for (unsigned n = 1; n <= 6; ++n)
        for (const BigRational& xv : {BigRational(1, 2), BigRational(2), BigRational(7, 3)})
            CHECK(rational_hypothesis_check(n, xv).pass);

    CHECK_THROWS_WITH_AS(rational_master_check(1, 2, -1, 0), "parameter hits pole", ComputationError);

    std::vector<BigRational> seq;
    for (unsigned i = 0; i < 6; ++i)
        seq.push_back(random_rational());
    CHECK(rational_transform_lemma_check(seq, 3, BigRational(7, 3)).pass);
    for (unsigned t = 1; t <= 3; ++t)
        for (unsigned n = 1; n <= 6; ++n)
            CHECK(rational_fgh_check(t, n).pass);
}

TEST_CASE("WZ certificates")
{
    for (const BigRational& z : {BigRational(0), BigRational(1), BigRational(1, 2)})
        CHECK(wz_check(WzPair::Master, 6, z, 0).pass);
    for (const BigRational& x : {BigRational(0), BigRational(2), BigRational(7, 3)})
        CHECK(wz_check(WzPair::Cor32, 8, x, 0).pass);
    CHECK(wz_check(WzPair::Lemma51, 4, 1, 40).pass);
    CHECK(wz_check(WzPair::Cor52, 4, 2, 40).pass);
    CHECK(wz_check(WzPair::Cor53, 4, 1, 40).pass);
    CHECK(wz_check(WzPair::QbinDifference, 5, 0, 40).pass);
    CHECK_THROWS_AS(wz_check(WzPair::Lemma51, 4, BigRational(1, 2), 40), std::invalid_argument);
    CHECK(parse_wz_pair("cor53") == WzPair::Cor53);
    CHECK_THROWS_AS(parse_wz_pair("cor54"), std::invalid_argument);
}

TEST_CASE("printed q-binomial difference uses the wrong factor")
{
    const auto r = qbin_difference_printed_check(5, 40);
    CHECK_FALSE(r.pass);
    CHECK(r.discrepancy_index.has_value());
}
