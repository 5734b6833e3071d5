#include "macmahon/divisor_forms.hpp"
#include "macmahon/macmahon_sums.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace macmahon;
using namespace testsupport;

TEST_CASE("registry keys")
{
    CHECK(parse_family("M") == Family::M);
    CHECK(parse_family("MO") == Family::MO);
    CHECK_THROWS_WITH_AS(parse_family("X"), doctest::Contains("M, MO"), std::invalid_argument);
    CHECK(parse_formula("conjugate") == Formula::ConjugateForm);
    CHECK_THROWS_AS(parse_formula("nope"), std::invalid_argument);
    CHECK(default_formula(Family::M) == Formula::SingleSum);
    CHECK(default_formula(Family::MO) == Formula::AndrewsRose);
}

TEST_CASE("U multisum")
{
    CHECK(u_multisum(1, 40) == sigma_series(1, 40));
    const auto u2 = u_multisum(2, 40);
    CHECK(u2[0] == 0);
    CHECK(u2[1] == 0);
    CHECK(u2[2] == 0);
    CHECK(u2[3] == 1);
    for (unsigned n = 0; 5 * n + 1 <= 40; ++n)
        CHECK(u2[5 * n + 1].get_num() % 5 == 0);
    for (unsigned t = 1; t <= 3; ++t) {
        const auto u = u_multisum(t, 25);
        for (unsigned n = 0; n <= 25; ++n)
            CHECK(u[n] == BigRational(macmahon_count(t, n, true)));
    }
}

TEST_CASE("V multisum")
{
    CHECK(v_multisum(2, 10)[4] == 14);
    CHECK(v_multisum(1, 40) == sigma_series(1, 40));
    TruncatedSeries excess(40);
    for (std::size_t k = 1; 2 * k <= 40; ++k)
        excess += shift(geometric_pow(k, 4, 40), 2 * k);
    CHECK(v_multisum(2, 40) - u_multisum(2, 40) == excess);
    for (unsigned t = 1; t <= 3; ++t) {
        const auto v = v_multisum(t, 25);
        for (unsigned n = 0; n <= 25; ++n)
            CHECK(v[n] == BigRational(macmahon_count(t, n, false)));
    }
}

TEST_CASE("single sum")
{
    for (unsigned t = 1; t <= 4; ++t)
        CHECK(m_single_sum(t, 50) == v_multisum(t, 50));
    CHECK(m_single_sum(1, 10)[6] == 12);
    CHECK(m_single_sum(2, 10)[4] == 14);
}

TEST_CASE("conjugate and chain forms")
{
    for (unsigned t = 1; t <= 3; ++t) {
        CHECK(m_conjugate_form(t, 40) == v_multisum(t, 40));
        CHECK(m_chain_form(t, 40) == v_multisum(t, 40));
    }
    CHECK(m_conjugate_form(2, 10)[4] == 14);
    CHECK(m_conjugate_form(1, 30) == sigma_series(1, 30));
}

TEST_CASE("Andrews-Rose form")
{
    for (unsigned t = 1; t <= 4; ++t)
        CHECK(mo_andrews_rose(t, 50) == u_multisum(t, 50));
    CHECK(mo_andrews_rose(1, 6) == from_ints({0, 1, 3, 4, 7, 6, 12}));
    const auto mo4 = mo_andrews_rose(4, 11 * 8 + 6);
    for (unsigned n = 0; n <= 8; ++n)
        CHECK(mo4[11 * n + 6].get_num() % 11 == 0);
}

TEST_CASE("umbral form")
{
    for (unsigned t = 1; t <= 3; ++t)
        CHECK(u_umbral(t, 40) == u_multisum(t, 40));
    // t = 1: -(1/24)(J_3 - J_1)/J_1
    const auto j1 = J_series(1, 30), j3 = J_series(3, 30);
    CHECK(scale(BigRational(-1, 24), (j3 - j1) * invert_unit(j1)) == sigma_series(1, 30));
    for (unsigned t = 1; t <= 4; ++t)
        CHECK(u_umbral(t, 12)[t * (t + 1) / 2] == 1);
}

TEST_CASE("recurrences")
{
    for (unsigned t = 1; t <= 4; ++t) {
        CHECK(u_recurrence(t, 50) == u_multisum(t, 50));
        CHECK(v_recurrence(t, 50) == v_multisum(t, 50));
        CHECK(eh_relation_check(t, 50).pass);
    }
    CHECK(u_recurrence(2, 10)[3] == 1);
    CHECK(closed_form_check(ClosedForm::U4Sigma, 40).pass);
    CHECK(closed_form_check(ClosedForm::V1E2, 40).pass);
}

TEST_CASE("closed forms")
{
    for (auto which : all_closed_forms()) {
        INFO(closed_form_id(which));
        CHECK(closed_form_check(which, 50).pass);
    }
    // sigma_1 convolution at n = 4: 12 * 17 = 204 = 5*73 + 7 - 24*7
    const auto s1 = sigma_series(1, 4);
    CHECK(12 * (s1 * s1)[4] == 204);
    CHECK(5 * sigma(3, 4) + (1 - 6 * 4) * sigma(1, 4) == 204);
    // the V_2 excess at q^2
    CHECK((v_multisum(2, 10) - u_multisum(2, 10))[2] == (sigma(3, 2) - sigma(1, 2)) / 6);
}

TEST_CASE("coefficient tables")
{
    const auto tab = coefficient_table(Family::M, 2, Formula::SingleSum, 10);
    CHECK(tab.values.size() == 11);
    CHECK(tab.values[4] == 14);
    CHECK(minimal_support(Family::MO, 4) == 10);
    CHECK(minimal_support(Family::M, 4) == 4);
    for (unsigned t = 1; t <= 4; ++t) {
        const auto m = coefficient_table(Family::M, t, Formula::SingleSum, 60).values;
        const auto mo = coefficient_table(Family::MO, t, Formula::AndrewsRose, 60).values;
        for (std::size_t n = 0; n <= 60; ++n) {
            CHECK(mo[n] >= 0);
            CHECK(m[n] >= mo[n]);
            if (n < minimal_support(Family::M, t))
                CHECK(m[n] == 0);
            if (n < minimal_support(Family::MO, t))
                CHECK(mo[n] == 0);
        }
    }
    // cached and fresh computations agree
    CHECK(generating_function(Family::M, 3, Formula::ConjugateForm, 20) == m_conjugate_form(3, 20));
    CHECK_THROWS_AS(generating_function(Family::MO, 2, Formula::ConjugateForm, 10), std::invalid_argument);
}

TEST_CASE("agreement and Jacobi specializations")
{
    for (unsigned t = 1; t <= 3; ++t) {
        CHECK(u_agreement_check(t, 40).pass);
        CHECK(v_agreement_check(t, 30).pass);
    }
    for (int c : {4, 2, 1})
        CHECK(jacobi_specialization_check(c, 30).pass);
    CHECK_THROWS_AS(jacobi_specialization_check(3, 30), std::invalid_argument);
}
