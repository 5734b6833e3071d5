#include "macmahon/umbral_identities.hpp"

#include "macmahon/divisor_forms.hpp"
#include "macmahon/macmahon_sums.hpp"
#include "macmahon/qcombinatorics.hpp"

#include <stdexcept>
#include <string>

namespace macmahon {

namespace {

Params tp(unsigned t, std::size_t order)
{
    return {{"t", std::to_string(t)}, {"order", std::to_string(order)}};
}

void require_t(unsigned t)
{
    if (t == 0)
        throw std::invalid_argument("t must be >= 1");
}

BigRational fact(unsigned n)
{
    return BigRational(factorial(n));
}

}  // namespace

IdentityReport stirling_lambert_check(unsigned t, std::size_t order)
{
    require_t(t);
    const auto p = tp(t, order);
    const auto g = scale(fact(2 * t - 1), bigG(t, order));
    std::vector<BigRational> divisor_form(order + 1);
    for (std::size_t n = 1; n <= order; ++n)
        for (std::size_t k = 1; k <= n; ++k)
            if (n % k == 0)
                divisor_form[n] += binomial(static_cast<long>(n / k + t - 1), 2 * t - 1);
    return combine("stirling-lambert", p,
                   {compare_series("stirling-lambert/u-combination", p, g,
                                   scale(fact(2 * t - 1), stirling_lambert_combination(t, order))),
                    compare_series("stirling-lambert/umbral", p, g,
                                   umbral_eval(central_s_product(t), s_family(), order)),
                    compare_series("stirling-lambert/divisor", p, bigG(t, order),
                                   TruncatedSeries(std::move(divisor_form)))});
}

IdentityReport central_factorial_inversion_check(unsigned t, std::size_t order)
{
    require_t(t);
    TruncatedSeries sum(order);
    for (unsigned k = 1; k <= t; ++k)
        sum += scale(BigRational(central_T(t, k)) * fact(2 * k - 1), bigG(k, order));
    return compare_series("central-factorial-inversion", tp(t, order), sum, lambert_S(2 * t - 1, order));
}

IdentityReport power_lambert_umbral_check(unsigned t, std::size_t order)
{
    require_t(t);
    return compare_series("power-lambert-umbral", tp(t, order), scale(fact(t - 1), power_lambert(t, order)),
                          umbral_eval(falling_s_product(t), s_family(), order));
}

namespace {

// sum_i {sum_j C(t-1, j+i-1) s(j+i,i)/(j+i)!} R_i, with s signed or unsigned
TruncatedSeries dilcher_R_explicit(unsigned t, std::size_t order, bool signed_stirling)
{
    TruncatedSeries sum(order);
    for (unsigned i = 1; i <= t; ++i) {
        BigRational c = 0;
        for (unsigned j = 0; j <= t - i; ++j) {
            BigRational term = BigRational(binomial(t - 1, j + i - 1) * stirling1_unsigned(j + i, i)) / fact(j + i);
            c += signed_stirling && j % 2 == 1 ? -term : term;
        }
        sum += scale(c, dilcher_R(i, order));
    }
    return sum;
}

}  // namespace

IdentityReport dilcher_R_umbral_check(unsigned t, std::size_t order)
{
    require_t(t);
    const auto p = tp(t, order);
    const auto lhs = dilcher_alternating(t, order);
    return combine("dilcher-R-umbral", p,
                   {compare_series("dilcher-R-umbral/umbral", p, scale(fact(t), lhs),
                                   umbral_eval(rising_r_product(t), r_family(), order)),
                    compare_series("dilcher-R-umbral/explicit", p, lhs, dilcher_R_explicit(t, order, true))});
}

IdentityReport dilcher_R_unsigned_explicit_check(unsigned t, std::size_t order)
{
    require_t(t);
    return compare_series("dilcher-R-unsigned-explicit", tp(t, order), dilcher_alternating(t, order),
                          dilcher_R_explicit(t, order, false));
}

IdentityReport central_factorial_polynomial_check(unsigned t)
{
    require_t(t);
    const Params p{{"t", std::to_string(t)}};
    IntPolynomial u_side;
    for (unsigned k = 0; k < t; ++k) {
        BigInt c = central_u(t, k);
        if (k % 2 == 1)
            c = -c;
        u_side = u_side + IntPolynomial::monomial(2 * t - 1 - 2 * k, c);
    }
    const auto falling = falling_factorial_polynomial(static_cast<long>(t) - 1, 2 * t - 1);

    IntPolynomial t_side;
    for (unsigned k = 1; k <= t; ++k) {
        auto basis = IntPolynomial::constant(1);
        for (unsigned i = 0; i < k; ++i)
            basis = basis * IntPolynomial(std::vector<BigInt>{BigInt(-static_cast<long>(i * i)), BigInt(1)});
        t_side = t_side + central_T(t, k) * basis;
    }
    const auto power = IntPolynomial::monomial(t);

    auto poly_report = [&](const std::string& id, const IntPolynomial& a, const IntPolynomial& b) {
        IdentityReport r{id, p};
        if (!(a == b)) {
            r.pass = false;
            const std::size_t top = static_cast<std::size_t>(std::max(a.degree(), b.degree()));
            for (std::size_t i = 0; i <= top; ++i)
                if (a.coefficient(i) != b.coefficient(i)) {
                    r.discrepancy_index = i;
                    r.lhs_value = to_string(a.coefficient(i));
                    r.rhs_value = to_string(b.coefficient(i));
                    break;
                }
        }
        return r;
    };
    return combine("central-factorial-polynomials", p,
                   {poly_report("central-factorial-polynomials/u", u_side, falling),
                    poly_report("central-factorial-polynomials/T", t_side, power)});
}

IdentityReport macmahon_umbral_check(unsigned t, std::size_t order)
{
    require_t(t);
    return compare_series("macmahon-umbral", tp(t, order), u_umbral(t, order), u_multisum(t, order));
}

}  // namespace macmahon
