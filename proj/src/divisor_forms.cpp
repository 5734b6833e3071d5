#include "macmahon/divisor_forms.hpp"

#include "macmahon/qcombinatorics.hpp"

#include <stdexcept>

namespace macmahon {

namespace {

BigInt ipow(unsigned long base, unsigned e)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

}  // namespace

BigInt sigma(unsigned s, unsigned long n)
{
    if (n == 0)
        throw std::invalid_argument("sigma needs n >= 1");
    BigInt sum = 0;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        sum += ipow(d, s);
        if (d != n / d)
            sum += ipow(n / d, s);
    }
    return sum;
}

TruncatedSeries sigma_series(unsigned s, std::size_t order)
{
    std::vector<BigInt> acc(order + 1);
    for (std::size_t d = 1; d <= order; ++d) {
        const BigInt ds = ipow(d, s);
        for (std::size_t m = d; m <= order; m += d)
            acc[m] += ds;
    }
    return TruncatedSeries(std::vector<BigRational>(acc.begin(), acc.end()));
}

TruncatedSeries eisenstein(Eisenstein which, std::size_t order)
{
    const auto one = TruncatedSeries::one(order);
    switch (which) {
    case Eisenstein::E2:
        return one - scale(24, sigma_series(1, order));
    case Eisenstein::E4:
        return one + scale(240, sigma_series(3, order));
    case Eisenstein::E6:
        return one - scale(504, sigma_series(5, order));
    }
    throw std::invalid_argument("unknown Eisenstein series");
}

TruncatedSeries lambert_S(unsigned t, std::size_t order)
{
    TruncatedSeries sum(order);
    for (std::size_t m = 1; m <= order; ++m) {
        auto term = divide_by_one_minus_q_power(TruncatedSeries::monomial(order, m, BigRational(ipow(m, t))), m);
        sum += term;
    }
    return sum;
}

TruncatedSeries bigG(unsigned t, std::size_t order)
{
    if (t == 0)
        throw std::invalid_argument("bigG needs t >= 1");
    TruncatedSeries sum(order);
    for (std::size_t m = 1; t * m <= order; ++m)
        sum += shift(geometric_pow(m, 2 * t, order), t * m);
    return sum;
}

TruncatedSeries dilcher_R(unsigned t, std::size_t order)
{
    TruncatedSeries sum(order);
    // tail = prod_{j=m+1}^{order} (1 - q^j); factors with j > order are 1 mod q^{order+1}
    TruncatedSeries tail = TruncatedSeries::one(order);
    for (std::size_t m = order; m >= 1; --m) {
        sum += scale(BigRational(ipow(m, t)), shift(tail, m));
        tail = multiply_by_one_minus_q_power(tail, m);
    }
    return sum;
}

TruncatedSeries J_series(unsigned s, std::size_t order)
{
    std::vector<BigRational> c(order + 1);
    for (std::size_t m = 0; m * (m + 1) / 2 <= order; ++m) {
        BigInt v = ipow(2 * m + 1, s);
        c[m * (m + 1) / 2] = (m % 2 == 0) ? v : BigInt(-v);
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries power_lambert(unsigned t, std::size_t order)
{
    if (t == 0)
        throw std::invalid_argument("power_lambert needs t >= 1");
    TruncatedSeries sum(order);
    for (std::size_t m = 1; t * m <= order; ++m)
        sum += divide_by_one_minus_q_power(TruncatedSeries::monomial(order, t * m), m, t);
    return sum;
}

TruncatedSeries dilcher_alternating(unsigned t, std::size_t order)
{
    TruncatedSeries sum(order);
    for (std::size_t m = 1; m * (m + 1) / 2 <= order; ++m) {
        auto term = divide_by_one_minus_q_power(TruncatedSeries::monomial(order, m * (m + 1) / 2), m, t);
        for (std::size_t j = 1; j <= m; ++j)
            term = divide_by_one_minus_q_power(term, j);
        if (m % 2 == 1)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

TruncatedSeries stirling_lambert_combination(unsigned t, std::size_t order)
{
    if (t == 0)
        throw std::invalid_argument("stirling_lambert_combination needs t >= 1");
    TruncatedSeries sum(order);
    for (unsigned k = 0; k < t; ++k) {
        BigRational c(central_u(t, k));
        if (k % 2 == 1)
            c = -c;
        sum += scale(c, lambert_S(2 * t - 1 - 2 * k, order));
    }
    return scale(BigRational(1) / BigRational(factorial(2 * t - 1)), sum);
}

// ---------------------------------------------------------------------------

UmbralPolynomial UmbralPolynomial::constant(const BigRational& c)
{
    return monomial(0, c);
}

UmbralPolynomial UmbralPolynomial::monomial(unsigned s, const BigRational& c)
{
    UmbralPolynomial p;
    p.add_term(s, c);
    return p;
}

UmbralPolynomial UmbralPolynomial::linear(const BigRational& a, const BigRational& b)
{
    UmbralPolynomial p;
    p.add_term(0, a);
    p.add_term(1, b);
    return p;
}

BigRational UmbralPolynomial::coefficient(unsigned s) const
{
    auto it = coeffs_.find(s);
    return it == coeffs_.end() ? BigRational(0) : it->second;
}

void UmbralPolynomial::add_term(unsigned s, const BigRational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = coeffs_.try_emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

UmbralPolynomial operator+(const UmbralPolynomial& a, const UmbralPolynomial& b)
{
    UmbralPolynomial r = a;
    for (const auto& [s, c] : b.coeffs_)
        r.add_term(s, c);
    return r;
}

UmbralPolynomial operator*(const UmbralPolynomial& a, const UmbralPolynomial& b)
{
    UmbralPolynomial r;
    for (const auto& [sa, ca] : a.coeffs_)
        for (const auto& [sb, cb] : b.coeffs_)
            r.add_term(sa + sb, ca * cb);
    return r;
}

UmbralPolynomial operator*(const BigRational& k, const UmbralPolynomial& a)
{
    UmbralPolynomial r;
    for (const auto& [s, c] : a.coeffs_)
        r.add_term(s, k * c);
    return r;
}

BaseFamily j_family()
{
    return {"J", [](unsigned s, std::size_t order) { return J_series(s, order); }};
}

BaseFamily s_family()
{
    return {"S", [](unsigned s, std::size_t order) { return lambert_S(s, order); }};
}

BaseFamily r_family()
{
    return {"R", [](unsigned s, std::size_t order) { return dilcher_R(s, order); }};
}

TruncatedSeries umbral_eval(const UmbralPolynomial& p, const BaseFamily& fam, std::size_t order)
{
    TruncatedSeries sum(order);
    for (const auto& [s, c] : p.coefficients())
        sum += scale(c, fam.generator(s, order));
    return sum;
}

UmbralPolynomial macmahon_j_product(unsigned t)
{
    auto p = UmbralPolynomial::monomial(1);
    for (unsigned i = 1; i <= t; ++i) {
        const long odd = 2 * static_cast<long>(i) - 1;
        p = p * (UmbralPolynomial::monomial(2) + UmbralPolynomial::constant(-odd * odd));
    }
    return p;
}

UmbralPolynomial central_s_product(unsigned t)
{
    auto p = UmbralPolynomial::monomial(1);
    for (unsigned i = 1; i < t; ++i) {
        const long sq = static_cast<long>(i) * static_cast<long>(i);
        p = p * (UmbralPolynomial::monomial(2) + UmbralPolynomial::constant(-sq));
    }
    return p;
}

UmbralPolynomial falling_s_product(unsigned t)
{
    auto p = UmbralPolynomial::constant(1);
    for (unsigned i = 1; i < t; ++i)
        p = p * UmbralPolynomial::linear(-static_cast<long>(i), 1);
    return p;
}

UmbralPolynomial rising_r_product(unsigned t)
{
    auto p = UmbralPolynomial::constant(1);
    for (unsigned i = 0; i < t; ++i)
        p = p * UmbralPolynomial::linear(static_cast<long>(i), 1);
    return p;
}

}  // namespace macmahon
