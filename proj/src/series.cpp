#include "macmahon/series.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace macmahon {

BigRational parse_rational(const std::string& text)
{
    BigRational r;
    if (text.empty() || r.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational number: '" + text + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw std::invalid_argument("TruncatedSeries needs at least one coefficient");
    for (auto& c : coeffs_) {
        if (c.get_den() == 0)
            throw std::invalid_argument("zero denominator in series coefficient");
        c.canonicalize();
    }
}

TruncatedSeries TruncatedSeries::one(std::size_t order)
{
    return monomial(order, 0);
}

TruncatedSeries TruncatedSeries::monomial(std::size_t order, std::size_t exponent,
                                          const BigRational& coeff)
{
    TruncatedSeries s(order);
    if (exponent <= order) {
        s.coeffs_[exponent] = coeff;
        s.coeffs_[exponent].canonicalize();
    }
    return s;
}

TruncatedSeries TruncatedSeries::from_integers(std::size_t order, std::initializer_list<long> coeffs)
{
    TruncatedSeries s(order);
    std::size_t i = 0;
    for (long c : coeffs) {
        if (i > order)
            break;
        s.coeffs_[i++] = c;
    }
    return s;
}

bool TruncatedSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return c == 0; });
}

bool TruncatedSeries::has_integer_coefficients() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return is_integer(c); });
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const
{
    if (new_order > order())
        throw std::invalid_argument("cannot extend a truncated series");
    return TruncatedSeries(std::vector<BigRational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs)
{
    if (rhs.order() < order())
        coeffs_.resize(rhs.order() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs)
{
    if (rhs.order() < order())
        coeffs_.resize(rhs.order() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b)
{
    TruncatedSeries r = a;
    r += b;
    return r;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b)
{
    TruncatedSeries r = a;
    r -= b;
    return r;
}

TruncatedSeries negate(const TruncatedSeries& a)
{
    std::vector<BigRational> c(a.coefficients().begin(), a.coefficients().end());
    for (auto& x : c)
        x = -x;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries scale(const BigRational& k, const TruncatedSeries& a)
{
    std::vector<BigRational> c(a.coefficients().begin(), a.coefficients().end());
    for (auto& x : c)
        x *= k;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<BigRational> c(n + 1);
    BigRational prod;
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (b[j] == 0)
                continue;
            mpq_mul(prod.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
            c[i + j] += prod;
        }
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries power(const TruncatedSeries& a, unsigned e)
{
    TruncatedSeries r = TruncatedSeries::one(a.order());
    for (unsigned i = 0; i < e; ++i)
        r = mul(r, a);
    return r;
}

TruncatedSeries invert_unit(const TruncatedSeries& a)
{
    if (a[0] == 0)
        throw ComputationError("non-unit series");
    const std::size_t n = a.order();
    std::vector<BigRational> r(n + 1);
    const BigRational inv0 = 1 / a[0];
    r[0] = inv0;
    BigRational acc, prod;
    for (std::size_t i = 1; i <= n; ++i) {
        acc = 0;
        for (std::size_t j = 1; j <= i; ++j) {
            if (a[j] == 0)
                continue;
            mpq_mul(prod.get_mpq_t(), a[j].get_mpq_t(), r[i - j].get_mpq_t());
            acc += prod;
        }
        r[i] = -acc * inv0;
    }
    return TruncatedSeries(std::move(r));
}

TruncatedSeries shift(const TruncatedSeries& a, std::size_t s)
{
    const std::size_t n = a.order();
    std::vector<BigRational> c(n + 1);
    for (std::size_t i = s; i <= n; ++i)
        c[i] = a[i - s];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries q_derivative(const TruncatedSeries& a)
{
    std::vector<BigRational> c(a.coefficients().begin(), a.coefficients().end());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] *= static_cast<unsigned long>(i);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries divide_by_one_minus_q_power(const TruncatedSeries& a, std::size_t k, unsigned r)
{
    if (k == 0)
        throw std::invalid_argument("1/(1-q^0) is not a power series");
    std::vector<BigRational> c(a.coefficients().begin(), a.coefficients().end());
    for (unsigned pass = 0; pass < r; ++pass)
        for (std::size_t i = k; i < c.size(); ++i)
            c[i] += c[i - k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries multiply_by_one_minus_q_power(const TruncatedSeries& a, std::size_t k, unsigned r)
{
    if (k == 0)
        return TruncatedSeries(a.order());
    std::vector<BigRational> c(a.coefficients().begin(), a.coefficients().end());
    for (unsigned pass = 0; pass < r; ++pass)
        for (std::size_t i = c.size(); i-- > k;)
            c[i] -= c[i - k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries geometric_pow(std::size_t k, unsigned r, std::size_t order)
{
    if (k == 0 || r == 0)
        throw std::invalid_argument("geometric_pow needs k >= 1 and r >= 1");
    std::vector<BigRational> c(order + 1);
    BigInt binom = 1;  // C(m + r - 1, r - 1), updated multiplicatively in m
    for (std::size_t m = 0; m * k <= order; ++m) {
        if (m > 0) {
            binom *= static_cast<unsigned long>(m + r - 1);
            binom /= static_cast<unsigned long>(m);
        }
        c[m * k] = binom;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries euler_function(std::size_t order)
{
    std::vector<BigRational> c(order + 1);
    // generalized pentagonal numbers m(3m-1)/2 for m = 0, 1, -1, 2, -2, ...
    for (long m = 0;; ++m) {
        bool any = false;
        for (long sign : {1L, -1L}) {
            if (m == 0 && sign == -1)
                continue;
            const long mm = sign * m;
            const long e = mm * (3 * mm - 1) / 2;
            if (e < 0 || static_cast<std::size_t>(e) > order)
                continue;
            any = true;
            c[e] = (m % 2 == 0) ? 1 : -1;
        }
        if (!any && m > 0)
            break;
    }
    return TruncatedSeries(std::move(c));
}

std::optional<std::size_t> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t i = 0; i <= n; ++i)
        if (a[i] != b[i])
            return i;
    return std::nullopt;
}

}  // namespace macmahon
