#include "macmahon/qcombinatorics.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

namespace macmahon {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c)
{
    return IntPolynomial(std::vector<BigInt>{c});
}

IntPolynomial IntPolynomial::monomial(std::size_t exponent, const BigInt& c)
{
    std::vector<BigInt> v(exponent + 1);
    v[exponent] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

BigRational IntPolynomial::evaluate(const BigRational& x) const
{
    BigRational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * x + BigRational(coeffs_[i]);
    return acc;
}

bool IntPolynomial::is_palindromic() const
{
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

TruncatedSeries IntPolynomial::to_series(std::size_t order) const
{
    std::vector<BigRational> c(order + 1);
    for (std::size_t i = 0; i < coeffs_.size() && i <= order; ++i)
        c[i] = coeffs_[i];
    return TruncatedSeries(std::move(c));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<BigInt> c(std::max(a.coefficients().size(), b.coefficients().size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coefficient(i) + b.coefficient(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<BigInt> c(std::max(a.coefficients().size(), b.coefficients().size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coefficient(i) - b.coefficient(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    const auto ac = a.coefficients();
    const auto bc = b.coefficients();
    std::vector<BigInt> c(ac.size() + bc.size() - 1);
    for (std::size_t i = 0; i < ac.size(); ++i)
        for (std::size_t j = 0; j < bc.size(); ++j)
            c[i + j] += ac[i] * bc[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const BigInt& k, const IntPolynomial& a)
{
    std::vector<BigInt> c(a.coefficients().begin(), a.coefficients().end());
    for (auto& x : c)
        x *= k;
    return IntPolynomial(std::move(c));
}

IntPolynomial shift(const IntPolynomial& a, std::size_t s)
{
    if (a.is_zero())
        return {};
    std::vector<BigInt> c(s + a.coefficients().size());
    std::copy(a.coefficients().begin(), a.coefficients().end(), c.begin() + static_cast<long>(s));
    return IntPolynomial(std::move(c));
}

IntPolynomial q_int(unsigned n)
{
    return IntPolynomial(std::vector<BigInt>(n, BigInt(1)));
}

IntPolynomial q_factorial(unsigned n)
{
    IntPolynomial r = IntPolynomial::constant(1);
    for (unsigned i = 2; i <= n; ++i)
        r = r * q_int(i);
    return r;
}

namespace {

// Rows of Gaussian binomials, grown on demand under a single lock.
class QBinomialTable {
public:
    IntPolynomial get(unsigned n, unsigned k)
    {
        std::lock_guard lock(mutex_);
        while (rows_.size() <= n)
            grow();
        return rows_[n][k];
    }

private:
    void grow()
    {
        const unsigned n = static_cast<unsigned>(rows_.size());
        std::vector<IntPolynomial> row(n + 1);
        row[0] = IntPolynomial::constant(1);
        row[n] = IntPolynomial::constant(1);
        for (unsigned k = 1; k < n; ++k)
            row[k] = rows_[n - 1][k - 1] + shift(rows_[n - 1][k], k);
        rows_.push_back(std::move(row));
    }

    std::mutex mutex_;
    std::vector<std::vector<IntPolynomial>> rows_;
};

class StirlingTable {
public:
    BigInt get(unsigned n, unsigned k)
    {
        if (k > n)
            return 0;
        std::lock_guard lock(mutex_);
        while (rows_.size() <= n)
            grow();
        return rows_[n][k];
    }

private:
    void grow()
    {
        const unsigned n = static_cast<unsigned>(rows_.size());
        std::vector<BigInt> row(n + 1);
        if (n == 0) {
            row[0] = 1;
        } else {
            const auto& prev = rows_[n - 1];
            for (unsigned k = 1; k <= n; ++k) {
                row[k] = prev[k - 1];
                if (k <= n - 1)
                    row[k] += BigInt(n - 1) * prev[k];
            }
        }
        rows_.push_back(std::move(row));
    }

    std::mutex mutex_;
    std::vector<std::vector<BigInt>> rows_;
};

}  // namespace

IntPolynomial q_binomial(unsigned n, unsigned k)
{
    if (k > n)
        return {};
    static QBinomialTable table;
    return table.get(n, k);
}

BigInt binomial(long n, long k)
{
    if (n < 0)
        throw std::invalid_argument("binomial: negative upper index");
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt factorial(unsigned n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigRational generalized_binomial(const BigRational& z, unsigned k)
{
    BigRational r = 1;
    for (unsigned i = 1; i <= k; ++i)
        r *= (z + i) / BigRational(i);
    return r;
}

BigInt stirling1_unsigned(unsigned n, unsigned k)
{
    static StirlingTable table;
    return table.get(n, k);
}

BigInt central_u(unsigned t, unsigned k)
{
    if (t == 0 || k >= t)
        throw std::invalid_argument("central_u needs 0 <= k <= t-1");
    BigInt sum = 0;
    const long tl = t, kl = k;
    for (long j = -kl; j <= kl; ++j) {
        const long a = tl - kl + j, b = tl - kl - j;
        if (a < 0 || b < 0)
            continue;
        BigInt term = stirling1_unsigned(t, static_cast<unsigned>(a)) *
                      stirling1_unsigned(t, static_cast<unsigned>(b));
        sum += (j % 2 == 0) ? term : BigInt(-term);
    }
    return sum;
}

BigInt central_T(unsigned t, unsigned k)
{
    if (k == 0 || k > t)
        throw std::invalid_argument("central_T needs 1 <= k <= t");
    BigRational sum = 0;
    for (unsigned i = 1; i <= k; ++i) {
        BigInt ip;
        mpz_ui_pow_ui(ip.get_mpz_t(), i, 2 * t);
        BigRational term(ip, factorial(k - i) * factorial(k + i));
        term.canonicalize();
        sum += ((k - i) % 2 == 0) ? term : BigRational(-term);
    }
    sum *= 2;
    if (!is_integer(sum))
        throw ComputationError("central_T(" + std::to_string(t) + "," + std::to_string(k) +
                               ") is not an integer: " + sum.get_str());
    return sum.get_num();
}

IntPolynomial falling_factorial_polynomial(long shift_by, unsigned len)
{
    IntPolynomial r = IntPolynomial::constant(1);
    for (unsigned i = 0; i < len; ++i)
        r = r * IntPolynomial(std::vector<BigInt>{BigInt(shift_by - static_cast<long>(i)), BigInt(1)});
    return r;
}

std::vector<TruncatedSeries> q_binomial_transform(std::span<const TruncatedSeries> a)
{
    std::vector<TruncatedSeries> b;
    for (std::size_t n = 1; n <= a.size(); ++n) {
        TruncatedSeries acc(a[0].order());
        for (std::size_t k = 1; k <= n; ++k) {
            TruncatedSeries term = mul(q_binomial(n, k).to_series(a[k - 1].order()), a[k - 1]);
            if (k % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        b.push_back(std::move(acc));
    }
    return b;
}

std::vector<TruncatedSeries> inverse_q_binomial_transform(std::span<const TruncatedSeries> b)
{
    std::vector<TruncatedSeries> a;
    for (std::size_t n = 1; n <= b.size(); ++n) {
        TruncatedSeries acc(b[0].order());
        for (std::size_t k = 1; k <= n; ++k) {
            const std::size_t e = (n - k) * (n - k - (n > k ? 1 : 0)) / 2;
            TruncatedSeries term =
                shift(mul(q_binomial(n, k).to_series(b[k - 1].order()), b[k - 1]), e);
            if (k % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        a.push_back(std::move(acc));
    }
    return a;
}

}  // namespace macmahon
