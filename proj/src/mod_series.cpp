#include "macmahon/mod_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace macmahon {

namespace {

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t powmod(std::uint32_t a, std::uint64_t e, std::uint32_t p)
{
    std::uint32_t r = 1 % p;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p)
{
    if (a % p == 0)
        throw ComputationError("no inverse of 0 mod " + std::to_string(p));
    return powmod(a, p - 2, p);
}

void require_same_modulus(const ModSeries& a, const ModSeries& b)
{
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("ModSeries moduli differ");
}

}  // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

void require_scan_modulus(std::uint64_t p)
{
    if (p < 3 || p >= (1ULL << 31) || !is_prime(p))
        throw std::invalid_argument("modulus must be an odd prime below 2^31, got " + std::to_string(p));
}

std::uint32_t reduce_mod(const BigInt& r, std::uint32_t p)
{
    BigInt m = r % p;
    if (m < 0)
        m += p;
    return static_cast<std::uint32_t>(m.get_ui());
}

std::uint32_t reduce_mod(const BigRational& r, std::uint32_t p)
{
    const std::uint32_t num = reduce_mod(BigInt(r.get_num()), p);
    const std::uint32_t den = reduce_mod(BigInt(r.get_den()), p);
    if (den == 0)
        throw ComputationError("denominator of " + r.get_str() + " divisible by " + std::to_string(p));
    return mulmod(num, inverse_mod(den, p), p);
}

ModSeries::ModSeries(std::size_t order, std::uint32_t modulus) : coeffs_(order + 1, 0), p_(modulus)
{
    require_scan_modulus(modulus);
}

ModSeries::ModSeries(std::vector<std::uint32_t> coeffs, std::uint32_t modulus)
    : coeffs_(std::move(coeffs)), p_(modulus)
{
    require_scan_modulus(modulus);
    if (coeffs_.empty())
        throw std::invalid_argument("ModSeries needs at least one coefficient");
    for (auto& c : coeffs_)
        c %= p_;
}

ModSeries ModSeries::one(std::size_t order, std::uint32_t modulus)
{
    std::vector<std::uint32_t> c(order + 1, 0);
    c[0] = 1;
    return ModSeries(std::move(c), modulus);
}

ModSeries reduce(const TruncatedSeries& a, std::uint32_t p)
{
    require_scan_modulus(p);
    std::vector<std::uint32_t> c(a.order() + 1);
    for (std::size_t i = 0; i <= a.order(); ++i)
        c[i] = reduce_mod(a[i], p);
    return ModSeries(std::move(c), p);
}

ModSeries add(const ModSeries& a, const ModSeries& b)
{
    require_same_modulus(a, b);
    const std::uint32_t p = a.modulus();
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<std::uint32_t> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        c[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a[i]) + b[i]) % p);
    return ModSeries(std::move(c), p);
}

ModSeries sub(const ModSeries& a, const ModSeries& b)
{
    require_same_modulus(a, b);
    const std::uint32_t p = a.modulus();
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<std::uint32_t> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        c[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a[i]) + p - b[i]) % p);
    return ModSeries(std::move(c), p);
}

ModSeries scale(std::uint32_t k, const ModSeries& a)
{
    const std::uint32_t p = a.modulus();
    std::vector<std::uint32_t> c(a.coefficients().begin(), a.coefficients().end());
    for (auto& x : c)
        x = mulmod(x, k % p, p);
    return ModSeries(std::move(c), p);
}

ModSeries mul(const ModSeries& a, const ModSeries& b)
{
    require_same_modulus(a, b);
    const std::uint32_t p = a.modulus();
    const std::size_t n = std::min(a.order(), b.order());
    // p < 2^31 so each product is < 2^62; reduce the accumulator every step
    std::vector<std::uint32_t> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i <= k; ++i)
            acc = (acc + static_cast<std::uint64_t>(a[i]) * b[k - i]) % p;
        c[k] = static_cast<std::uint32_t>(acc);
    }
    return ModSeries(std::move(c), p);
}

ModSeries invert_unit(const ModSeries& a)
{
    const std::uint32_t p = a.modulus();
    if (a[0] == 0)
        throw ComputationError("non-unit series");
    const std::size_t n = a.order();
    const std::uint32_t inv0 = inverse_mod(a[0], p);
    std::vector<std::uint32_t> r(n + 1);
    r[0] = inv0;
    for (std::size_t i = 1; i <= n; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 1; j <= i; ++j)
            acc = (acc + static_cast<std::uint64_t>(a[j]) * r[i - j]) % p;
        r[i] = mulmod(static_cast<std::uint32_t>((p - acc) % p), inv0, p);
    }
    return ModSeries(std::move(r), p);
}

ModSeries shift(const ModSeries& a, std::size_t s)
{
    const std::size_t n = a.order();
    std::vector<std::uint32_t> c(n + 1, 0);
    for (std::size_t i = s; i <= n; ++i)
        c[i] = a[i - s];
    return ModSeries(std::move(c), a.modulus());
}

ModSeries divide_by_one_minus_q_power(const ModSeries& a, std::size_t k, unsigned r)
{
    if (k == 0)
        throw std::invalid_argument("1/(1-q^0) is not a power series");
    const std::uint32_t p = a.modulus();
    std::vector<std::uint32_t> c(a.coefficients().begin(), a.coefficients().end());
    for (unsigned pass = 0; pass < r; ++pass)
        for (std::size_t i = k; i < c.size(); ++i)
            c[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c[i]) + c[i - k]) % p);
    return ModSeries(std::move(c), p);
}

ModSeries euler_function_mod(std::size_t order, std::uint32_t p)
{
    return reduce(euler_function(order), p);
}

}  // namespace macmahon
