#pragma once

// Random generators and brute-force oracles shared by the unit, property
// and acceptance tests.  Nothing here calls the library's own formulas.

#include "macmahon/numeric.hpp"
#include "macmahon/series.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace testsupport {

using macmahon::BigInt;
using macmahon::BigRational;
using macmahon::TruncatedSeries;

inline std::mt19937_64& rng()
{
    static std::mt19937_64 gen(0x5eed1234u);
    return gen;
}

inline long uniform(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline BigRational random_rational(long span = 9, long max_den = 6)
{
    BigRational r(uniform(-span, span), uniform(1, max_den));
    r.canonicalize();
    return r;
}

inline TruncatedSeries random_series(std::size_t order, bool unit = false)
{
    std::vector<BigRational> c(order + 1);
    for (auto& x : c)
        x = random_rational();
    if (unit && c[0] == 0)
        c[0] = 1;
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries random_integer_series(std::size_t order)
{
    std::vector<BigRational> c(order + 1);
    for (auto& x : c)
        x = uniform(-1000, 1000);
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries from_ints(const std::vector<long>& v)
{
    std::vector<BigRational> c;
    for (long x : v)
        c.emplace_back(x);
    return TruncatedSeries(std::move(c));
}

// Divisor power sum by trial division.
inline BigInt sigma_naive(unsigned s, unsigned long n)
{
    BigInt total = 0;
    for (unsigned long d = 1; d <= n; ++d)
        if (n % d == 0) {
            BigInt p;
            mpz_ui_pow_ui(p.get_mpz_t(), d, s);
            total += p;
        }
    return total;
}

// prod_{k=1}^{order} (1 - q^k), multiplied out term by term.
inline std::vector<BigInt> naive_euler_product(std::size_t order)
{
    std::vector<BigInt> c(order + 1, 0);
    c[0] = 1;
    for (std::size_t k = 1; k <= order; ++k)
        for (std::size_t i = order; i >= k; --i) {
            c[i] -= c[i - k];
            if (i == k)
                break;
        }
    return c;
}

// Number of partitions of n with three colours: coefficient of 1/(q)^3.
inline BigInt coloured_partitions(unsigned n, unsigned colours)
{
    std::vector<BigInt> c(n + 1, 0);
    c[0] = 1;
    for (unsigned col = 0; col < colours; ++col)
        for (unsigned part = 1; part <= n; ++part)
            for (unsigned i = part; i <= n; ++i)
                c[i] += c[i - part];
    return c[n];
}

// Sum over tuples k_1 <= ... <= k_t (strict when `strict`) and multiplicities
// m_j >= 1 with sum m_j k_j = n of prod m_j.  This is the coefficient of q^n
// in the defining multisum, counted combinatorially.
inline BigInt macmahon_count(unsigned t, unsigned n, bool strict)
{
    BigInt total = 0;
    std::function<void(unsigned, unsigned, unsigned, BigInt)> rec = [&](unsigned left, unsigned min_k,
                                                                        unsigned remaining, BigInt weight) {
        if (left == 0) {
            if (remaining == 0)
                total += weight;
            return;
        }
        for (unsigned k = min_k; k * left <= remaining; ++k)
            for (unsigned m = 1; m * k <= remaining; ++m)
                rec(left - 1, strict ? k + 1 : k, remaining - m * k, weight * m);
    };
    rec(t, 1, n, 1);
    return total;
}

// Unsigned Stirling numbers of the first kind by counting cycles of every
// permutation of {0..n-1}.
inline std::vector<BigInt> stirling_row_by_permutations(unsigned n)
{
    std::vector<BigInt> row(n + 1, 0);
    std::vector<unsigned> perm(n);
    for (unsigned i = 0; i < n; ++i)
        perm[i] = i;
    do {
        std::vector<bool> seen(n, false);
        unsigned cycles = 0;
        for (unsigned i = 0; i < n; ++i) {
            if (seen[i])
                continue;
            ++cycles;
            for (unsigned j = i; !seen[j]; j = perm[j])
                seen[j] = true;
        }
        row[cycles] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return row;
}

// Coefficients of the Gaussian binomial: number of k-subsets of {0..n-1}
// whose element sum exceeds the minimum k(k-1)/2 by j.
inline std::vector<BigInt> qbinomial_by_subsets(unsigned n, unsigned k)
{
    std::vector<BigInt> c(k * (n - k) + 1, 0);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<unsigned>(__builtin_popcount(mask)) != k)
            continue;
        unsigned sum = 0;
        for (unsigned i = 0; i < n; ++i)
            if (mask & (1u << i))
                sum += i;
        c[sum - k * (k - 1) / 2] += 1;
    }
    return c;
}

inline BigInt pascal(unsigned n, unsigned k)
{
    std::vector<std::vector<BigInt>> t(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        t[i].assign(i + 1, 1);
        for (unsigned j = 1; j < i; ++j)
            t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return k > n ? BigInt(0) : t[n][k];
}

}  // namespace testsupport
