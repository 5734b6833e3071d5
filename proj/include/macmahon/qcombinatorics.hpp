#pragma once

// q-integers, q-factorials and Gaussian binomials as exact integer
// polynomials, plus the ordinary combinatorial numbers the identities need:
// binomials, factorials, unsigned Stirling numbers of the first kind and the
// two central factorial families u(t,k), T(t,k).

#include "macmahon/numeric.hpp"
#include "macmahon/series.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace macmahon {

// Polynomial with big-integer coefficients; coefficient i multiplies q^i.
// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial constant(const BigInt& c);
    static IntPolynomial monomial(std::size_t exponent, const BigInt& c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    BigInt coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    std::span<const BigInt> coefficients() const { return coeffs_; }

    BigRational evaluate(const BigRational& x) const;
    bool is_palindromic() const;
    TruncatedSeries to_series(std::size_t order) const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const BigInt& c, const IntPolynomial& a);
// a * q^s
IntPolynomial shift(const IntPolynomial& a, std::size_t s);

// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
IntPolynomial q_int(unsigned n);
// [n]_q! = [1]_q [2]_q ... [n]_q.
IntPolynomial q_factorial(unsigned n);
// Gaussian binomial via the q-Pascal rule; zero polynomial when k > n.
IntPolynomial q_binomial(unsigned n, unsigned k);

// Ordinary binomial C(n, k); zero when k < 0 or k > n (n >= 0).
BigInt binomial(long n, long k);
BigInt factorial(unsigned n);
// C(z + k, k) = prod_{i=1}^k (z + i) / i for rational z.
BigRational generalized_binomial(const BigRational& z, unsigned k);

// Unsigned Stirling number of the first kind (memoized).
BigInt stirling1_unsigned(unsigned n, unsigned k);

// u(t, k) = sum_{j=-k}^{k} (-1)^j s(t, t-k+j) s(t, t-k-j), 0 <= k <= t-1.
BigInt central_u(unsigned t, unsigned k);

// T(t, k) = 2 sum_{i=1}^k (-1)^{k-i} i^{2t} / ((k-i)! (k+i)!), 1 <= k <= t.
// Throws ComputationError if the sum is not an integer.
BigInt central_T(unsigned t, unsigned k);

// Falling factorial (x + shift)(x + shift - 1)...(x + shift - len + 1) as a
// polynomial in x (shift may be negative).
IntPolynomial falling_factorial_polynomial(long shift, unsigned len);

// q-binomial transform b_n = sum_{k=1}^n (-1)^{k-1} qbin(n,k) a_k (n = 1..len)
// and its inverse a_n = sum_{k=1}^n (-1)^{k-1} q^{C(n-k,2)} qbin(n,k) b_k.
// Index 0 of the span holds the n = 1 entry.
std::vector<TruncatedSeries> q_binomial_transform(std::span<const TruncatedSeries> a);
std::vector<TruncatedSeries> inverse_q_binomial_transform(std::span<const TruncatedSeries> b);

}  // namespace macmahon
