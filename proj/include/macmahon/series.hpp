#pragma once

// Truncated formal power series in one variable q with exact rational
// coefficients.  A series of order N knows the coefficients of q^0..q^N;
// every binary operation yields the smaller of the two operand orders and
// nothing is ever extended implicitly.

#include "macmahon/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace macmahon {

class TruncatedSeries {
public:
    // Zero series of the given order.
    explicit TruncatedSeries(std::size_t order);
    // Order is coeffs.size() - 1; coeffs must be non-empty.
    explicit TruncatedSeries(std::vector<BigRational> coeffs);

    static TruncatedSeries one(std::size_t order);
    static TruncatedSeries monomial(std::size_t order, std::size_t exponent,
                                    const BigRational& coeff = 1);
    // Leading coefficients from a list of integers, zero-filled up to order.
    static TruncatedSeries from_integers(std::size_t order, std::initializer_list<long> coeffs);

    std::size_t order() const { return coeffs_.size() - 1; }
    const BigRational& operator[](std::size_t i) const { return coeffs_[i]; }
    std::span<const BigRational> coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool has_integer_coefficients() const;

    // Drops coefficients above new_order (new_order <= order()).
    TruncatedSeries truncated(std::size_t new_order) const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<BigRational> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries negate(const TruncatedSeries& a);
TruncatedSeries scale(const BigRational& c, const TruncatedSeries& a);
// Schoolbook Cauchy product truncated at min(order_a, order_b).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries power(const TruncatedSeries& a, unsigned e);

// Multiplicative inverse; throws ComputationError("non-unit series") when
// the constant term vanishes.
TruncatedSeries invert_unit(const TruncatedSeries& a);

// a * q^s, same order (coefficients pushed past the order are dropped).
TruncatedSeries shift(const TruncatedSeries& a, std::size_t s);

// D = q d/dq: coefficient n becomes n * a_n.
TruncatedSeries q_derivative(const TruncatedSeries& a);

// a / (1 - q^k)^r and a * (1 - q^k)^r in O(r N) each.
TruncatedSeries divide_by_one_minus_q_power(const TruncatedSeries& a, std::size_t k,
                                            unsigned r = 1);
TruncatedSeries multiply_by_one_minus_q_power(const TruncatedSeries& a, std::size_t k,
                                              unsigned r = 1);

// 1/(1 - q^k)^r: coefficient of q^{km} is C(m + r - 1, r - 1).
TruncatedSeries geometric_pow(std::size_t k, unsigned r, std::size_t order);

// (q)_inf = prod_{k>=1} (1 - q^k) from the pentagonal number theorem.
TruncatedSeries euler_function(std::size_t order);

// First index where a and b differ (compared up to the smaller order).
std::optional<std::size_t> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a) { return negate(a); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }
inline TruncatedSeries operator*(const BigRational& c, const TruncatedSeries& a) { return scale(c, a); }

}  // namespace macmahon
