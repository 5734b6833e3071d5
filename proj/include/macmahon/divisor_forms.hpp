#pragma once

// Divisor power sums and the q-series built from them: sigma series, the
// Eisenstein series E2/E4/E6, Lambert series S_t, G_t, MacMahon's J_s,
// Dilcher's R_t, and umbral evaluation of a polynomial against a family.

#include "macmahon/numeric.hpp"
#include "macmahon/series.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>

namespace macmahon {

BigInt sigma(unsigned s, unsigned long n);

// sum_{n>=1} sigma_s(n) q^n by a divisor sieve; constant term 0.
TruncatedSeries sigma_series(unsigned s, std::size_t order);

enum class Eisenstein { E2, E4, E6 };
TruncatedSeries eisenstein(Eisenstein which, std::size_t order);

// S_t = sum_{m>=1} m^t q^m / (1 - q^m).
TruncatedSeries lambert_S(unsigned t, std::size_t order);

// G_t = sum_{m>=1} q^{tm} / (1 - q^m)^{2t}.
TruncatedSeries bigG(unsigned t, std::size_t order);

// R_t = sum_{m>=1} m^t q^m prod_{j>m} (1 - q^j).
TruncatedSeries dilcher_R(unsigned t, std::size_t order);

// J_s = sum_{m>=0} (-1)^m (2m+1)^s q^{m(m+1)/2}.
TruncatedSeries J_series(unsigned s, std::size_t order);

// sum_{m>=1} q^{tm} / (1 - q^m)^t.
TruncatedSeries power_lambert(unsigned t, std::size_t order);

// sum_{m>=1} (-1)^{m-1} q^{m(m+1)/2} / ((1 - q^m)^t (q;q)_m).
TruncatedSeries dilcher_alternating(unsigned t, std::size_t order);

// (1/(2t-1)!) sum_{k=0}^{t-1} (-1)^k u(t,k) S_{2t-1-2k}.
TruncatedSeries stirling_lambert_combination(unsigned t, std::size_t order);

// Polynomial in one umbral symbol X; X^s is later replaced by the s-th
// member of a series family.  Zero coefficients are never stored.
class UmbralPolynomial {
public:
    UmbralPolynomial() = default;

    static UmbralPolynomial constant(const BigRational& c);
    // c * X^s
    static UmbralPolynomial monomial(unsigned s, const BigRational& c = 1);
    // a + b X
    static UmbralPolynomial linear(const BigRational& a, const BigRational& b);

    const std::map<unsigned, BigRational>& coefficients() const { return coeffs_; }
    BigRational coefficient(unsigned s) const;

    friend UmbralPolynomial operator+(const UmbralPolynomial& a, const UmbralPolynomial& b);
    friend UmbralPolynomial operator*(const UmbralPolynomial& a, const UmbralPolynomial& b);
    friend UmbralPolynomial operator*(const BigRational& c, const UmbralPolynomial& a);
    friend bool operator==(const UmbralPolynomial&, const UmbralPolynomial&) = default;

private:
    void add_term(unsigned s, const BigRational& c);
    std::map<unsigned, BigRational> coeffs_;
};

struct BaseFamily {
    std::string label;
    std::function<TruncatedSeries(unsigned s, std::size_t order)> generator;
};

BaseFamily j_family();  // J_s
BaseFamily s_family();  // S_s
BaseFamily r_family();  // R_s

// sum_s p_s * fam(s, order); the product is expanded first, then each
// power replaced once.
TruncatedSeries umbral_eval(const UmbralPolynomial& p, const BaseFamily& fam, std::size_t order);

// X (X^2 - 1^2)(X^2 - 3^2)...(X^2 - (2t-1)^2)
UmbralPolynomial macmahon_j_product(unsigned t);
// X (X^2 - 1^2)(X^2 - 2^2)...(X^2 - (t-1)^2)
UmbralPolynomial central_s_product(unsigned t);
// (X - 1)(X - 2)...(X - (t-1)); X^0 stands for S_0
UmbralPolynomial falling_s_product(unsigned t);
// X (X + 1)...(X + t - 1)
UmbralPolynomial rising_r_product(unsigned t);

}  // namespace macmahon
