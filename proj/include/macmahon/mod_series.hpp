#pragma once

// Truncated power series over Z/p for an odd prime p < 2^31.  This is the
// backend for long congruence scans; the rational TruncatedSeries is the
// reference it must agree with after reduction.

#include "macmahon/series.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace macmahon {

// Throws std::invalid_argument unless p is an odd prime below 2^31.
void require_scan_modulus(std::uint64_t p);
bool is_prime(std::uint64_t n);

// Residue of r mod p; r must be p-integral (denominator prime to p).
std::uint32_t reduce_mod(const BigRational& r, std::uint32_t p);
std::uint32_t reduce_mod(const BigInt& r, std::uint32_t p);

class ModSeries {
public:
    ModSeries(std::size_t order, std::uint32_t modulus);
    ModSeries(std::vector<std::uint32_t> coeffs, std::uint32_t modulus);

    static ModSeries one(std::size_t order, std::uint32_t modulus);

    std::size_t order() const { return coeffs_.size() - 1; }
    std::uint32_t modulus() const { return p_; }
    std::uint32_t operator[](std::size_t i) const { return coeffs_[i]; }
    std::span<const std::uint32_t> coefficients() const { return coeffs_; }

    friend bool operator==(const ModSeries&, const ModSeries&) = default;

private:
    std::vector<std::uint32_t> coeffs_;
    std::uint32_t p_;
};

ModSeries reduce(const TruncatedSeries& a, std::uint32_t p);

ModSeries add(const ModSeries& a, const ModSeries& b);
ModSeries sub(const ModSeries& a, const ModSeries& b);
ModSeries scale(std::uint32_t c, const ModSeries& a);
ModSeries mul(const ModSeries& a, const ModSeries& b);
ModSeries invert_unit(const ModSeries& a);
ModSeries shift(const ModSeries& a, std::size_t s);
ModSeries divide_by_one_minus_q_power(const ModSeries& a, std::size_t k, unsigned r = 1);
ModSeries euler_function_mod(std::size_t order, std::uint32_t p);

}  // namespace macmahon
