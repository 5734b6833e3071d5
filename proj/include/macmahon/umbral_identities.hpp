#pragma once

// Identities between Lambert-type series, divisor-sum series and umbral
// expressions in the families S_s, R_s; plus the central factorial
// polynomial identities they rest on.

#include "macmahon/identity_report.hpp"

#include <cstddef>

namespace macmahon {

// (2t-1)! G_t = sum_k (-1)^k u(t,k) S_{2t-1-2k} = S(S^2-1)...(S^2-(t-1)^2) umbrally,
// and [q^n] G_t = sum_{k | n} C(n/k + t - 1, 2t - 1).
IdentityReport stirling_lambert_check(unsigned t, std::size_t order);
// sum_{k=1}^t T(t,k) (2k-1)! G_k = S_{2t-1}.
IdentityReport central_factorial_inversion_check(unsigned t, std::size_t order);
// (t-1)! sum_m q^{tm}/(1-q^m)^t = (S-1)(S-2)...(S-(t-1)) with S^0 read as S_0.
IdentityReport power_lambert_umbral_check(unsigned t, std::size_t order);
// t! sum_m (-1)^{m-1} q^{C(m+1,2)} / ((1-q^m)^t (q;q)_m) = R(R+1)...(R+t-1),
// and the same series as sum_i {sum_j C(t-1,j+i-1) s(j+i,i)/(j+i)!} R_i with
// signed Stirling numbers s(j+i,i) = (-1)^j |s(j+i,i)|.
IdentityReport dilcher_R_umbral_check(unsigned t, std::size_t order);
// The explicit combination with unsigned Stirling numbers, as it is usually
// quoted.  Holds only for t = 1; kept so the discrepancy stays visible.
IdentityReport dilcher_R_unsigned_explicit_check(unsigned t, std::size_t order);
// sum_k (-1)^k u(t,k) x^{2t-1-2k} = (x+t-1)(x+t-2)...(x-t+1) and
// x^t = sum_k T(t,k) x(x-1^2)...(x-(k-1)^2), as exact polynomials.
IdentityReport central_factorial_polynomial_check(unsigned t);
// MacMahon's umbral J-expression against the strict-tuple multisum.
IdentityReport macmahon_umbral_check(unsigned t, std::size_t order);

}  // namespace macmahon
