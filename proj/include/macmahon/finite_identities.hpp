#pragma once

// Finite-n identities between q-series built from q-integers and Gaussian
// binomials, their rational (q -> 1) counterparts, and the WZ certificates
// behind them.  Every q-side is expanded as an honest power series:
// 1/[k]_q = (1 - q)/(1 - q^k) and 1/qbin(n,k) is a series inverse.

#include "macmahon/identity_report.hpp"
#include "macmahon/numeric.hpp"
#include "macmahon/series.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace macmahon {

// F_t(n) = sum_{1<=k_1<=...<=k_t<=n} q^{k_1+...+k_t} / ([k_1]^2 ... [k_t]^2); F_0 = 1.
TruncatedSeries F_series(unsigned t, unsigned n, std::size_t order);
// G_t(n) = sum_{k=1}^n (-1)^{k-1} (1+q^k) q^{C(k,2)+tk} qbin(n,k) / ([k]^{2t} qbin(n+k,k)); G_0 = 1.
TruncatedSeries G_series(unsigned t, unsigned n, std::size_t order);
// The same sum written over qbin(2n, n-k) / qbin(2n, n).
TruncatedSeries G_series_central(unsigned t, unsigned n, std::size_t order);
// H_t(n) = sum over 2t-tuples of (q^{n+k_1+k_3+...} + q^{k_2+k_4+...}) / ([n+k_1][k_2]...[k_{2t}]); H_0 = 1.
TruncatedSeries H_series(unsigned t, unsigned n, std::size_t order);

IdentityReport theorem_fgh_check(unsigned t, unsigned n, std::size_t order);
// Initial values and X_t(n) - X_t(n-1) = q^n/[n]^2 X_{t-1}(n) for X in {F, G, H}.
IdentityReport fgh_recurrence_check(unsigned t, unsigned n, std::size_t order);

// Conservative common-denominator degree bound 2t * (1 + 2 + ... + 2n).
std::size_t fgh_degree_bound(unsigned t, unsigned n);

// Agreement to order 2B+1 of two series known to be rational functions with
// numerator plus denominator degree at most B; this proves they are equal.
// Throws ComputationError("insufficient truncation") if either order < 2B+1.
bool certify_rational_equality(const TruncatedSeries& lhs, const TruncatedSeries& rhs, std::size_t bound);

// F = G = H certified as rational functions with the bound above.
IdentityReport certified_fgh_check(unsigned t, unsigned n);

IdentityReport dilcher_check(unsigned t, unsigned n, std::size_t order);
IdentityReport mss_check(unsigned t, unsigned n, unsigned x, std::size_t order);

// The multiplied-out form of the MSS identity with shift q^{C(k,2)-k(n-1)}.
// AsPrinted keeps the extra [k]_q factor and the inner sum bounded by n;
// InversePair is what the q-inverse pair actually gives (no [k]_q, inner
// sum bounded by k).  Only the latter holds for n >= 2.
enum class PrecursorReading { AsPrinted, InversePair };
IdentityReport mss_precursor_check(unsigned t, unsigned n, unsigned x, std::size_t order,
                                   PrecursorReading reading = PrecursorReading::InversePair);

IdentityReport atidA_check(unsigned t, unsigned n, std::size_t order);
IdentityReport atidB_check(unsigned t, unsigned n, unsigned x, std::size_t order);
// Two-parameter generalisation with [z+k] denominators and its transform hypothesis.
IdentityReport cor52_check(unsigned t, unsigned n, unsigned x, unsigned z, std::size_t order);
IdentityReport cor53_check(unsigned t, unsigned n, unsigned z, std::size_t order);

// Iterated q-binomial transform: given a_1..a_n, b = transform(a), checks
// sum_k (-1)^{k-1} qbin(n,k) a_k q^{tk}/[z+k]^t
//   = (1/qbin(z+n,n)) sum_{k_1<=...<=k_t<=n} b_{k_1} qbin(z+k_1,k_1) q^{k_1+...+k_t} / prod [z+k_j].
IdentityReport q_transform_lemma_check(const std::vector<TruncatedSeries>& a, unsigned t, unsigned z);

// --- rational (q = 1) identities, exact ------------------------------------

// sum_k (-1)^{k-1} C(n,k) / ((z+k)^t C(x+k,k))
//   = (1/C(z+n,n)) sum_{k_1<=...<=k_t<=n} k_1 C(z+k_1,k_1) / ((x+k_1) prod (z+k_j)).
// Throws ComputationError("parameter hits pole") when a denominator vanishes.
IdentityReport rational_master_check(unsigned t, unsigned n, const BigRational& z, const BigRational& x);
// sum_k (-1)^{k-1} C(n,k)/C(x+k,k) = n/(x+n).
IdentityReport rational_hypothesis_check(unsigned n, const BigRational& x);
// Binomial transform lemma for an arbitrary rational sequence a_1..a_n.
IdentityReport rational_transform_lemma_check(const std::vector<BigRational>& a, unsigned t, const BigRational& z);
// sum 1/(k_1^2...k_t^2) = 2 sum (-1)^{k-1} C(n,k)/(k^{2t} C(n+k,k)) = sum over 2t-tuples 2/((n+k_1)k_2...k_{2t}).
IdentityReport rational_fgh_check(unsigned t, unsigned n);
// sum (-1)^{k-1} C(n,k)/k^t = sum_{k_1<=...<=k_t<=n} 1/(k_1...k_t).
IdentityReport dilcher_rational_check(unsigned t, unsigned n);

// --- WZ certificates --------------------------------------------------------

enum class WzPair {
    Master,          // binomial-sum lemma behind the rational transform lemma
    Cor32,           // sum (-1)^{k-1} C(n,k)/C(x+k,k) = n/(x+n)
    Lemma51,         // q-analogue of Master
    Cor52,           // sum (-1)^{k-1} qbin(n,k) a_k = [n] q^x/[x+n]
    Cor53,           // sum (-1)^{k-1} qbin(n,k) [k] q^{C(k,2)}/[z+k] = 1/qbin(z+n,n)
    QbinDifference,  // first difference of qbin(n,k)/qbin(n+k,k) in n
};

std::string to_string(WzPair pair);
WzPair parse_wz_pair(const std::string& s);

// Checks the difference relation and the telescoped sum over all
// 1 <= m <= n <= n_max (or 1 <= k <= n <= n_max).  `param` is z or x; the
// q-pairs need it to be a nonnegative integer.  `order` is ignored by the
// rational pairs.
IdentityReport wz_check(WzPair pair, unsigned n_max, const BigRational& param, std::size_t order);

// The q-binomial difference with the (1 - q^k)^2 factor exactly as it is
// usually printed (the correct factor is [k]_q^2); kept to document the slip.
IdentityReport qbin_difference_printed_check(unsigned n_max, std::size_t order);

}  // namespace macmahon
