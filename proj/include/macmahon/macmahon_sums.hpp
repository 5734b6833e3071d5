#pragma once

// Generating functions for MacMahon's MO(t,n) (strict tuples, U_t) and the
// weak-tuple analogue M(t,n) (V_t), each by several independent formulas,
// together with the closed forms relating them to divisor sums.

#include "macmahon/identity_report.hpp"
#include "macmahon/mod_series.hpp"
#include "macmahon/numeric.hpp"
#include "macmahon/series.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace macmahon {

enum class Family { M, MO };

enum class Formula {
    Multisum,      // defining multiple sum over tuples (both families)
    SingleSum,     // alternating single sum (M)
    ConjugateForm, // weak (2t-1)-tuples weighted by k_1 (M)
    ChainForm,     // M_1 > M_2 >= M_3 > ... chain (M)
    AndrewsRose,   // theta-type sum over (q)_inf^3 (MO)
    Umbral,        // MacMahon's umbral J-expression (MO)
    Recurrence,    // e/h convolution (M) or derivative recurrence (MO)
};

std::string to_string(Family f);
std::string to_string(Formula f);
Family parse_family(const std::string& s);
Formula parse_formula(const std::string& s);
std::vector<Formula> formulas_for(Family f);
Formula default_formula(Family f);

// U_t: sum over 1 <= k_1 < ... < k_t of prod q^{k_j} / (1 - q^{k_j})^2.
TruncatedSeries u_multisum(unsigned t, std::size_t order);
// V_t: same with 1 <= k_1 <= ... <= k_t.
TruncatedSeries v_multisum(unsigned t, std::size_t order);

// sum_{k>=1} (-1)^{k-1} (1 + q^k) q^{C(k,2) + tk} / (1 - q^k)^{2t}
TruncatedSeries m_single_sum(unsigned t, std::size_t order);
// sum over weak (2t-1)-tuples of k_1 q^{k_1 + k_3 + ... + k_{2t-1}} / prod (1 - q^{k_j})
TruncatedSeries m_conjugate_form(unsigned t, std::size_t order);
// sum over M_1 > M_2 >= M_3 > ... >= M_{2t-1} >= 1 of q^{M_1} / ((1-q^{M_1}) prod_j (1 - q^{M_j}))
TruncatedSeries m_chain_form(unsigned t, std::size_t order);
// V_t = sum_{i=1}^t (-1)^{i-1} U_i V_{t-i}, V_0 = 1
TruncatedSeries v_recurrence(unsigned t, std::size_t order);

// ((-1)^t / (q)_inf^3) sum_{k>=t} (-1)^k (2k+1)/(2t+1) C(k+t, k-t) q^{k(k+1)/2}
TruncatedSeries mo_andrews_rose(unsigned t, std::size_t order);
// ((-1)^t / (2^{2t} (2t+1)!)) (1/J_1) J(J^2-1)(J^2-9)...(J^2-(2t-1)^2), umbrally
TruncatedSeries u_umbral(unsigned t, std::size_t order);
// U_t = [(6 U_1 + t(t-1)) U_{t-1} - 2 D U_{t-1}] / (2t(2t+1)), U_1 = sigma_1 series
TruncatedSeries u_recurrence(unsigned t, std::size_t order);

// Mod-p coefficient streams for long scans.
ModSeries m_single_sum_mod(unsigned t, std::size_t order, std::uint32_t p);
ModSeries mo_andrews_rose_mod(unsigned t, std::size_t order, std::uint32_t p);

// Generating function of `family` by `formula`; results are cached per
// (family, t, formula, order) and shared read-only.
TruncatedSeries generating_function(Family family, unsigned t, Formula formula, std::size_t order);

struct CoefficientTable {
    Family family;
    unsigned t;
    Formula formula;
    std::size_t order;
    std::vector<BigInt> values;  // values[n] = M(t,n) or MO(t,n)
};

// Throws ComputationError if any coefficient is not an integer.
CoefficientTable coefficient_table(Family family, unsigned t, Formula formula, std::size_t order);

// Smallest n with a structurally nonzero coefficient: t for M, t(t+1)/2 for MO.
std::size_t minimal_support(Family family, unsigned t);

enum class ClosedForm {
    V2Ode,
    V3Ode,
    V3Sigma,
    U3mV3Sigma,
    U3Sigma,
    U4Sigma,
    MO251,
    ExcessV2U2,
    V1E2,
    RamanujanDE2,
    RamanujanDE4,
    RamanujanDE6,
};

std::string closed_form_id(ClosedForm which);
std::vector<ClosedForm> all_closed_forms();
IdentityReport closed_form_check(ClosedForm which, std::size_t order);

// sum_{i=0}^t (-1)^i U_i V_{t-i} = 0 (U_0 = V_0 = 1).
IdentityReport eh_relation_check(unsigned t, std::size_t order);

// multisum = Andrews-Rose = umbral = recurrence for U_t.
IdentityReport u_agreement_check(unsigned t, std::size_t order);
// multisum = single sum = conjugate form = recurrence (= chain form) for V_t.
IdentityReport v_agreement_check(unsigned t, std::size_t order);

// sum_{n>=0} w^n V_n: complete homogeneous sum of q^m/(1-q^m)^2 weighted by w,
// by direct enumeration of weak tuples of every length.
TruncatedSeries weighted_complete_homogeneous(const BigRational& weight, std::size_t order);

// The three-way product/sum identity obtained from Jacobi's product with
// 4 sin^2 x = c, for c in {4, 2, 1}.
IdentityReport jacobi_specialization_check(int c, std::size_t order);

}  // namespace macmahon
