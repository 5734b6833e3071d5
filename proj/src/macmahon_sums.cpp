#include "macmahon/macmahon_sums.hpp"

#include "macmahon/divisor_forms.hpp"
#include "macmahon/qcombinatorics.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace macmahon {

std::string to_string(Family f)
{
    return f == Family::M ? "M" : "MO";
}

std::string to_string(Formula f)
{
    switch (f) {
    case Formula::Multisum: return "multisum";
    case Formula::SingleSum: return "single-sum";
    case Formula::ConjugateForm: return "conjugate";
    case Formula::ChainForm: return "chain";
    case Formula::AndrewsRose: return "andrews-rose";
    case Formula::Umbral: return "umbral";
    case Formula::Recurrence: return "recurrence";
    }
    return "?";
}

Family parse_family(const std::string& s)
{
    if (s == "M")
        return Family::M;
    if (s == "MO")
        return Family::MO;
    throw std::invalid_argument("unknown family '" + s + "' (known: M, MO)");
}

Formula parse_formula(const std::string& s)
{
    for (Formula f : {Formula::Multisum, Formula::SingleSum, Formula::ConjugateForm, Formula::ChainForm,
                      Formula::AndrewsRose, Formula::Umbral, Formula::Recurrence})
        if (to_string(f) == s)
            return f;
    throw std::invalid_argument("unknown formula '" + s +
                                "' (known: multisum, single-sum, conjugate, chain, andrews-rose, umbral, recurrence)");
}

std::vector<Formula> formulas_for(Family f)
{
    if (f == Family::M)
        return {Formula::Multisum, Formula::SingleSum, Formula::ConjugateForm, Formula::ChainForm, Formula::Recurrence};
    return {Formula::Multisum, Formula::AndrewsRose, Formula::Umbral, Formula::Recurrence};
}

Formula default_formula(Family f)
{
    return f == Family::M ? Formula::SingleSum : Formula::AndrewsRose;
}

namespace {

void require_t(unsigned t)
{
    if (t == 0)
        throw std::invalid_argument("t must be >= 1");
}

// Smallest total of `count` further parts when the next part is at least k.
std::size_t min_tail(std::size_t k, unsigned count, bool strict)
{
    if (!strict)
        return count * k;
    return count * k + static_cast<std::size_t>(count) * (count - 1) / 2;
}

void enumerate_tuples(unsigned remaining, std::size_t start, std::size_t used, const TruncatedSeries& partial,
                      bool strict, TruncatedSeries& acc)
{
    if (remaining == 0) {
        acc += partial;
        return;
    }
    const std::size_t order = partial.order();
    for (std::size_t k = start; used + min_tail(k, remaining, strict) <= order; ++k) {
        auto next = divide_by_one_minus_q_power(shift(partial, k), k, 2);
        enumerate_tuples(remaining - 1, strict ? k + 1 : k, used + k, next, strict, acc);
    }
}

TruncatedSeries multisum(unsigned t, std::size_t order, bool strict)
{
    require_t(t);
    TruncatedSeries acc(order);
    enumerate_tuples(t, 1, 0, TruncatedSeries::one(order), strict, acc);
    return acc;
}

}  // namespace

TruncatedSeries u_multisum(unsigned t, std::size_t order)
{
    return multisum(t, order, true);
}

TruncatedSeries v_multisum(unsigned t, std::size_t order)
{
    return multisum(t, order, false);
}

TruncatedSeries m_single_sum(unsigned t, std::size_t order)
{
    require_t(t);
    TruncatedSeries sum(order);
    for (std::size_t k = 1; k * (k - 1) / 2 + t * k <= order; ++k) {
        auto g = shift(geometric_pow(k, 2 * t, order), k * (k - 1) / 2 + t * k);
        auto term = g + shift(g, k);
        if (k % 2 == 1)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

namespace {

// Positions are 1-based; odd positions carry q^{k_j}.
void enumerate_conjugate(unsigned pos, unsigned length, std::size_t start, std::size_t used,
                         const TruncatedSeries& partial, TruncatedSeries& acc)
{
    if (pos > length) {
        acc += partial;
        return;
    }
    const std::size_t order = partial.order();
    // odd positions in pos..length; at least one since the length is odd
    const unsigned odd_left = (length - pos) / 2 + 1;
    for (std::size_t k = start; used + odd_left * k <= order; ++k) {
        TruncatedSeries next = pos % 2 == 1 ? shift(partial, k) : partial;
        if (pos == 1)
            next = scale(BigRational(static_cast<unsigned long>(k)), next);
        next = divide_by_one_minus_q_power(next, k);
        enumerate_conjugate(pos + 1, length, k, used + (pos % 2 == 1 ? k : 0), next, acc);
    }
}

}  // namespace

TruncatedSeries m_conjugate_form(unsigned t, std::size_t order)
{
    require_t(t);
    TruncatedSeries acc(order);
    enumerate_conjugate(1, 2 * t - 1, 1, 0, TruncatedSeries::one(order), acc);
    return acc;
}

TruncatedSeries m_chain_form(unsigned t, std::size_t order)
{
    require_t(t);
    const unsigned length = 2 * t - 1;
    // prefix[M] = sum_{M' <= M} W_{j}(M'), where W_j(M) is the sum over the
    // chain tail starting at position j with M_j = M.
    std::vector<TruncatedSeries> prefix;
    if (length >= 2) {
        std::vector<TruncatedSeries> w(order + 1, TruncatedSeries(order));
        for (std::size_t m = 1; m <= order; ++m)
            w[m] = geometric_pow(m, 1, order);
        for (unsigned j = length - 1; j >= 2; --j) {
            // relation between positions j and j+1: odd j strict, even j weak
            std::vector<TruncatedSeries> pre(order + 1, TruncatedSeries(order));
            for (std::size_t m = 1; m <= order; ++m)
                pre[m] = pre[m - 1] + w[m];
            std::vector<TruncatedSeries> nw(order + 1, TruncatedSeries(order));
            for (std::size_t m = 1; m <= order; ++m) {
                const auto& below = (j % 2 == 1) ? pre[m - 1] : pre[m];
                nw[m] = divide_by_one_minus_q_power(below, m);
            }
            w = std::move(nw);
        }
        prefix.assign(order + 1, TruncatedSeries(order));
        for (std::size_t m = 1; m <= order; ++m)
            prefix[m] = prefix[m - 1] + w[m];
    }
    TruncatedSeries sum(order);
    for (std::size_t m1 = 1; m1 <= order; ++m1) {
        auto head = TruncatedSeries::monomial(order, m1);
        if (length >= 2)
            head = mul(head, prefix[m1 - 1]);  // M_1 > M_2
        sum += divide_by_one_minus_q_power(head, m1, 2);
    }
    return sum;
}

TruncatedSeries v_recurrence(unsigned t, std::size_t order)
{
    require_t(t);
    std::vector<TruncatedSeries> v{TruncatedSeries::one(order)};
    std::vector<TruncatedSeries> u{TruncatedSeries::one(order)};
    for (unsigned i = 1; i <= t; ++i)
        u.push_back(generating_function(Family::MO, i, Formula::Multisum, order));
    for (unsigned s = 1; s <= t; ++s) {
        TruncatedSeries vs(order);
        for (unsigned i = 1; i <= s; ++i) {
            auto term = mul(u[i], v[s - i]);
            if (i % 2 == 1)
                vs += term;
            else
                vs -= term;
        }
        v.push_back(std::move(vs));
    }
    return v[t];
}

namespace {

// theta_t = sum_{k>=t} (-1)^k (2k+1)/(2t+1) C(k+t, k-t) q^{k(k+1)/2}; the
// coefficient equals 2 C(k+t, 2t+1) + C(k+t, 2t), an integer.
std::vector<std::pair<std::size_t, BigInt>> andrews_rose_theta(unsigned t, std::size_t order)
{
    std::vector<std::pair<std::size_t, BigInt>> terms;
    for (std::size_t k = t; k * (k + 1) / 2 <= order; ++k) {
        BigRational c = BigRational(binomial(static_cast<long>(k + t), static_cast<long>(k - t)) * (2 * k + 1),
                                    2 * t + 1);
        c.canonicalize();
        if (!is_integer(c))
            throw ComputationError("Andrews-Rose theta coefficient is not an integer");
        BigInt v = c.get_num();
        if ((k + t) % 2 == 1)  // (-1)^t (-1)^k
            v = -v;
        terms.emplace_back(k * (k + 1) / 2, v);
    }
    return terms;
}

}  // namespace

TruncatedSeries mo_andrews_rose(unsigned t, std::size_t order)
{
    require_t(t);
    TruncatedSeries theta(order);
    for (const auto& [e, c] : andrews_rose_theta(t, order))
        theta += TruncatedSeries::monomial(order, e, BigRational(c));
    const auto inv = invert_unit(euler_function(order));
    auto r = mul(theta, mul(inv, mul(inv, inv)));
    if (!r.has_integer_coefficients())
        throw ComputationError("Andrews-Rose form produced a non-integer coefficient");
    return r;
}

TruncatedSeries u_umbral(unsigned t, std::size_t order)
{
    require_t(t);
    const auto body = umbral_eval(macmahon_j_product(t), j_family(), order);
    BigInt denom = factorial(2 * t + 1);
    denom <<= 2 * t;
    BigRational pre(1, 1);
    pre /= BigRational(denom);
    if (t % 2 == 1)
        pre = -pre;
    return scale(pre, mul(body, invert_unit(J_series(1, order))));
}

TruncatedSeries u_recurrence(unsigned t, std::size_t order)
{
    require_t(t);
    const auto u1 = sigma_series(1, order);
    TruncatedSeries u = u1;
    for (unsigned s = 2; s <= t; ++s) {
        const BigRational tt(s * (s - 1));
        auto lhs = mul(scale(6, u1) + scale(tt, TruncatedSeries::one(order)), u);
        auto next = lhs - scale(2, q_derivative(u));
        u = scale(BigRational(1, 2 * s * (2 * s + 1)), next);
    }
    return u;
}

ModSeries m_single_sum_mod(unsigned t, std::size_t order, std::uint32_t p)
{
    require_t(t);
    require_scan_modulus(p);
    ModSeries sum(order, p);
    for (std::size_t k = 1; k * (k - 1) / 2 + t * k <= order; ++k) {
        const std::size_t e = k * (k - 1) / 2 + t * k;
        std::vector<std::uint32_t> c(order + 1, 0);
        c[e] = 1;
        if (e + k <= order)
            c[e + k] = 1;
        auto term = divide_by_one_minus_q_power(ModSeries(std::move(c), p), k, 2 * t);
        sum = (k % 2 == 1) ? add(sum, term) : sub(sum, term);
    }
    return sum;
}

ModSeries mo_andrews_rose_mod(unsigned t, std::size_t order, std::uint32_t p)
{
    require_t(t);
    require_scan_modulus(p);
    std::vector<std::uint32_t> c(order + 1, 0);
    for (const auto& [e, v] : andrews_rose_theta(t, order))
        c[e] = reduce_mod(v, p);
    const auto inv = invert_unit(euler_function_mod(order, p));
    return mul(ModSeries(std::move(c), p), mul(inv, mul(inv, inv)));
}

namespace {

TruncatedSeries compute(Family family, unsigned t, Formula formula, std::size_t order)
{
    if (family == Family::M) {
        switch (formula) {
        case Formula::Multisum: return v_multisum(t, order);
        case Formula::SingleSum: return m_single_sum(t, order);
        case Formula::ConjugateForm: return m_conjugate_form(t, order);
        case Formula::ChainForm: return m_chain_form(t, order);
        case Formula::Recurrence: return v_recurrence(t, order);
        default: break;
        }
    } else {
        switch (formula) {
        case Formula::Multisum: return u_multisum(t, order);
        case Formula::AndrewsRose: return mo_andrews_rose(t, order);
        case Formula::Umbral: return u_umbral(t, order);
        case Formula::Recurrence: return u_recurrence(t, order);
        default: break;
        }
    }
    throw std::invalid_argument("formula " + to_string(formula) + " is not available for family " +
                                to_string(family));
}

using CacheKey = std::tuple<Family, unsigned, Formula, std::size_t>;

std::mutex cache_mutex;
std::map<CacheKey, TruncatedSeries> cache;

}  // namespace

TruncatedSeries generating_function(Family family, unsigned t, Formula formula, std::size_t order)
{
    const CacheKey key{family, t, formula, order};
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    // Computed outside the lock; a racing duplicate computes the same value.
    auto value = compute(family, t, formula, order);
    std::lock_guard lock(cache_mutex);
    return cache.try_emplace(key, std::move(value)).first->second;
}

CoefficientTable coefficient_table(Family family, unsigned t, Formula formula, std::size_t order)
{
    const auto s = generating_function(family, t, formula, order);
    CoefficientTable table{family, t, formula, order, {}};
    table.values.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        if (!is_integer(s[n]))
            throw ComputationError(to_string(family) + "(" + std::to_string(t) + "," + std::to_string(n) +
                                   ") is not an integer: " + to_string(s[n]));
        table.values.push_back(s[n].get_num());
    }
    return table;
}

std::size_t minimal_support(Family family, unsigned t)
{
    return family == Family::M ? t : static_cast<std::size_t>(t) * (t + 1) / 2;
}

// ---------------------------------------------------------------------------

std::string closed_form_id(ClosedForm which)
{
    switch (which) {
    case ClosedForm::V2Ode: return "closed-form-V2-ode";
    case ClosedForm::V3Ode: return "closed-form-V3-ode";
    case ClosedForm::V3Sigma: return "closed-form-V3";
    case ClosedForm::U3mV3Sigma: return "closed-form-U3mV3";
    case ClosedForm::U3Sigma: return "closed-form-U3";
    case ClosedForm::U4Sigma: return "closed-form-U4";
    case ClosedForm::MO251: return "closed-form-sigma1-convolution";
    case ClosedForm::ExcessV2U2: return "closed-form-V2-excess";
    case ClosedForm::V1E2: return "closed-form-V1-E2";
    case ClosedForm::RamanujanDE2: return "ramanujan-DE2";
    case ClosedForm::RamanujanDE4: return "ramanujan-DE4";
    case ClosedForm::RamanujanDE6: return "ramanujan-DE6";
    }
    return "?";
}

std::vector<ClosedForm> all_closed_forms()
{
    return {ClosedForm::V2Ode,      ClosedForm::V3Ode,        ClosedForm::V3Sigma,      ClosedForm::U3mV3Sigma,
            ClosedForm::U3Sigma,    ClosedForm::U4Sigma,      ClosedForm::MO251,        ClosedForm::ExcessV2U2,
            ClosedForm::V1E2,       ClosedForm::RamanujanDE2, ClosedForm::RamanujanDE4, ClosedForm::RamanujanDE6};
}

namespace {

// sum_n P_s(n) sigma_s(n) q^n / denom, where polys[s] lists the coefficients
// of P_s in increasing powers of n.
TruncatedSeries sigma_polynomial_form(const std::map<unsigned, std::vector<long>>& polys, long denom,
                                      std::size_t order)
{
    std::vector<BigRational> c(order + 1);
    for (const auto& [s, poly] : polys) {
        const auto sig = sigma_series(s, order);
        for (std::size_t n = 1; n <= order; ++n) {
            BigInt pn = 0, npow = 1;
            for (long a : poly) {
                pn += a * npow;
                npow *= static_cast<unsigned long>(n);
            }
            c[n] += BigRational(pn) * sig[n];
        }
    }
    for (auto& v : c)
        v /= denom;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries eisenstein_polynomial(const std::vector<std::pair<BigRational, std::vector<Eisenstein>>>& terms,
                                      std::size_t order)
{
    TruncatedSeries sum(order);
    for (const auto& [c, factors] : terms) {
        auto prod = TruncatedSeries::one(order);
        for (auto e : factors)
            prod = mul(prod, eisenstein(e, order));
        sum += scale(c, prod);
    }
    return sum;
}

Params order_param(std::size_t order)
{
    return {{"order", std::to_string(order)}};
}

}  // namespace

IdentityReport closed_form_check(ClosedForm which, std::size_t order)
{
    const std::string id = closed_form_id(which);
    const Params params = order_param(order);
    auto V = [order](unsigned t) { return generating_function(Family::M, t, Formula::Multisum, order); };
    auto U = [order](unsigned t) { return generating_function(Family::MO, t, Formula::Multisum, order); };
    const auto one = TruncatedSeries::one(order);
    using E = Eisenstein;

    switch (which) {
    case ClosedForm::V2Ode: {
        const auto v1 = sigma_series(1, order);
        auto rhs = scale(BigRational(1, 10), mul(scale(7, v1) - one, v1) + q_derivative(v1));
        return compare_series(id, params, V(2), rhs);
    }
    case ClosedForm::V3Ode: {
        const auto v1 = sigma_series(1, order);
        const auto v2 = V(2);
        auto rhs = mul(scale(19, v1) - scale(3, one), v2) - scale(4, power(v1, 3)) + mul(v1, v1) + q_derivative(v2);
        return compare_series(id, params, V(3), scale(BigRational(1, 21), rhs));
    }
    case ClosedForm::V3Sigma: {
        auto sig = sigma_polynomial_form({{1, {9, 60, 40}}, {3, {-70, -70}}, {5, {31}}}, 1920, order);
        auto eis = eisenstein_polynomial({{BigRational(367, 967680), {}},
                                          {BigRational(-1, 5120), {E::E2}},
                                          {BigRational(-1, 9216), {E::E2, E::E2}},
                                          {BigRational(-1, 82944), {E::E2, E::E2, E::E2}},
                                          {BigRational(-1, 23040), {E::E4}},
                                          {BigRational(-1, 69120), {E::E2, E::E4}},
                                          {BigRational(-1, 181440), {E::E6}}},
                                         order);
        return combine(id, params,
                       {compare_series(id + "/sigma", params, V(3), sig),
                        compare_series(id + "/eisenstein", params, V(3), eis)});
    }
    case ClosedForm::U3mV3Sigma: {
        auto sig = sigma_polynomial_form({{1, {28, -160}}, {3, {120, 40}}, {5, {-28}}}, 1920, order);
        const auto v1 = sigma_series(1, order);
        auto via_h = scale(BigRational(1, 5), scale(-2, power(v1, 3)) + mul(v1, v1) - mul(v1, q_derivative(v1)));
        auto eis = eisenstein_polynomial({{BigRational(11, 34560), {}},
                                          {BigRational(-7, 11520), {E::E2}},
                                          {BigRational(1, 3456), {E::E2, E::E2}},
                                          {BigRational(1, 34560), {E::E2, E::E4}},
                                          {BigRational(-1, 34560), {E::E4}}},
                                         order);
        const auto diff = U(3) - V(3);
        return combine(id, params,
                       {compare_series(id + "/sigma", params, diff, sig),
                        compare_series(id + "/symmetric", params, diff, via_h),
                        compare_series(id + "/eisenstein", params, diff, eis)});
    }
    case ClosedForm::U3Sigma: {
        auto sig = sigma_polynomial_form({{1, {37, -100, 40}}, {3, {50, -30}}, {5, {3}}}, 1920, order);
        return compare_series(id, params, U(3), sig);
    }
    case ClosedForm::U4Sigma: {
        auto sig = sigma_polynomial_form(
            {{1, {3229, -9870, 5880, -840}}, {3, {4935, -4410, 756}}, {5, {441, -126}}, {7, {5}}}, 967680, order);
        return compare_series(id, params, U(4), sig);
    }
    case ClosedForm::MO251: {
        const auto v1 = sigma_series(1, order);
        auto lhs = scale(12, mul(v1, v1));
        auto rhs = sigma_polynomial_form({{1, {1, -6}}, {3, {5}}}, 1, order);
        return compare_series(id, params, lhs, rhs);
    }
    case ClosedForm::ExcessV2U2: {
        const auto diff = V(2) - U(2);
        auto sig = scale(BigRational(1, 6), sigma_series(3, order) - sigma_series(1, order));
        TruncatedSeries direct(order);
        for (std::size_t k = 1; 2 * k <= order; ++k)
            direct += shift(geometric_pow(k, 4, order), 2 * k);
        return combine(id, params,
                       {compare_series(id + "/sigma", params, diff, sig),
                        compare_series(id + "/lambert", params, diff, direct)});
    }
    case ClosedForm::V1E2: {
        auto rhs = scale(BigRational(1, 24), one - eisenstein(E::E2, order));
        return compare_series(id, params, V(1), rhs);
    }
    case ClosedForm::RamanujanDE2: {
        const auto e2 = eisenstein(E::E2, order), e4 = eisenstein(E::E4, order);
        return compare_series(id, params, scale(12, q_derivative(e2)), mul(e2, e2) - e4);
    }
    case ClosedForm::RamanujanDE4: {
        const auto e2 = eisenstein(E::E2, order), e4 = eisenstein(E::E4, order), e6 = eisenstein(E::E6, order);
        return compare_series(id, params, scale(3, q_derivative(e4)), mul(e2, e4) - e6);
    }
    case ClosedForm::RamanujanDE6: {
        const auto e2 = eisenstein(E::E2, order), e4 = eisenstein(E::E4, order), e6 = eisenstein(E::E6, order);
        return compare_series(id, params, scale(2, q_derivative(e6)), mul(e2, e6) - mul(e4, e4));
    }
    }
    throw std::invalid_argument("unknown closed form");
}

IdentityReport eh_relation_check(unsigned t, std::size_t order)
{
    require_t(t);
    TruncatedSeries sum(order);
    for (unsigned i = 0; i <= t; ++i) {
        auto ui = i == 0 ? TruncatedSeries::one(order) : generating_function(Family::MO, i, Formula::Multisum, order);
        auto vi = i == t ? TruncatedSeries::one(order)
                         : generating_function(Family::M, t - i, Formula::Multisum, order);
        if (i % 2 == 0)
            sum += mul(ui, vi);
        else
            sum -= mul(ui, vi);
    }
    return compare_series("e-h-relation", {{"t", std::to_string(t)}, {"order", std::to_string(order)}}, sum,
                          TruncatedSeries(order));
}

namespace {

IdentityReport agreement(Family family, unsigned t, std::size_t order, const std::string& id)
{
    const Params params{{"t", std::to_string(t)}, {"order", std::to_string(order)}};
    const auto reference = generating_function(family, t, Formula::Multisum, order);
    std::vector<IdentityReport> parts;
    for (Formula f : formulas_for(family)) {
        if (f == Formula::Multisum)
            continue;
        parts.push_back(
            compare_series(id + "/" + to_string(f), params, reference, generating_function(family, t, f, order)));
    }
    return combine(id, params, parts);
}

}  // namespace

IdentityReport u_agreement_check(unsigned t, std::size_t order)
{
    return agreement(Family::MO, t, order, "U-agreement");
}

IdentityReport v_agreement_check(unsigned t, std::size_t order)
{
    return agreement(Family::M, t, order, "V-agreement");
}

namespace {

void enumerate_all_weak(std::size_t start, std::size_t used, const TruncatedSeries& partial,
                        const BigRational& weight, TruncatedSeries& acc)
{
    acc += partial;
    const std::size_t order = partial.order();
    for (std::size_t k = start; used + k <= order; ++k) {
        auto next = scale(weight, divide_by_one_minus_q_power(shift(partial, k), k, 2));
        enumerate_all_weak(k, used + k, next, weight, acc);
    }
}

}  // namespace

TruncatedSeries weighted_complete_homogeneous(const BigRational& weight, std::size_t order)
{
    TruncatedSeries acc(order);
    enumerate_all_weak(1, 0, TruncatedSeries::one(order), weight, acc);
    return acc;
}

IdentityReport jacobi_specialization_check(int c, std::size_t order)
{
    if (c != 4 && c != 2 && c != 1)
        throw std::invalid_argument("Jacobi specialization needs c in {4, 2, 1}");
    const Params params{{"c", std::to_string(c)}, {"order", std::to_string(order)}};
    // 1 - (2 - c) q^m + q^{2m}
    auto quadratic = [&](std::size_t m) {
        std::vector<BigRational> v(order + 1);
        v[0] = 1;
        if (m <= order)
            v[m] -= 2 - c;
        if (2 * m <= order)
            v[2 * m] += 1;
        return TruncatedSeries(std::move(v));
    };

    auto product = TruncatedSeries::one(order);
    for (std::size_t m = 1; m <= order; ++m)
        product = mul(multiply_by_one_minus_q_power(product, m, 2), invert_unit(quadratic(m)));

    TruncatedSeries middle(order);
    for (std::size_t m = 1; m * (m - 1) / 2 <= order; ++m) {
        auto term = TruncatedSeries::monomial(order, m * (m - 1) / 2);
        term = multiply_by_one_minus_q_power(multiply_by_one_minus_q_power(term, m), 2 * m);
        term = mul(term, invert_unit(quadratic(m)));
        if (m % 2 == 1)
            middle += term;
        else
            middle -= term;
    }

    const auto homogeneous = weighted_complete_homogeneous(BigRational(-c), order);
    return combine("jacobi-specialization", params,
                   {compare_series("jacobi-specialization/product-sum", params, product, middle),
                    compare_series("jacobi-specialization/sum-homogeneous", params, middle, homogeneous)});
}

}  // namespace macmahon
