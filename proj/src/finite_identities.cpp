#include "macmahon/finite_identities.hpp"

#include "macmahon/qcombinatorics.hpp"

#include <stdexcept>

namespace macmahon {

namespace {

using Tuple = std::vector<unsigned>;

// Calls fn on every 1 <= k_1 <= ... <= k_len <= max; one empty tuple when len = 0.
template <class Fn>
void for_each_weak_tuple(unsigned len, unsigned max, Fn&& fn)
{
    Tuple k(len, 1);
    if (len == 0) {
        fn(k);
        return;
    }
    if (max == 0)
        return;
    while (true) {
        fn(k);
        int i = static_cast<int>(len) - 1;
        while (i >= 0 && k[i] == max)
            --i;
        if (i < 0)
            return;
        ++k[i];
        for (unsigned j = i + 1; j < len; ++j)
            k[j] = k[i];
    }
}

[[noreturn]] void pole()
{
    throw ComputationError("parameter hits pole");
}

// a / [k]_q
TruncatedSeries over_qint(const TruncatedSeries& a, unsigned k)
{
    if (k == 0)
        pole();
    return divide_by_one_minus_q_power(multiply_by_one_minus_q_power(a, 1), k);
}

TruncatedSeries over_qint(TruncatedSeries a, unsigned k, unsigned times)
{
    for (unsigned i = 0; i < times; ++i)
        a = over_qint(a, k);
    return a;
}

// a * [k]_q
TruncatedSeries times_qint(const TruncatedSeries& a, unsigned k)
{
    if (k == 0)
        return TruncatedSeries(a.order());
    return divide_by_one_minus_q_power(multiply_by_one_minus_q_power(a, k), 1);
}

TruncatedSeries times_poly(const TruncatedSeries& a, const IntPolynomial& p)
{
    return mul(a, p.to_series(a.order()));
}

TruncatedSeries over_poly(const TruncatedSeries& a, const IntPolynomial& p)
{
    if (p.is_zero())
        pole();
    return mul(a, invert_unit(p.to_series(a.order())));
}

TruncatedSeries q_pow(std::size_t order, std::size_t e)
{
    return TruncatedSeries::monomial(order, e);
}

void add_signed(TruncatedSeries& acc, const TruncatedSeries& term, unsigned k)
{
    if (k % 2 == 1)
        acc += term;
    else
        acc -= term;
}

void add_signed(BigRational& acc, const BigRational& term, unsigned k)
{
    if (k % 2 == 1)
        acc += term;
    else
        acc -= term;
}

std::size_t c2(std::size_t k)
{
    return k * (k - (k > 0 ? 1 : 0)) / 2;
}

std::string str(unsigned v)
{
    return std::to_string(v);
}

std::string str(std::size_t v)
{
    return std::to_string(v);
}

unsigned sum_of(const Tuple& k)
{
    unsigned s = 0;
    for (unsigned v : k)
        s += v;
    return s;
}

}  // namespace

TruncatedSeries F_series(unsigned t, unsigned n, std::size_t order)
{
    if (t == 0)
        return TruncatedSeries::one(order);
    TruncatedSeries sum(order);
    for_each_weak_tuple(t, n, [&](const Tuple& k) {
        auto term = q_pow(order, sum_of(k));
        for (unsigned kj : k)
            term = over_qint(term, kj, 2);
        sum += term;
    });
    return sum;
}

TruncatedSeries G_series(unsigned t, unsigned n, std::size_t order)
{
    if (t == 0)
        return TruncatedSeries::one(order);
    TruncatedSeries sum(order);
    for (unsigned k = 1; k <= n; ++k) {
        const std::size_t e = c2(k) + std::size_t{t} * k;
        auto term = q_pow(order, e) + q_pow(order, e + k);
        term = times_poly(term, q_binomial(n, k));
        term = over_qint(term, k, 2 * t);
        term = over_poly(term, q_binomial(n + k, k));
        add_signed(sum, term, k);
    }
    return sum;
}

TruncatedSeries G_series_central(unsigned t, unsigned n, std::size_t order)
{
    if (t == 0)
        return TruncatedSeries::one(order);
    TruncatedSeries sum(order);
    for (unsigned k = 1; k <= n; ++k) {
        const std::size_t e = c2(k) + std::size_t{t} * k;
        auto term = q_pow(order, e) + q_pow(order, e + k);
        term = times_poly(term, q_binomial(2 * n, n - k));
        add_signed(sum, over_qint(term, k, 2 * t), k);
    }
    return over_poly(sum, q_binomial(2 * n, n));
}

TruncatedSeries H_series(unsigned t, unsigned n, std::size_t order)
{
    if (t == 0)
        return TruncatedSeries::one(order);
    TruncatedSeries sum(order);
    for_each_weak_tuple(2 * t, n, [&](const Tuple& k) {
        std::size_t odd = n, even = 0;
        for (unsigned j = 0; j < k.size(); ++j)
            (j % 2 == 0 ? odd : even) += k[j];
        auto term = q_pow(order, odd) + q_pow(order, even);
        term = over_qint(term, n + k[0]);
        for (unsigned j = 1; j < k.size(); ++j)
            term = over_qint(term, k[j]);
        sum += term;
    });
    return sum;
}

IdentityReport theorem_fgh_check(unsigned t, unsigned n, std::size_t order)
{
    const Params p{{"t", str(t)}, {"n", str(n)}, {"order", str(order)}};
    const auto F = F_series(t, n, order);
    const auto G = G_series(t, n, order);
    const auto H = H_series(t, n, order);
    return combine("theorem-FGH", p,
                   {compare_series("F=G", p, F, G), compare_series("F=H", p, F, H),
                    compare_series("G=G-central", p, G, G_series_central(t, n, order))});
}

IdentityReport fgh_recurrence_check(unsigned t, unsigned n, std::size_t order)
{
    if (t == 0 || n == 0)
        throw std::invalid_argument("recurrence check needs t, n >= 1");
    const Params p{{"t", str(t)}, {"n", str(n)}, {"order", str(order)}};
    using Builder = TruncatedSeries (*)(unsigned, unsigned, std::size_t);
    const std::pair<const char*, Builder> builders[] = {{"F", F_series}, {"G", G_series}, {"H", H_series}};
    // [1]_q = 1, so X_t(1) = q^t; q^t/(1-q)^{2t} is X_t(1)/(1-q)^{2t}
    const auto at_one = TruncatedSeries::monomial(order, t);
    std::vector<IdentityReport> parts;
    for (const auto& [name, X] : builders) {
        const std::string tag(name);
        parts.push_back(compare_series(tag + "(0)=0", p, X(t, 0, order), TruncatedSeries(order)));
        parts.push_back(compare_series(tag + "(1)", p, X(t, 1, order), at_one));
        auto rhs = over_qint(shift(X(t - 1, n, order), n), n, 2);
        parts.push_back(compare_series(tag + "-recurrence", p, X(t, n, order) - X(t, n - 1, order), rhs));
    }
    return combine("theorem-FGH-recurrence", p, parts);
}

std::size_t fgh_degree_bound(unsigned t, unsigned n)
{
    return std::size_t{2} * t * (std::size_t{n} * (2 * n + 1));
}

bool certify_rational_equality(const TruncatedSeries& lhs, const TruncatedSeries& rhs, std::size_t bound)
{
    const std::size_t need = 2 * bound + 1;
    if (lhs.order() < need || rhs.order() < need)
        throw ComputationError("insufficient truncation");
    return !first_mismatch(lhs.truncated(need), rhs.truncated(need)).has_value();
}

IdentityReport certified_fgh_check(unsigned t, unsigned n)
{
    const std::size_t bound = fgh_degree_bound(t, n);
    const std::size_t order = 2 * bound + 1;
    const Params p{{"t", str(t)}, {"n", str(n)}, {"bound", str(bound)}};
    const auto F = F_series(t, n, order);
    const auto G = G_series(t, n, order);
    const auto H = H_series(t, n, order);
    auto r = combine("theorem-FGH-certified", p, {compare_series("F=G", p, F, G), compare_series("F=H", p, F, H)});
    if (r.pass && !(certify_rational_equality(F, G, bound) && certify_rational_equality(F, H, bound)))
        throw ComputationError("certification disagrees with coefficient comparison");
    return r;
}

IdentityReport dilcher_check(unsigned t, unsigned n, std::size_t order)
{
    const Params p{{"t", str(t)}, {"n", str(n)}, {"order", str(order)}};
    TruncatedSeries lhs(order), rhs(order);
    for (unsigned k = 1; k <= n; ++k) {
        auto term = times_poly(q_pow(order, c2(k) + std::size_t{t} * k), q_binomial(n, k));
        add_signed(lhs, over_qint(term, k, t), k);
    }
    for_each_weak_tuple(t, n, [&](const Tuple& k) {
        auto term = q_pow(order, sum_of(k));
        for (unsigned kj : k)
            term = over_qint(term, kj);
        rhs += term;
    });
    return compare_series("dilcher", p, lhs, rhs);
}

namespace {

// sum_{k_1<=...<=k_t<=bound} q^{k_1+...+k_t} / prod [x+k_j]
TruncatedSeries shifted_harmonic(unsigned t, unsigned bound, unsigned x, std::size_t order)
{
    TruncatedSeries sum(order);
    for_each_weak_tuple(t, bound, [&](const Tuple& k) {
        auto term = q_pow(order, sum_of(k));
        for (unsigned kj : k)
            term = over_qint(term, x + kj);
        sum += term;
    });
    return sum;
}

}  // namespace

IdentityReport mss_check(unsigned t, unsigned n, unsigned x, std::size_t order)
{
    const Params p{{"t", str(t)}, {"n", str(n)}, {"x", str(x)}, {"order", str(order)}};
    TruncatedSeries lhs(order);
    for (unsigned k = 1; k <= n; ++k) {
        auto term = times_poly(q_pow(order, c2(k) + std::size_t{t} * k), q_binomial(n, k));
        term = times_qint(term, k);
        add_signed(lhs, over_qint(term, x + k, t + 1), k);
    }
    auto rhs = over_poly(shifted_harmonic(t, n, x, order), q_binomial(x + n, n));
    return compare_series("mss", p, lhs, rhs);
}

IdentityReport mss_precursor_check(unsigned t, unsigned n, unsigned x, std::size_t order, PrecursorReading reading)
{
    const bool printed = reading == PrecursorReading::AsPrinted;
    const Params p{{"t", str(t)},
                   {"n", str(n)},
                   {"x", str(x)},
                   {"order", str(order)},
                   {"reading", printed ? "as-printed" : "inverse-pair"}};
    // Both sides are multiplied by q^{C(n,2)}, turning q^{C(k,2)-k(n-1)} into q^{C(n-k,2)}.
    TruncatedSeries lhs(order);
    for (unsigned k = 1; k <= n; ++k) {
        auto term = times_poly(q_pow(order, c2(n - k)), q_binomial(n, k));
        if (printed)
            term = times_qint(term, k);
        term = over_poly(term, q_binomial(x + k, k));
        add_signed(lhs, mul(term, shifted_harmonic(t, printed ? n : k, x, order)), k);
    }
    auto rhs = times_qint(q_pow(order, c2(n) + std::size_t{t} * n), n);
    rhs = over_qint(rhs, x + n, t + 1);
    return compare_series("mss-precursor", p, lhs, rhs);
}

IdentityReport atidA_check(unsigned t, unsigned n, std::size_t order)
{
    const Params p{{"t", str(t)}, {"n", str(n)}, {"order", str(order)}};
    return compare_series("atidA", p, G_series(t, n, order), H_series(t, n, order));
}

IdentityReport atidB_check(unsigned t, unsigned n, unsigned x, std::size_t order)
{
    const Params p{{"t", str(t)}, {"n", str(n)}, {"x", str(x)}, {"order", str(order)}};
    TruncatedSeries lhs(order), rhs(order);
    for (unsigned k = 1; k <= n; ++k) {
        auto term = times_poly(q_pow(order, c2(k) + std::size_t{x + 2 * t} * k), q_binomial(n, k));
        term = over_qint(term, k, 2 * t);
        add_signed(lhs, over_poly(term, q_binomial(x + k, k)), k);
    }
    for_each_weak_tuple(2 * t, n, [&](const Tuple& k) {
        auto term = over_qint(q_pow(order, x + sum_of(k)), x + k[0]);
        for (unsigned j = 1; j < k.size(); ++j)
            term = over_qint(term, k[j]);
        rhs += term;
    });
    return compare_series("atidB", p, lhs, rhs);
}

IdentityReport q_transform_lemma_check(const std::vector<TruncatedSeries>& a, unsigned t, unsigned z)
{
    if (a.empty())
        throw std::invalid_argument("transform lemma needs a non-empty sequence");
    const auto n = static_cast<unsigned>(a.size());
    const std::size_t order = a[0].order();
    const Params p{{"t", str(t)}, {"n", str(n)}, {"z", str(z)}, {"order", str(order)}};
    const auto b = q_binomial_transform(a);
    TruncatedSeries lhs(order), rhs(order);
    for (unsigned k = 1; k <= n; ++k)
        add_signed(lhs, over_qint(times_poly(shift(a[k - 1], std::size_t{t} * k), q_binomial(n, k)), z + k, t), k);
    for_each_weak_tuple(t, n, [&](const Tuple& k) {
        auto term = times_poly(shift(b[k[0] - 1], sum_of(k)), q_binomial(z + k[0], k[0]));
        for (unsigned kj : k)
            term = over_qint(term, z + kj);
        rhs += term;
    });
    rhs = over_poly(rhs, q_binomial(z + n, n));
    return compare_series("q-transform-lemma", p, lhs, rhs);
}

namespace {

// Checks sum_{k=1}^{m} (-1)^{k-1} qbin(m,k) a_k = b_m for m = 1..n.
IdentityReport q_hypothesis(const std::string& id, const Params& p, const std::vector<TruncatedSeries>& a,
                            const std::vector<TruncatedSeries>& b)
{
    const auto transformed = q_binomial_transform(a);
    std::vector<IdentityReport> parts;
    for (std::size_t m = 0; m < b.size(); ++m)
        parts.push_back(compare_series(id, p, transformed[m], b[m]));
    return combine(id, p, parts);
}

}  // namespace

IdentityReport cor52_check(unsigned t, unsigned n, unsigned x, unsigned z, std::size_t order)
{
    const Params p{{"t", str(t)}, {"n", str(n)}, {"x", str(x)}, {"z", str(z)}, {"order", str(order)}};
    std::vector<TruncatedSeries> a, b;
    for (unsigned k = 1; k <= n; ++k) {
        a.push_back(over_poly(q_pow(order, c2(k) + std::size_t{x} * k), q_binomial(x + k, k)));
        b.push_back(over_qint(times_qint(q_pow(order, x), k), x + k));
    }
    TruncatedSeries lhs(order), rhs(order);
    for (unsigned k = 1; k <= n; ++k) {
        auto term = times_poly(q_pow(order, c2(k) + std::size_t{x + t} * k), q_binomial(n, k));
        term = over_qint(term, z + k, t);
        add_signed(lhs, over_poly(term, q_binomial(x + k, k)), k);
    }
    for_each_weak_tuple(t, n, [&](const Tuple& k) {
        auto term = times_qint(q_pow(order, x + sum_of(k)), k[0]);
        term = times_poly(term, q_binomial(z + k[0], k[0]));
        term = over_qint(term, x + k[0]);
        for (unsigned kj : k)
            term = over_qint(term, z + kj);
        rhs += term;
    });
    rhs = over_poly(rhs, q_binomial(z + n, n));
    return combine("cor52", p,
                   {q_hypothesis("cor52/hypothesis", p, a, b), compare_series("cor52/display", p, lhs, rhs),
                    q_transform_lemma_check(a, t, z)});
}

IdentityReport cor53_check(unsigned t, unsigned n, unsigned z, std::size_t order)
{
    const Params p{{"t", str(t)}, {"n", str(n)}, {"z", str(z)}, {"order", str(order)}};
    std::vector<TruncatedSeries> a, b;
    for (unsigned k = 1; k <= n; ++k) {
        a.push_back(over_qint(times_qint(q_pow(order, c2(k)), k), z + k));
        b.push_back(over_poly(TruncatedSeries::one(order), q_binomial(z + k, k)));
    }
    TruncatedSeries lhs(order);
    for (unsigned k = 1; k <= n; ++k) {
        auto term = times_qint(times_poly(q_pow(order, c2(k) + std::size_t{t} * k), q_binomial(n, k)), k);
        add_signed(lhs, over_qint(term, z + k, t + 1), k);
    }
    auto rhs = over_poly(shifted_harmonic(t, n, z, order), q_binomial(z + n, n));
    return combine("cor53", p,
                   {q_hypothesis("cor53/hypothesis", p, a, b), compare_series("cor53/display", p, lhs, rhs),
                    q_transform_lemma_check(a, t, z)});
}

// ---------------------------------------------------------------------------

namespace {

BigRational nonzero(const BigRational& v)
{
    if (v == 0)
        pole();
    return v;
}

BigRational rpow(const BigRational& v, unsigned e)
{
    BigRational r = 1;
    for (unsigned i = 0; i < e; ++i)
        r *= v;
    return r;
}

BigRational binom(unsigned n, unsigned k)
{
    return BigRational(binomial(n, k));
}

}  // namespace

IdentityReport rational_master_check(unsigned t, unsigned n, const BigRational& z, const BigRational& x)
{
    const Params p{{"t", str(t)}, {"n", str(n)}, {"z", to_string(z)}, {"x", to_string(x)}};
    for (unsigned k = 1; k <= n; ++k) {
        nonzero(z + k);
        nonzero(x + k);
    }
    BigRational lhs = 0, rhs = 0;
    for (unsigned k = 1; k <= n; ++k)
        add_signed(lhs, binom(n, k) / (rpow(z + k, t) * generalized_binomial(x, k)), k);
    for_each_weak_tuple(t, n, [&](const Tuple& k) {
        BigRational term = BigRational(k[0]) * generalized_binomial(z, k[0]) / (x + k[0]);
        for (unsigned kj : k)
            term /= z + kj;
        rhs += term;
    });
    rhs /= nonzero(generalized_binomial(z, n));
    return compare_values("rational-master", p, lhs, rhs);
}

IdentityReport rational_hypothesis_check(unsigned n, const BigRational& x)
{
    const Params p{{"n", str(n)}, {"x", to_string(x)}};
    for (unsigned k = 1; k <= n; ++k)
        nonzero(x + k);
    BigRational lhs = 0;
    for (unsigned k = 1; k <= n; ++k)
        add_signed(lhs, binom(n, k) / generalized_binomial(x, k), k);
    return compare_values("rational-hypothesis", p, lhs, BigRational(n) / (x + n));
}

IdentityReport rational_transform_lemma_check(const std::vector<BigRational>& a, unsigned t, const BigRational& z)
{
    const auto n = static_cast<unsigned>(a.size());
    const Params p{{"t", str(t)}, {"n", str(n)}, {"z", to_string(z)}};
    for (unsigned k = 1; k <= n; ++k)
        nonzero(z + k);
    std::vector<BigRational> b(n + 1);
    for (unsigned m = 1; m <= n; ++m)
        for (unsigned k = 1; k <= m; ++k)
            add_signed(b[m], binom(m, k) * a[k - 1], k);
    BigRational lhs = 0, rhs = 0;
    for (unsigned k = 1; k <= n; ++k)
        add_signed(lhs, binom(n, k) * a[k - 1] / rpow(z + k, t), k);
    for_each_weak_tuple(t, n, [&](const Tuple& k) {
        BigRational term = b[k[0]] * generalized_binomial(z, k[0]);
        for (unsigned kj : k)
            term /= z + kj;
        rhs += term;
    });
    rhs /= generalized_binomial(z, n);
    return compare_values("rational-transform-lemma", p, lhs, rhs);
}

IdentityReport rational_fgh_check(unsigned t, unsigned n)
{
    const Params p{{"t", str(t)}, {"n", str(n)}};
    BigRational f = 0, g = 0, h = 0;
    for_each_weak_tuple(t, n, [&](const Tuple& k) {
        BigRational term = 1;
        for (unsigned kj : k)
            term /= BigRational(kj) * kj;
        f += term;
    });
    for (unsigned k = 1; k <= n; ++k)
        add_signed(g, 2 * binom(n, k) / (rpow(k, 2 * t) * binom(n + k, k)), k);
    for_each_weak_tuple(2 * t, n, [&](const Tuple& k) {
        BigRational term = BigRational(2) / (n + k[0]);
        for (unsigned j = 1; j < k.size(); ++j)
            term /= k[j];
        h += term;
    });
    return combine("rational-FGH", p,
                   {compare_values("rational-FGH/F=G", p, f, g), compare_values("rational-FGH/F=H", p, f, h)});
}

IdentityReport dilcher_rational_check(unsigned t, unsigned n)
{
    const Params p{{"t", str(t)}, {"n", str(n)}};
    BigRational lhs = 0, rhs = 0;
    for (unsigned k = 1; k <= n; ++k)
        add_signed(lhs, binom(n, k) / rpow(k, t), k);
    for_each_weak_tuple(t, n, [&](const Tuple& k) {
        BigRational term = 1;
        for (unsigned kj : k)
            term /= kj;
        rhs += term;
    });
    return compare_values("rational-dilcher", p, lhs, rhs);
}

// ---------------------------------------------------------------------------

std::string to_string(WzPair pair)
{
    switch (pair) {
    case WzPair::Master: return "master";
    case WzPair::Cor32: return "cor32";
    case WzPair::Lemma51: return "lemma51";
    case WzPair::Cor52: return "cor52";
    case WzPair::Cor53: return "cor53";
    case WzPair::QbinDifference: return "qbin-difference";
    }
    return "?";
}

WzPair parse_wz_pair(const std::string& s)
{
    for (WzPair w : {WzPair::Master, WzPair::Cor32, WzPair::Lemma51, WzPair::Cor52, WzPair::Cor53,
                     WzPair::QbinDifference})
        if (to_string(w) == s)
            return w;
    throw std::invalid_argument("unknown WZ pair '" + s + "' (known: master, cor32, lemma51, cor52, cor53, qbin-difference)");
}

namespace {

unsigned integer_param(const BigRational& v, const char* name)
{
    if (!is_integer(v) || v < 0 || v > 1000)
        throw std::invalid_argument(std::string("q-analogue needs a small nonnegative integer ") + name);
    return static_cast<unsigned>(v.get_num().get_ui());
}

IdentityReport wz_master(unsigned n_max, const BigRational& z)
{
    const Params p{{"n_max", str(n_max)}, {"z", to_string(z)}};
    for (unsigned k = 1; k <= n_max + 1; ++k)
        nonzero(z + k);
    auto F = [&](unsigned m, unsigned k) -> BigRational { return generalized_binomial(z, k) / (z + k) * binom(k, m); };
    auto G = [&](unsigned m, unsigned k) -> BigRational { return F(m, k) * BigRational(static_cast<long>(k) - m) / (z + m); };
    std::vector<IdentityReport> parts;
    for (unsigned m = 1; m <= n_max; ++m) {
        BigRational partial = 0;
        for (unsigned k = m; k <= n_max; ++k) {
            Params q{{"m", str(m)}, {"k", str(k)}, {"z", to_string(z)}};
            parts.push_back(compare_values("wz-master/relation", q, F(m, k), G(m, k + 1) - G(m, k)));
            partial += F(m, k);
            parts.push_back(compare_values("wz-master/sum", q, partial,
                                           generalized_binomial(z, k) * binom(k, m) / (z + m)));
        }
    }
    return combine("wz-master", p, parts);
}

IdentityReport wz_cor32(unsigned n_max, const BigRational& x)
{
    const Params p{{"n_max", str(n_max)}, {"x", to_string(x)}};
    for (unsigned k = 1; k <= n_max + 1; ++k)
        nonzero(x + k);
    auto F = [&](unsigned n, unsigned k) -> BigRational {
        BigRational v = binom(n, k) / generalized_binomial(x, k);
        return k % 2 == 1 ? v : BigRational(-v);
    };
    auto G = [&](unsigned n, unsigned k) -> BigRational { return (x + k) / (x + n) * F(n, k); };
    std::vector<IdentityReport> parts;
    for (unsigned n = 1; n <= n_max; ++n) {
        BigRational sum = 0;
        for (unsigned k = 1; k <= n; ++k) {
            Params q{{"n", str(n)}, {"k", str(k)}, {"x", to_string(x)}};
            parts.push_back(compare_values("wz-cor32/relation", q, F(n, k), G(n, k) - G(n, k + 1)));
            sum += F(n, k);
        }
        parts.push_back(compare_values("wz-cor32/sum", {{"n", str(n)}, {"x", to_string(x)}}, sum,
                                       BigRational(n) / (x + n)));
    }
    return combine("wz-cor32", p, parts);
}

IdentityReport wz_lemma51(unsigned n_max, unsigned z, std::size_t order)
{
    const Params p{{"n_max", str(n_max)}, {"z", str(z)}, {"order", str(order)}};
    auto base = [&](unsigned m, unsigned k) {
        return times_poly(q_binomial(z + k, k).to_series(order), q_binomial(k, m));
    };
    auto F = [&](unsigned m, unsigned k) { return over_qint(shift(base(m, k), k), z + k); };
    auto G = [&](unsigned m, unsigned k) {
        if (k < m)
            return TruncatedSeries(order);
        return over_qint(over_qint(times_qint(shift(base(m, k), m), k - m), z + k), z + m);
    };
    std::vector<IdentityReport> parts;
    for (unsigned m = 1; m <= n_max; ++m) {
        TruncatedSeries partial(order);
        for (unsigned k = m; k <= n_max; ++k) {
            Params q{{"m", str(m)}, {"k", str(k)}, {"z", str(z)}};
            const auto f = F(m, k);
            parts.push_back(compare_series("wz-lemma51/relation", q, f, G(m, k + 1) - G(m, k)));
            partial += f;
            auto closed = over_qint(shift(times_poly(q_binomial(z + k, k).to_series(order), q_binomial(k, m)), m), z + m);
            parts.push_back(compare_series("wz-lemma51/sum", q, partial, closed));
        }
    }
    return combine("wz-lemma51", p, parts);
}

// F(n+1,k) - F(n,k) = G(n,k+1) - G(n,k) for k = 1..n+1, and sum_k F(n,k) = total.
template <class FFn, class GFn>
IdentityReport wz_sum_pair(const std::string& id, const Params& p, unsigned n_max, std::size_t order, FFn F, GFn G,
                           const TruncatedSeries& total)
{
    std::vector<IdentityReport> parts;
    for (unsigned n = 1; n <= n_max; ++n) {
        TruncatedSeries sum(order);
        for (unsigned k = 1; k <= n + 1; ++k) {
            Params q{{"n", str(n)}, {"k", str(k)}};
            parts.push_back(compare_series(id + "/relation", q, F(n + 1, k) - F(n, k), G(n, k + 1) - G(n, k)));
            sum += F(n, k);
        }
        parts.push_back(compare_series(id + "/sum", {{"n", str(n)}}, sum, total));
    }
    return combine(id, p, parts);
}

IdentityReport wz_cor52(unsigned n_max, unsigned x, std::size_t order)
{
    const Params p{{"n_max", str(n_max)}, {"x", str(x)}, {"order", str(order)}};
    auto a = [&](unsigned k) { return over_poly(q_pow(order, c2(k) + std::size_t{x} * k), q_binomial(x + k, k)); };
    // Scaled by q^x so that 1/b_n = [x+n]/([n] q^x) stays a power series.
    auto F = [&](unsigned n, unsigned k) {
        if (k > n)
            return TruncatedSeries(order);
        auto v = over_qint(times_qint(times_poly(a(k), q_binomial(n, k)), x + n), n);
        return k % 2 == 1 ? v : -v;
    };
    auto G = [&](unsigned n, unsigned k) {
        if (k < 1 || k > n + 1)
            return TruncatedSeries(order);
        // qbin(n,k)/[n+1-k] rewritten as qbin(n+1,k)/[n+1], valid at k = n+1 too
        auto v = times_poly(a(k), q_binomial(n + 1, k));
        v = times_qint(times_qint(shift(v, n + 1 - k), x + k), k - 1);
        v = over_qint(over_qint(v, n + 1), n);
        return k % 2 == 1 ? -v : v;
    };
    return wz_sum_pair("wz-cor52", p, n_max, order, F, G, q_pow(order, x));
}

IdentityReport wz_cor53(unsigned n_max, unsigned z, std::size_t order)
{
    const Params p{{"n_max", str(n_max)}, {"z", str(z)}, {"order", str(order)}};
    auto F = [&](unsigned n, unsigned k) {
        if (k > n)
            return TruncatedSeries(order);
        auto v = times_poly(q_pow(order, c2(k)), q_binomial(n, k) * q_binomial(z + n, n));
        v = over_qint(times_qint(v, k), z + k);
        return k % 2 == 1 ? v : -v;
    };
    auto G = [&](unsigned n, unsigned k) {
        if (k < 1 || k > n + 1)
            return TruncatedSeries(order);
        auto v = times_poly(q_pow(order, c2(k) + n + 1 - k), q_binomial(n + 1, k) * q_binomial(z + n, n));
        v = times_qint(times_qint(v, k), k - 1);
        v = over_qint(over_qint(v, n + 1), n);
        return k % 2 == 1 ? -v : v;
    };
    return wz_sum_pair("wz-cor53", p, n_max, order, F, G, TruncatedSeries::one(order));
}

IdentityReport qbin_difference(unsigned n_max, std::size_t order, bool printed)
{
    const std::string id = printed ? "wz-qbin-difference-printed" : "wz-qbin-difference";
    const Params p{{"n_max", str(n_max)}, {"order", str(order)}};
    auto ratio = [&](unsigned n, unsigned k) {
        return over_poly(q_binomial(n, k).to_series(order), q_binomial(n + k, k));
    };
    std::vector<IdentityReport> parts;
    for (unsigned n = 1; n <= n_max; ++n)
        for (unsigned k = 1; k <= n; ++k) {
            auto lhs = ratio(n, k) - ratio(n - 1, k);
            auto rhs = times_poly(q_pow(order, n - k), q_factorial(n - 1) * q_factorial(n - 1));
            rhs = printed ? multiply_by_one_minus_q_power(rhs, k, 2) : times_qint(times_qint(rhs, k), k);
            rhs = over_poly(rhs, q_factorial(n - k) * q_factorial(n + k));
            parts.push_back(compare_series(id, {{"n", str(n)}, {"k", str(k)}}, lhs, rhs));
        }
    return combine(id, p, parts);
}

}  // namespace

IdentityReport wz_check(WzPair pair, unsigned n_max, const BigRational& param, std::size_t order)
{
    switch (pair) {
    case WzPair::Master: return wz_master(n_max, param);
    case WzPair::Cor32: return wz_cor32(n_max, param);
    case WzPair::Lemma51: return wz_lemma51(n_max, integer_param(param, "z"), order);
    case WzPair::Cor52: return wz_cor52(n_max, integer_param(param, "x"), order);
    case WzPair::Cor53: return wz_cor53(n_max, integer_param(param, "z"), order);
    case WzPair::QbinDifference: return qbin_difference(n_max, order, false);
    }
    throw std::invalid_argument("unknown WZ pair");
}

IdentityReport qbin_difference_printed_check(unsigned n_max, std::size_t order)
{
    return qbin_difference(n_max, order, true);
}

}  // namespace macmahon
