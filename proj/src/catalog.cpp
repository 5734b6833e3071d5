#include "macmahon/catalog.hpp"

#include "macmahon/finite_identities.hpp"
#include "macmahon/macmahon_sums.hpp"
#include "macmahon/umbral_identities.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace macmahon {

namespace {

std::vector<BigRational> range(long lo, long hi)
{
    std::vector<BigRational> v;
    for (long i = lo; i <= hi; ++i)
        v.emplace_back(i);
    return v;
}

std::vector<BigRational> rational_grid()
{
    return {0, 1, 2, BigRational(1, 2), BigRational(7, 3)};
}

unsigned as_unsigned(const ParamValues& p, const std::string& name)
{
    const auto it = p.find(name);
    if (it == p.end())
        throw std::invalid_argument("missing parameter " + name);
    const BigRational& v = it->second;
    if (!is_integer(v) || v < 0 || v > 100000)
        throw std::invalid_argument(name + " must be a nonnegative integer, got " + to_string(v));
    return static_cast<unsigned>(v.get_num().get_ui());
}

const BigRational& as_rational(const ParamValues& p, const std::string& name)
{
    const auto it = p.find(name);
    if (it == p.end())
        throw std::invalid_argument("missing parameter " + name);
    return it->second;
}

IdentityEntry closed_form_entry(ClosedForm which, std::string summary)
{
    return {closed_form_id(which), std::move(summary), {}, true, 50,
            [which](const ParamValues&, std::size_t order) { return closed_form_check(which, order); }};
}

IdentityEntry wz_entry(WzPair pair, std::string summary, unsigned n_max, std::vector<ParamSpec> params,
                       std::string param_name)
{
    params.insert(params.begin(), ParamSpec{"n", {BigRational(n_max)}});
    const bool q_pair = pair != WzPair::Master && pair != WzPair::Cor32;
    return {"wz-" + to_string(pair), std::move(summary), std::move(params), q_pair, q_pair ? 40u : 0u,
            [pair, param_name](const ParamValues& p, std::size_t order) {
                const BigRational param = param_name.empty() ? BigRational(0) : as_rational(p, param_name);
                return wz_check(pair, as_unsigned(p, "n"), param, order);
            }};
}

std::vector<IdentityEntry> build_catalog()
{
    const ParamSpec t4{"t", range(1, 4)};
    const ParamSpec n5{"n", range(1, 5)};
    const ParamSpec n4{"n", range(1, 4)};
    const ParamSpec x3{"x", range(0, 3)};
    const ParamSpec z3{"z", range(0, 3)};

    std::vector<IdentityEntry> c;
    c.push_back({"theorem-FGH", "F_t(n) = G_t(n) = H_t(n) as q-series", {t4, n5}, true, 60,
                 [](const ParamValues& p, std::size_t N) {
                     return theorem_fgh_check(as_unsigned(p, "t"), as_unsigned(p, "n"), N);
                 }});
    c.push_back({"theorem-FGH-recurrence", "F, G, H share initial values and the first-difference recurrence",
                 {t4, n5}, true, 60, [](const ParamValues& p, std::size_t N) {
                     return fgh_recurrence_check(as_unsigned(p, "t"), as_unsigned(p, "n"), N);
                 }});
    c.push_back({"theorem-FGH-certified", "F = G = H proved as rational functions by a degree bound",
                 {{"t", range(1, 2)}, {"n", range(1, 3)}}, false, 0, [](const ParamValues& p, std::size_t) {
                     return certified_fgh_check(as_unsigned(p, "t"), as_unsigned(p, "n"));
                 }});
    c.push_back({"dilcher", "Dilcher's alternating q-binomial sum", {t4, n4}, true, 50,
                 [](const ParamValues& p, std::size_t N) {
                     return dilcher_check(as_unsigned(p, "t"), as_unsigned(p, "n"), N);
                 }});
    c.push_back({"mss", "q-binomial sum with qbin(x+k,k) in the denominator", {t4, n4, x3}, true, 50,
                 [](const ParamValues& p, std::size_t N) {
                     return mss_check(as_unsigned(p, "t"), as_unsigned(p, "n"), as_unsigned(p, "x"), N);
                 }});
    c.push_back({"mss-precursor", "multiplied-out form obtained from the q-inverse pair",
                 {{"t", range(1, 2)}, {"n", range(1, 3)}, {"x", range(0, 2)}}, true, 40,
                 [](const ParamValues& p, std::size_t N) {
                     return mss_precursor_check(as_unsigned(p, "t"), as_unsigned(p, "n"), as_unsigned(p, "x"), N);
                 }});
    c.push_back({"atidA", "alternating sum of (1+q^k) q^{C(k,2)+tk} qbin(n,k)/qbin(n+k,k)", {t4, n5}, true, 60,
                 [](const ParamValues& p, std::size_t N) {
                     return atidA_check(as_unsigned(p, "t"), as_unsigned(p, "n"), N);
                 }});
    c.push_back({"atidB", "companion with [x+k] shifts", {t4, n4, x3}, true, 50,
                 [](const ParamValues& p, std::size_t N) {
                     return atidB_check(as_unsigned(p, "t"), as_unsigned(p, "n"), as_unsigned(p, "x"), N);
                 }});
    c.push_back({"cor52", "two-parameter q-sum with [z+k] denominators", {t4, n4, x3, z3}, true, 50,
                 [](const ParamValues& p, std::size_t N) {
                     return cor52_check(as_unsigned(p, "t"), as_unsigned(p, "n"), as_unsigned(p, "x"),
                                        as_unsigned(p, "z"), N);
                 }});
    c.push_back({"cor53", "q-sum with q^{C(k,2)} [k]/[z+k] hypothesis", {t4, n4, z3}, true, 50,
                 [](const ParamValues& p, std::size_t N) {
                     return cor53_check(as_unsigned(p, "t"), as_unsigned(p, "n"), as_unsigned(p, "z"), N);
                 }});

    const ParamSpec t4r{"t", range(1, 4)};
    const ParamSpec n8{"n", range(1, 8)};
    c.push_back({"rational-master", "binomial-sum master identity at q = 1",
                 {t4r, n8, {"z", rational_grid()}, {"x", rational_grid()}}, false, 0,
                 [](const ParamValues& p, std::size_t) {
                     return rational_master_check(as_unsigned(p, "t"), as_unsigned(p, "n"), as_rational(p, "z"),
                                                  as_rational(p, "x"));
                 }});
    c.push_back({"rational-hypothesis", "sum (-1)^{k-1} C(n,k)/C(x+k,k) = n/(x+n)", {n8, {"x", rational_grid()}},
                 false, 0, [](const ParamValues& p, std::size_t) {
                     return rational_hypothesis_check(as_unsigned(p, "n"), as_rational(p, "x"));
                 }});
    c.push_back({"rational-FGH", "F = G = H at q = 1", {t4r, n8}, false, 0, [](const ParamValues& p, std::size_t) {
                     return rational_fgh_check(as_unsigned(p, "t"), as_unsigned(p, "n"));
                 }});
    c.push_back({"rational-dilcher", "Dilcher's identity at q = 1", {t4r, n8}, false, 0,
                 [](const ParamValues& p, std::size_t) {
                     return dilcher_rational_check(as_unsigned(p, "t"), as_unsigned(p, "n"));
                 }});

    c.push_back(wz_entry(WzPair::Master, "WZ pair for the binomial master sum", 6,
                         {{"z", {0, 1, BigRational(1, 2)}}}, "z"));
    c.push_back(wz_entry(WzPair::Cor32, "WZ pair for sum (-1)^{k-1} C(n,k)/C(x+k,k)", 8, {{"x", rational_grid()}}, "x"));
    c.push_back(wz_entry(WzPair::Lemma51, "WZ pair for the q-master sum", 4, {{"z", range(0, 2)}}, "z"));
    c.push_back(wz_entry(WzPair::Cor52, "WZ pair for the [x+n] q-sum", 4, {{"x", range(0, 2)}}, "x"));
    c.push_back(wz_entry(WzPair::Cor53, "WZ pair for the 1/qbin(z+n,n) q-sum", 4, {{"z", range(0, 2)}}, "z"));
    c.push_back(wz_entry(WzPair::QbinDifference, "first difference of qbin(n,k)/qbin(n+k,k)", 5, {}, ""));

    c.push_back(closed_form_entry(ClosedForm::V2Ode, "V_2 from V_1 and its derivatives"));
    c.push_back(closed_form_entry(ClosedForm::V3Ode, "V_3 from V_1 and its derivatives"));
    c.push_back(closed_form_entry(ClosedForm::V3Sigma, "V_3 as a divisor-sum polynomial and in E_2, E_4, E_6"));
    c.push_back(closed_form_entry(ClosedForm::U3mV3Sigma, "U_3 - V_3 in divisor sums, V_1 and Eisenstein series"));
    c.push_back(closed_form_entry(ClosedForm::U3Sigma, "U_3 as a divisor-sum polynomial"));
    c.push_back(closed_form_entry(ClosedForm::U4Sigma, "U_4 as a divisor-sum polynomial"));
    c.push_back(closed_form_entry(ClosedForm::MO251, "sigma_1 convolution form"));
    c.push_back(closed_form_entry(ClosedForm::ExcessV2U2, "V_2 - U_2 in divisor sums and as a Lambert series"));
    c.push_back(closed_form_entry(ClosedForm::V1E2, "V_1 = (1 - E_2)/24"));
    c.push_back(closed_form_entry(ClosedForm::RamanujanDE2, "Ramanujan's D E_2"));
    c.push_back(closed_form_entry(ClosedForm::RamanujanDE4, "Ramanujan's D E_4"));
    c.push_back(closed_form_entry(ClosedForm::RamanujanDE6, "Ramanujan's D E_6"));

    const ParamSpec t3{"t", range(1, 3)};
    c.push_back({"e-h-relation", "sum (-1)^i U_i V_{t-i} = 0", {{"t", range(1, 4)}}, true, 40,
                 [](const ParamValues& p, std::size_t N) { return eh_relation_check(as_unsigned(p, "t"), N); }});
    c.push_back({"U-agreement", "all formulas for U_t agree", {t3}, true, 40,
                 [](const ParamValues& p, std::size_t N) { return u_agreement_check(as_unsigned(p, "t"), N); }});
    c.push_back({"V-agreement", "all formulas for V_t agree", {t3}, true, 40,
                 [](const ParamValues& p, std::size_t N) { return v_agreement_check(as_unsigned(p, "t"), N); }});

    c.push_back({"conjugate-M-form", "V_t as a sum over weak (2t-1)-tuples weighted by k_1", {t3}, true, 40,
                 [](const ParamValues& p, std::size_t N) {
                     const unsigned t = as_unsigned(p, "t");
                     return compare_series("conjugate-M-form", {{"t", std::to_string(t)}, {"order", std::to_string(N)}},
                                           m_conjugate_form(t, N), v_multisum(t, N));
                 }});
    c.push_back({"chain-M-form", "V_t as a sum over alternating strict/weak chains", {t3}, true, 40,
                 [](const ParamValues& p, std::size_t N) {
                     const unsigned t = as_unsigned(p, "t");
                     return compare_series("chain-M-form", {{"t", std::to_string(t)}, {"order", std::to_string(N)}},
                                           m_chain_form(t, N), v_multisum(t, N));
                 }});
    c.push_back({"stirling-lambert", "G_t through u(t,k), the umbral S-product and divisors", {t4}, true, 40,
                 [](const ParamValues& p, std::size_t N) { return stirling_lambert_check(as_unsigned(p, "t"), N); }});
    c.push_back({"central-factorial-inversion", "sum T(t,k) (2k-1)! G_k = S_{2t-1}", {t4}, true, 40,
                 [](const ParamValues& p, std::size_t N) {
                     return central_factorial_inversion_check(as_unsigned(p, "t"), N);
                 }});
    c.push_back({"power-lambert-umbral", "(t-1)! sum q^{tm}/(1-q^m)^t umbrally in S", {t4}, true, 40,
                 [](const ParamValues& p, std::size_t N) {
                     return power_lambert_umbral_check(as_unsigned(p, "t"), N);
                 }});
    c.push_back({"dilcher-R-umbral", "alternating Dilcher series umbrally in R", {t4}, true, 40,
                 [](const ParamValues& p, std::size_t N) { return dilcher_R_umbral_check(as_unsigned(p, "t"), N); }});
    c.push_back({"central-factorial-polynomials", "polynomial identities for u(t,k) and T(t,k)",
                 {{"t", range(1, 6)}}, false, 0, [](const ParamValues& p, std::size_t) {
                     return central_factorial_polynomial_check(as_unsigned(p, "t"));
                 }});
    c.push_back({"macmahon-umbral", "MacMahon's umbral J-expression for U_t", {t4}, true, 40,
                 [](const ParamValues& p, std::size_t N) { return macmahon_umbral_check(as_unsigned(p, "t"), N); }});
    c.push_back({"jacobi-specialization", "Jacobi product specialised at 4 sin^2 x = c", {{"c", {4, 2, 1}}}, true, 30,
                 [](const ParamValues& p, std::size_t N) {
                     const unsigned cv = as_unsigned(p, "c");
                     if (cv != 1 && cv != 2 && cv != 4)
                         throw std::invalid_argument("c must be 1, 2 or 4");
                     return jacobi_specialization_check(static_cast<int>(cv), N);
                 }});
    return c;
}

}  // namespace

const std::vector<IdentityEntry>& identity_catalog()
{
    static const std::vector<IdentityEntry> catalog = build_catalog();
    return catalog;
}

const IdentityEntry& find_identity(const std::string& id)
{
    const auto& cat = identity_catalog();
    const auto it = std::find_if(cat.begin(), cat.end(), [&](const IdentityEntry& e) { return e.id == id; });
    if (it != cat.end())
        return *it;
    std::string known;
    for (const auto& e : cat)
        known += (known.empty() ? "" : ", ") + e.id;
    throw std::invalid_argument("unknown identity '" + id + "'; known: " + known);
}

bool GridRun::all_pass() const
{
    return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.pass; });
}

GridRun run_grid(const IdentityEntry& entry, const ParamGrid& overrides, std::optional<std::size_t> order,
                 const std::function<void(const IdentityReport&)>& on_report)
{
    for (const auto& [name, values] : overrides) {
        const bool known = std::any_of(entry.params.begin(), entry.params.end(),
                                       [&](const ParamSpec& s) { return s.name == name; });
        if (!known)
            throw std::invalid_argument("identity " + entry.id + " has no parameter '" + name + "'");
        if (values.empty())
            throw std::invalid_argument("empty value list for " + name);
    }
    std::vector<std::vector<BigRational>> axes;
    for (const auto& spec : entry.params) {
        const auto it = overrides.find(spec.name);
        axes.push_back(it != overrides.end() ? it->second : spec.defaults);
    }
    const std::size_t N = order.value_or(entry.default_order);

    GridRun out;
    std::vector<std::size_t> idx(axes.size(), 0);
    for (;;) {
        ParamValues values;
        for (std::size_t i = 0; i < axes.size(); ++i)
            values[entry.params[i].name] = axes[i][idx[i]];
        try {
            out.reports.push_back(entry.run(values, N));
            if (on_report)
                on_report(out.reports.back());
        } catch (const ComputationError& e) {
            if (std::string(e.what()).find("pole") == std::string::npos)
                throw;
            ++out.skipped_poles;
        }
        std::size_t i = 0;
        for (; i < axes.size(); ++i) {
            if (++idx[i] < axes[i].size())
                break;
            idx[i] = 0;
        }
        if (i == axes.size())
            break;
    }
    return out;
}

std::vector<BigRational> parse_value_list(const std::string& text)
{
    std::vector<BigRational> out;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const BigRational lo = parse_rational(text.substr(0, dots));
        const BigRational hi = parse_rational(text.substr(dots + 2));
        if (!is_integer(lo) || !is_integer(hi) || hi < lo)
            throw std::invalid_argument("bad range '" + text + "'");
        for (BigInt v = lo.get_num(); v <= hi.get_num(); ++v)
            out.emplace_back(v);
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_rational(item));
    if (out.empty())
        throw std::invalid_argument("empty value list");
    return out;
}

}  // namespace macmahon
