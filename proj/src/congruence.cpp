#include "macmahon/congruence.hpp"

#include "macmahon/divisor_forms.hpp"
#include "macmahon/mod_series.hpp"
#include "macmahon/qcombinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace macmahon {

std::string to_string(ClaimFamily f)
{
    switch (f) {
    case ClaimFamily::M: return "M";
    case ClaimFamily::MO: return "MO";
    case ClaimFamily::Sigma: return "sigma";
    }
    return "?";
}

ClaimFamily parse_claim_family(const std::string& s)
{
    if (s == "M")
        return ClaimFamily::M;
    if (s == "MO")
        return ClaimFamily::MO;
    if (s == "sigma")
        return ClaimFamily::Sigma;
    throw std::invalid_argument("unknown claim family '" + s + "' (known: M, MO, sigma)");
}

std::string to_string(ClaimStatus s)
{
    switch (s) {
    case ClaimStatus::Unchecked: return "unchecked";
    case ClaimStatus::Verified: return "verified";
    case ClaimStatus::Refuted: return "refuted";
    }
    return "?";
}

std::string status_label(const CongruenceClaim& c)
{
    switch (c.status) {
    case ClaimStatus::Unchecked: return "unchecked";
    case ClaimStatus::Verified: return c.conjecture ? "evidence-to-depth" : "verified-to-depth";
    case ClaimStatus::Refuted: return "refuted-at";
    }
    return "?";
}

std::string format_claim(const CongruenceClaim& c)
{
    std::ostringstream out;
    if (c.family == ClaimFamily::Sigma) {
        out << "sigma[";
        for (std::size_t i = 0; i < c.sigma_terms.size(); ++i)
            out << (i ? " " : "") << c.sigma_terms[i].second << "*s" << c.sigma_terms[i].first;
        out << "]";
    } else {
        out << to_string(c.family) << "," << c.t;
    }
    out << "," << c.p << "," << c.a << "," << c.b;
    return out.str();
}

std::string CongruenceClaim::describe() const
{
    std::ostringstream out;
    out << p << " | " << (family == ClaimFamily::Sigma ? std::string("c") : to_string(family) + "(" + std::to_string(t))
        << (family == ClaimFamily::Sigma ? "(" : ",") << a << "n+" << b << ")";
    if (!label.empty())
        out << " [" << label << "]";
    out << ": " << status_label(*this);
    if (status == ClaimStatus::Verified)
        out << " " << depth;
    if (refuted_at)
        out << " " << *refuted_at << " (residue " << *residue << ")";
    return out.str();
}

CongruenceClaim parse_claim(const std::string& text)
{
    std::vector<std::string> fields;
    std::stringstream in(text);
    for (std::string f; std::getline(in, f, ',');)
        fields.push_back(f);
    if (fields.size() != 5)
        throw std::invalid_argument("claim must look like family,t,p,a,b (got '" + text + "')");
    CongruenceClaim c;
    c.family = parse_claim_family(fields[0]);
    if (c.family == ClaimFamily::Sigma)
        throw std::invalid_argument("sigma claims cannot be given in family,t,p,a,b form");
    try {
        c.t = static_cast<unsigned>(std::stoul(fields[1]));
        c.p = static_cast<std::uint32_t>(std::stoul(fields[2]));
        c.a = static_cast<unsigned>(std::stoul(fields[3]));
        c.b = static_cast<unsigned>(std::stoul(fields[4]));
    } catch (const std::logic_error&) {
        throw std::invalid_argument("claim fields t,p,a,b must be nonnegative integers (got '" + text + "')");
    }
    return c;
}

namespace {

using StreamKey = std::tuple<Family, unsigned, std::uint32_t, std::size_t>;
std::mutex stream_mutex;
std::map<StreamKey, std::vector<std::uint32_t>> streams;

}  // namespace

std::vector<std::uint32_t> coefficient_stream(Family family, unsigned t, std::uint32_t p, std::size_t order)
{
    const StreamKey key{family, t, p, order};
    {
        std::lock_guard lock(stream_mutex);
        if (auto it = streams.find(key); it != streams.end())
            return it->second;
    }
    const ModSeries s = family == Family::M ? m_single_sum_mod(t, order, p) : mo_andrews_rose_mod(t, order, p);
    std::vector<std::uint32_t> v(s.coefficients().begin(), s.coefficients().end());
    std::lock_guard lock(stream_mutex);
    return streams.try_emplace(key, std::move(v)).first->second;
}

std::vector<std::uint32_t> sigma_combination_stream(const std::vector<std::pair<unsigned, long>>& terms,
                                                    std::uint32_t p, std::size_t order)
{
    require_scan_modulus(p);
    std::vector<std::uint64_t> acc(order + 1, 0);
    for (const auto& [s, coeff] : terms) {
        const std::uint64_t c = ((coeff % static_cast<long>(p)) + p) % p;
        for (std::size_t d = 1; d <= order; ++d) {
            std::uint64_t ds = 1;
            for (unsigned i = 0; i < s; ++i)
                ds = ds * (d % p) % p;
            const std::uint64_t term = c * ds % p;
            for (std::size_t m = d; m <= order; m += d)
                acc[m] = (acc[m] + term) % p;
        }
    }
    return {acc.begin(), acc.end()};
}

namespace {

void validate_claim(const CongruenceClaim& c)
{
    if (c.a == 0 || c.b >= c.a)
        throw std::invalid_argument("progression needs 0 <= b < a");
    require_scan_modulus(c.p);
    if (c.family != ClaimFamily::Sigma && c.t == 0)
        throw std::invalid_argument("t must be >= 1");
}

std::vector<std::uint32_t> claim_stream(const CongruenceClaim& c, std::size_t order)
{
    if (c.family == ClaimFamily::Sigma)
        return sigma_combination_stream(c.sigma_terms, c.p, order);
    return coefficient_stream(c.family == ClaimFamily::M ? Family::M : Family::MO, c.t, c.p, order);
}

CongruenceClaim scan_progression(CongruenceClaim c, const std::vector<std::uint32_t>& stream, std::size_t order)
{
    c.status = ClaimStatus::Verified;
    c.depth = 0;
    c.refuted_at.reset();
    c.residue.reset();
    for (std::size_t idx = c.b; idx <= order; idx += c.a) {
        c.depth = idx;
        if (stream[idx] != 0) {
            c.status = ClaimStatus::Refuted;
            c.refuted_at = idx;
            c.residue = stream[idx];
            break;
        }
    }
    return c;
}

// Streams are keyed by everything that determines them and computed once,
// one task per key; afterwards they are only read.
using ClaimStreamKey = std::tuple<ClaimFamily, unsigned, std::uint32_t, std::vector<std::pair<unsigned, long>>>;

ClaimStreamKey stream_key(const CongruenceClaim& c)
{
    return {c.family, c.family == ClaimFamily::Sigma ? 0u : c.t, c.p, c.sigma_terms};
}

}  // namespace

CongruenceClaim check_claim(CongruenceClaim c, std::size_t order)
{
    validate_claim(c);
    const auto stream = claim_stream(c, order);
    return scan_progression(std::move(c), stream, order);
}

namespace {

CongruenceClaim claim(ClaimFamily f, unsigned t, std::uint32_t p, unsigned a, unsigned b, std::string label,
                      bool conjecture = false)
{
    CongruenceClaim c;
    c.family = f;
    c.t = t;
    c.p = p;
    c.a = a;
    c.b = b;
    c.label = std::move(label);
    c.conjecture = conjecture;
    return c;
}

}  // namespace

std::vector<CongruenceClaim> builtin_claims()
{
    using F = ClaimFamily;
    std::vector<CongruenceClaim> out;
    // M congruences by residue class of t; two smallest representatives each.
    for (unsigned t : {3u, 6u})
        out.push_back(claim(F::M, t, 3, 3, 2, "t = 0 mod 3"));
    for (unsigned t : {1u, 4u})
        out.push_back(claim(F::M, t, 3, 3, 2, "t = 1 mod 3"));
    for (unsigned t : {5u, 10u})
        for (unsigned b : {2u, 4u})
            out.push_back(claim(F::M, t, 5, 5, b, "t = 0 mod 5"));
    for (unsigned t : {2u, 7u})
        for (unsigned b : {1u, 3u})
            out.push_back(claim(F::M, t, 5, 5, b, "t = 2 mod 5"));
    for (unsigned t : {2u, 9u})
        out.push_back(claim(F::M, t, 7, 7, 1, "t = 2 mod 7"));
    for (unsigned t : {3u, 10u})
        for (unsigned b : {1u, 2u, 6u})
            out.push_back(claim(F::M, t, 7, 7, b, "t = 3 mod 7"));
    for (unsigned t : {1u, 2u, 3u})
        out.push_back(claim(F::M, t, 7, 8, 4, "period 8"));
    out.push_back(claim(F::MO, 2, 5, 5, 1, "MO t = 2"));
    out.push_back(claim(F::MO, 2, 5, 5, 2, "MO t = 2"));
    out.push_back(claim(F::MO, 3, 7, 7, 3, "MO t = 3"));
    out.push_back(claim(F::MO, 3, 7, 7, 5, "MO t = 3"));
    out.push_back(claim(F::MO, 4, 11, 11, 6, "MO t = 4"));
    auto sig = claim(F::Sigma, 0, 5, 5, 1, "sigma_3 = sigma_1");
    sig.sigma_terms = {{3, 1}, {1, -1}};
    out.push_back(sig);
    out.push_back(claim(F::MO, 10, 11, 11, 7, "MO t = 10, conjectural", true));
    return out;
}

std::vector<CongruenceClaim> verify_paper_suite(std::size_t order)
{
    auto claims = builtin_claims();
    std::map<ClaimStreamKey, std::shared_future<std::vector<std::uint32_t>>> streams;
    for (const auto& c : claims) {
        validate_claim(c);
        auto& slot = streams[stream_key(c)];
        if (!slot.valid())
            slot = std::async(std::launch::async, [c, order] { return claim_stream(c, order); }).share();
    }
    for (auto& c : claims)
        c = scan_progression(c, streams.at(stream_key(c)).get(), order);
    return claims;
}

IdentityReport phi_termwise_check(unsigned t, unsigned k, std::uint32_t p, unsigned a, unsigned b,
                                  std::size_t order)
{
    if (t == 0 || k == 0)
        throw std::invalid_argument("phi needs t, k >= 1");
    require_scan_modulus(p);
    const Params params{{"t", std::to_string(t)}, {"k", std::to_string(k)}, {"p", std::to_string(p)},
                        {"a", std::to_string(a)}, {"b", std::to_string(b)}, {"order", std::to_string(order)}};
    IdentityReport r{"phi-termwise", params};
    std::vector<std::uint32_t> c(order + 1, 0);
    const std::size_t e = std::size_t{k} * (k - 1) / 2 + std::size_t{t} * k;
    if (e <= order)
        c[e] = 1;
    if (e + k <= order)
        c[e + k] = (c[e + k] + 1) % p;
    const auto phi = divide_by_one_minus_q_power(ModSeries(std::move(c), p), k, 2 * t);
    for (std::size_t idx = b; idx <= order; idx += a)
        if (phi[idx] != 0) {
            r.pass = false;
            r.discrepancy_index = idx;
            r.lhs_value = std::to_string(phi[idx]);
            r.rhs_value = "0";
            break;
        }
    return r;
}

BigInt delta_binomial_sum(unsigned t, unsigned m)
{
    const long top = static_cast<long>(m) + 2 * static_cast<long>(t) - 1;
    return binomial(top, 2 * t - 1) + binomial(top - 1, 2 * t - 1);
}

namespace {

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    base %= p;
    while (e) {
        if (e & 1)
            r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_of(long v, std::uint32_t p)
{
    return static_cast<std::uint64_t>(((v % static_cast<long>(p)) + p) % p);
}

}  // namespace

IdentityReport sigma_lemma_check(std::uint32_t p, unsigned k, unsigned j, long a, long b, unsigned residue,
                                 std::size_t depth)
{
    require_scan_modulus(p);
    if ((k + j) % (p - 1) != 0)
        throw std::invalid_argument("sigma lemma needs k + j divisible by p - 1");
    if (residue % p == 0)
        throw std::invalid_argument("sigma lemma needs n prime to p");
    if ((mod_of(a, p) + mod_of(b, p) * powmod(residue, j, p)) % p != 0)
        throw std::invalid_argument("sigma lemma needs a + b n^j = 0 mod p");
    const Params params{{"p", std::to_string(p)}, {"k", std::to_string(k)}, {"j", std::to_string(j)},
                        {"a", std::to_string(a)}, {"b", std::to_string(b)}, {"residue", std::to_string(residue)},
                        {"depth", std::to_string(depth)}};
    const auto stream = sigma_combination_stream({{k, a}, {j, b}}, p, depth);
    IdentityReport r{"sigma-lemma", params};
    for (std::size_t n = residue % p; n <= depth; n += p)
        if (n > 0 && stream[n] != 0) {
            r.pass = false;
            r.discrepancy_index = n;
            r.lhs_value = std::to_string(stream[n]);
            r.rhs_value = "0";
            break;
        }
    return r;
}

IdentityReport sigma_nonresidue_check(std::uint32_t p, std::size_t depth)
{
    require_scan_modulus(p);
    const Params params{{"p", std::to_string(p)}, {"depth", std::to_string(depth)}};
    const auto stream = sigma_combination_stream({{(p - 1) / 2, 1}}, p, depth);
    IdentityReport r{"sigma-nonresidue", params};
    for (std::size_t n = 1; n <= depth; ++n) {
        if (n % p == 0 || powmod(n, (p - 1) / 2, p) == 1)
            continue;
        if (stream[n] != 0) {
            r.pass = false;
            r.discrepancy_index = n;
            r.lhs_value = std::to_string(stream[n]);
            r.rhs_value = "0";
            break;
        }
    }
    return r;
}

ProspectResult prospect(Family family, const std::vector<unsigned>& ts, const std::vector<std::uint32_t>& primes,
                        std::size_t order)
{
    const auto known = builtin_claims();
    const ClaimFamily cf = family == Family::M ? ClaimFamily::M : ClaimFamily::MO;
    for (std::uint32_t p : primes)
        require_scan_modulus(p);

    struct Task {
        unsigned t;
        std::uint32_t p;
        std::future<std::vector<std::uint32_t>> stream;
    };
    std::vector<Task> tasks;
    for (unsigned t : ts)
        for (std::uint32_t p : primes)
            tasks.push_back({t, p, std::async(std::launch::async, [=] { return coefficient_stream(family, t, p, order); })});

    ProspectResult result;
    for (auto& task : tasks) {
        const unsigned t = task.t;
        const std::uint32_t p = task.p;
        const std::size_t support = minimal_support(family, t);
        const auto stream = task.stream.get();
        for (unsigned b = 0; b < p; ++b) {
            std::size_t informative = 0;
            for (std::size_t idx = b; idx <= order; idx += p)
                if (idx >= support)
                    ++informative;
            const double chance = std::pow(1.0 / p, static_cast<double>(informative));
            ++result.progressions_tested;
            result.expected_by_chance += chance;
            ProspectCandidate cand;
            cand.claim = scan_progression(claim(cf, t, p, p, b, ""), stream, order);
            if (cand.claim.status != ClaimStatus::Verified)
                continue;
            cand.informative = informative;
            cand.chance = chance;
            cand.known = std::any_of(known.begin(), known.end(), [&](const CongruenceClaim& k) {
                return k.family == cf && k.t == t && k.p == p && k.a == p && k.b == b;
            });
            if (cand.known)
                cand.claim.label = "known";
            result.candidates.push_back(std::move(cand));
        }
    }
    std::stable_sort(result.candidates.begin(), result.candidates.end(),
                     [](const ProspectCandidate& x, const ProspectCandidate& y) { return x.informative > y.informative; });
    return result;
}

}  // namespace macmahon
