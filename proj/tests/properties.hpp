#pragma once

// Randomized property suites.  Each returns how many instances ran and how
// many failed; the doctest wrapper and the acceptance binary share them.

#include "macmahon/mod_series.hpp"
#include "macmahon/qcombinatorics.hpp"
#include "macmahon/series.hpp"
#include "support.hpp"

#include <string>
#include <vector>

namespace testsupport {

struct PropertyOutcome {
    std::string name;
    int instances = 0;
    int failures = 0;
};

inline PropertyOutcome ring_axioms(int n)
{
    PropertyOutcome out{"series ring axioms"};
    for (int i = 0; i < n; ++i) {
        const auto order = static_cast<std::size_t>(uniform(0, 30));
        const auto a = random_series(order), b = random_series(order), c = random_series(order);
        const bool ok = (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a * b == b * a &&
                        (a + b) + c == a + (b + c) && a + b == b + a && a - a == TruncatedSeries(order) &&
                        a * TruncatedSeries::one(order) == a;
        ++out.instances;
        out.failures += !ok;
    }
    return out;
}

inline PropertyOutcome derivation_rule(int n)
{
    PropertyOutcome out{"q-derivative is a derivation"};
    for (int i = 0; i < n; ++i) {
        const auto order = static_cast<std::size_t>(uniform(0, 30));
        const auto a = random_series(order), b = random_series(order);
        const bool ok = macmahon::q_derivative(a * b) ==
                        macmahon::q_derivative(a) * b + a * macmahon::q_derivative(b);
        ++out.instances;
        out.failures += !ok;
    }
    return out;
}

inline PropertyOutcome q_pascal(int n)
{
    using namespace macmahon;
    PropertyOutcome out{"q-Pascal rule"};
    auto check = [&](unsigned nn, unsigned k) {
        const bool ok = q_binomial(nn, k) == q_binomial(nn - 1, k - 1) + shift(q_binomial(nn - 1, k), k) &&
                        q_binomial(nn, k) == shift(q_binomial(nn - 1, k - 1), nn - k) + q_binomial(nn - 1, k);
        ++out.instances;
        out.failures += !ok;
    };
    for (unsigned nn = 1; nn <= 10; ++nn)
        for (unsigned k = 1; k <= nn; ++k)
            check(nn, k);
    for (int i = 0; i < n; ++i) {
        const auto nn = static_cast<unsigned>(uniform(1, 30));
        check(nn, static_cast<unsigned>(uniform(1, nn)));
    }
    return out;
}

inline PropertyOutcome mod_p_homomorphism(int n)
{
    using namespace macmahon;
    PropertyOutcome out{"reduction mod p is a ring homomorphism"};
    const std::uint32_t primes[] = {3, 5, 7, 11, 13};
    for (int i = 0; i < n; ++i) {
        const auto order = static_cast<std::size_t>(uniform(0, 40));
        const auto a = random_integer_series(order), b = random_integer_series(order);
        bool ok = true;
        for (std::uint32_t p : primes)
            ok = ok && reduce(a * b, p) == mul(reduce(a, p), reduce(b, p)) &&
                 reduce(a + b, p) == add(reduce(a, p), reduce(b, p)) &&
                 reduce(a - b, p) == sub(reduce(a, p), reduce(b, p));
        ++out.instances;
        out.failures += !ok;
    }
    return out;
}

inline PropertyOutcome q_inverse_pair(int n)
{
    using namespace macmahon;
    PropertyOutcome out{"q-inverse pair round trip"};
    for (int i = 0; i < n; ++i) {
        const auto len = static_cast<std::size_t>(uniform(1, 8));
        std::vector<TruncatedSeries> a;
        for (std::size_t k = 0; k < len; ++k) {
            // a rational constant or a short polynomial in q
            auto s = TruncatedSeries::monomial(40, 0, random_rational());
            if (uniform(0, 1))
                s += TruncatedSeries::monomial(40, static_cast<std::size_t>(uniform(1, 6)), random_rational());
            a.push_back(s);
        }
        const bool ok = inverse_q_binomial_transform(q_binomial_transform(a)) == a &&
                        q_binomial_transform(inverse_q_binomial_transform(a)) == a;
        ++out.instances;
        out.failures += !ok;
    }
    return out;
}

inline PropertyOutcome geometric_inverse(int n)
{
    using namespace macmahon;
    PropertyOutcome out{"geometric_pow inverts (1 - q^k)^r"};
    for (int i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(uniform(1, 8));
        const auto r = static_cast<unsigned>(uniform(1, 6));
        const auto order = static_cast<std::size_t>(uniform(0, 40));
        // (1 - q^k)^r as an integer polynomial lifted to a series
        IntPolynomial f = IntPolynomial::constant(1);
        for (unsigned j = 0; j < r; ++j)
            f = f - shift(f, k);
        const bool ok = f.to_series(order) * geometric_pow(k, r, order) == TruncatedSeries::one(order);
        ++out.instances;
        out.failures += !ok;
    }
    return out;
}

inline std::vector<PropertyOutcome> all_property_suites(int n)
{
    return {ring_axioms(n),      derivation_rule(n), q_pascal(n),
            mod_p_homomorphism(n), q_inverse_pair(n), geometric_inverse(n)};
}

}  // namespace testsupport
