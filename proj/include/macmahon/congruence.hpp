#pragma once

// Congruences of the form "p divides c(a*n + b) for every n" on the M and
// MO coefficient streams (and on sigma combinations), checked on the mod-p
// backend, plus a prospector that searches for new ones.

#include "macmahon/identity_report.hpp"
#include "macmahon/macmahon_sums.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace macmahon {

enum class ClaimFamily { M, MO, Sigma };

enum class ClaimStatus { Unchecked, Verified, Refuted };

struct CongruenceClaim {
    ClaimFamily family = ClaimFamily::M;
    unsigned t = 0;  // unused for Sigma
    // Sigma only: c(n) = sum coeff * sigma_s(n) over (s, coeff).
    std::vector<std::pair<unsigned, long>> sigma_terms;
    std::uint32_t p = 0;
    unsigned a = 1;
    unsigned b = 0;
    // Conjectural claims are only ever reported as evidence.
    bool conjecture = false;
    std::string label;

    ClaimStatus status = ClaimStatus::Unchecked;
    std::size_t depth = 0;                  // largest index a*n+b examined
    std::optional<std::size_t> refuted_at;  // index of the first nonzero residue
    std::optional<std::uint32_t> residue;   // its residue

    std::string describe() const;
};

std::string to_string(ClaimFamily f);
ClaimFamily parse_claim_family(const std::string& s);
std::string to_string(ClaimStatus s);
// "verified-to-depth", "evidence-to-depth", "refuted-at", "unchecked"
std::string status_label(const CongruenceClaim& c);

// Parses "M,3,7,8,4" / "MO,4,11,11,6" as family,t,p,a,b.
CongruenceClaim parse_claim(const std::string& text);
std::string format_claim(const CongruenceClaim& c);

// Residues c(0..order) mod p: M via the single sum, MO via the Andrews-Rose
// form.  Cached per (family, t, p, order); the returned vector is a copy.
std::vector<std::uint32_t> coefficient_stream(Family family, unsigned t, std::uint32_t p, std::size_t order);
std::vector<std::uint32_t> sigma_combination_stream(const std::vector<std::pair<unsigned, long>>& terms,
                                                    std::uint32_t p, std::size_t order);

// Throws std::invalid_argument for a malformed claim (b >= a, p not an odd
// prime below 2^31, t = 0 for M/MO).
CongruenceClaim check_claim(CongruenceClaim c, std::size_t order);

std::vector<CongruenceClaim> builtin_claims();
std::vector<CongruenceClaim> verify_paper_suite(std::size_t order);

// (1 + q^k) q^{C(k,2)+tk} / (1 - q^k)^{2t} vanishes mod p along (a, b).
IdentityReport phi_termwise_check(unsigned t, unsigned k, std::uint32_t p, unsigned a, unsigned b,
                                  std::size_t order);
// C(m+2t-1, 2t-1) + C(m+2t-2, 2t-1)
BigInt delta_binomial_sum(unsigned t, unsigned m);

// a sigma_k(n) + b sigma_j(n) = 0 mod p for n = residue (mod p), n <= depth.
// Throws std::invalid_argument unless k + j = 0 mod (p-1) and a + b residue^j = 0 mod p.
IdentityReport sigma_lemma_check(std::uint32_t p, unsigned k, unsigned j, long a, long b, unsigned residue,
                                 std::size_t depth);
// sigma_{(p-1)/2}(n) = 0 mod p for every quadratic non-residue n <= depth.
IdentityReport sigma_nonresidue_check(std::uint32_t p, std::size_t depth);

struct ProspectCandidate {
    CongruenceClaim claim;
    std::size_t informative = 0;  // progression indices at or beyond the minimal support
    double chance = 0;            // (1/p)^informative
    bool known = false;           // matches a claim of the built-in suite
};

struct ProspectResult {
    std::vector<ProspectCandidate> candidates;  // sorted by informative depth, deepest first
    std::size_t progressions_tested = 0;
    double expected_by_chance = 0;  // sum of (1/p)^informative over all tested progressions
};

ProspectResult prospect(Family family, const std::vector<unsigned>& ts, const std::vector<std::uint32_t>& primes,
                        std::size_t order);

}  // namespace macmahon
