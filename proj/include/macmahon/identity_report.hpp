#pragma once

#include "macmahon/series.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace macmahon {

using Params = std::vector<std::pair<std::string, std::string>>;

// Outcome of checking one identity instance.  A passing report never
// carries a discrepancy.
struct IdentityReport {
    std::string id;
    Params params;
    bool pass = true;
    // coefficient of q^i, term index, or polynomial degree, depending on the identity
    std::optional<std::size_t> discrepancy_index;
    std::string lhs_value;
    std::string rhs_value;
    std::string note;

    std::string describe() const;
};

IdentityReport compare_series(std::string id, Params params, const TruncatedSeries& lhs,
                              const TruncatedSeries& rhs);

IdentityReport compare_values(std::string id, Params params, const BigRational& lhs,
                              const BigRational& rhs);

// Folds several reports into one: passes iff all pass; the first failure is kept.
IdentityReport combine(std::string id, Params params, const std::vector<IdentityReport>& parts);

}  // namespace macmahon
