#pragma once

// Registry of every checkable identity, with the parameter grids the
// verification suite runs by default.

#include "macmahon/identity_report.hpp"
#include "macmahon/numeric.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace macmahon {

using ParamValues = std::map<std::string, BigRational>;
using ParamGrid = std::map<std::string, std::vector<BigRational>>;

struct ParamSpec {
    std::string name;
    std::vector<BigRational> defaults;
};

struct IdentityEntry {
    std::string id;
    std::string summary;
    std::vector<ParamSpec> params;
    bool uses_order = true;
    std::size_t default_order = 0;
    std::function<IdentityReport(const ParamValues&, std::size_t order)> run;
};

const std::vector<IdentityEntry>& identity_catalog();
// Throws std::invalid_argument listing the known ids.
const IdentityEntry& find_identity(const std::string& id);

struct GridRun {
    std::vector<IdentityReport> reports;
    std::size_t skipped_poles = 0;  // instances whose parameters hit a pole
    bool all_pass() const;
};

// Runs the cartesian product of the entry's parameter grid.  Values in
// `overrides` replace the defaults; unknown parameter names are rejected.
GridRun run_grid(const IdentityEntry& entry, const ParamGrid& overrides = {},
                 std::optional<std::size_t> order = std::nullopt,
                 const std::function<void(const IdentityReport&)>& on_report = {});

// Parses "1..4", "0,1,1/2" or a single value.
std::vector<BigRational> parse_value_list(const std::string& text);

}  // namespace macmahon
