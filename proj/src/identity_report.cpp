#include "macmahon/identity_report.hpp"

#include <sstream>

namespace macmahon {

std::string IdentityReport::describe() const
{
    std::ostringstream out;
    out << id;
    for (const auto& [k, v] : params)
        out << ' ' << k << '=' << v;
    out << (pass ? ": pass" : ": FAIL");
    if (discrepancy_index)
        out << " at index " << *discrepancy_index << " (lhs " << lhs_value << ", rhs " << rhs_value << ')';
    if (!note.empty())
        out << " [" << note << ']';
    return out.str();
}

IdentityReport compare_series(std::string id, Params params, const TruncatedSeries& lhs,
                              const TruncatedSeries& rhs)
{
    IdentityReport r{std::move(id), std::move(params)};
    if (auto i = first_mismatch(lhs, rhs)) {
        r.pass = false;
        r.discrepancy_index = *i;
        r.lhs_value = to_string(lhs[*i]);
        r.rhs_value = to_string(rhs[*i]);
    }
    return r;
}

IdentityReport compare_values(std::string id, Params params, const BigRational& lhs,
                              const BigRational& rhs)
{
    IdentityReport r{std::move(id), std::move(params)};
    if (lhs != rhs) {
        r.pass = false;
        r.discrepancy_index = 0;
        r.lhs_value = to_string(lhs);
        r.rhs_value = to_string(rhs);
    }
    return r;
}

IdentityReport combine(std::string id, Params params, const std::vector<IdentityReport>& parts)
{
    IdentityReport r{std::move(id), std::move(params)};
    for (const auto& p : parts) {
        if (p.pass)
            continue;
        r.pass = false;
        r.discrepancy_index = p.discrepancy_index;
        r.lhs_value = p.lhs_value;
        r.rhs_value = p.rhs_value;
        r.note = p.describe();
        break;
    }
    return r;
}

}  // namespace macmahon
