#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace macmahon {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Raised when an exact computation produces something that cannot be right
// (a non-integer where an integer is forced, a pole, a truncation too short).
class ComputationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool is_integer(const BigRational& r) { return r.get_den() == 1; }

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const BigRational& v) { return v.get_str(); }

// Parses "7", "-3", "7/3".
BigRational parse_rational(const std::string& text);

}  // namespace macmahon
