#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <sstream>
#include <string>

namespace wps {

// All arithmetic in the library is exact; no floating point in any decision
// path. Rationals are kept reduced with positive denominator by the backend.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

inline std::string to_string(const Integer& z) {
    std::ostringstream os;
    os << z;
    return os.str();
}

inline std::optional<long long> to_int64(const Integer& z) {
    if (z < std::numeric_limits<long long>::min() ||
        z > std::numeric_limits<long long>::max())
        return std::nullopt;
    return static_cast<long long>(z);
}

}  // namespace wps
