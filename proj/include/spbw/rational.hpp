// Exact rational scalars (arbitrary precision, always reduced).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "errors.hpp"

namespace spbw {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_str(const Rational& q) { return q.str(); }

// Accepts "p" or "p/q" with optional leading sign.
inline Rational parse_rational(const std::string& text) {
    try {
        Rational q(text);
        return q;
    } catch (const std::exception&) {
        throw SyntaxError("invalid rational literal '" + text + "'", 0);
    }
}

}  // namespace spbw
