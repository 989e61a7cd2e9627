#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace seidelskew {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Rationals print as "p" when integral, "p/q" otherwise (q > 0, lowest terms).
inline std::string to_decimal(const BigRat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace seidelskew
