#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace leamer {

using std::int64_t;

// Exact rational arithmetic for slope limits and elasticities.
using Rational = boost::rational<int64_t>;

// floor(r * x) for nonnegative x, computed exactly.
inline int64_t floor_scaled(const Rational& r, int64_t x) {
    return (r.numerator() * x) / r.denominator()
           - (((r.numerator() * x) % r.denominator() != 0) && (r.numerator() * x < 0) ? 1 : 0);
}

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace leamer
