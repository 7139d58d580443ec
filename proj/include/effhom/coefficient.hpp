#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace effhom {

/// Exact integer coefficients. Only the ring of integers is shipped.
using Coefficient = boost::multiprecision::cpp_int;

/// Index of a generator: x_0, x_1, ...
using GeneratorIndex = std::uint64_t;

/// Degrees of graded objects range over all integers.
using Degree = std::int64_t;

inline bool isEven(Degree i) noexcept { return (i & 1) == 0; }

inline std::string toString(const Coefficient& c) { return c.str(); }

inline Coefficient gcd(const Coefficient& a, const Coefficient& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Coefficient abs(const Coefficient& a) { return a < 0 ? Coefficient(-a) : a; }

} // namespace effhom
