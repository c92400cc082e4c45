#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace kmf {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rational(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

/// Largest integer <= q.
inline BigInt floor(const Rational& q)
{
    const BigInt num = numerator(q);
    const BigInt den = denominator(q); // always positive
    BigInt quot = num / den;
    if (num < 0 && quot * den != num) {
        --quot;
    }
    return quot;
}

/// Smallest integer >= q.
inline BigInt ceil(const Rational& q) { return -floor(-q); }

inline std::string to_string(const Rational& q) { return q.str(); }

} // namespace kmf
