#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace pinwheel {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
    return q.str();
}

/// q <= sqrt(2) - 1/2, decided in integer arithmetic.
/// q + 1/2 <= sqrt(2)  <=>  (2p + d)^2 <= 8 d^2  for q = p/d, d > 0.
/// Equality is impossible (sqrt(2) is irrational), so <= and < coincide.
inline bool leq_sqrt2_minus_half(const Rational& q) {
    BigInt p = numerator(q);
    BigInt d = denominator(q);
    BigInt lhs = 2 * p + d;
    return lhs * lhs <= 8 * d * d;
}

}  // namespace pinwheel
