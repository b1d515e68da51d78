#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bh {

/// Arbitrary-precision rational used by the exact oracle. Kept in
/// canonical form (reduced, positive denominator) by the backend.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double rational_to_double(const Rational& q) { return static_cast<double>(q); }

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline bool is_finite_value(const Rational&) { return true; }

inline double as_double(const Rational& q) { return static_cast<double>(q); }

/// q^n for integer n (n may be negative; q must be nonzero then).
inline Rational rational_pow(const Rational& q, long n) {
    Rational base = n < 0 ? Rational(1) / q : q;
    unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    Rational out(1);
    while (e > 0) {
        if (e & 1UL) out *= base;
        base *= base;
        e >>= 1UL;
    }
    return out;
}

}  // namespace bh
