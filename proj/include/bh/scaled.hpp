#pragma once

#include <cmath>
#include <limits>

namespace bh {

/// Nonnegative magnitude kept as mantissa * 2^exponent with mantissa in
/// [0.5, 1). Products of many factors can be accumulated without the
/// intermediate over/underflow that plain doubles would suffer.
struct ScaledMagnitude {
    double mantissa = 0.0;  // in [0.5, 1), or 0
    long exponent = 0;

    static ScaledMagnitude from(double x) {
        ScaledMagnitude s;
        int e = 0;
        s.mantissa = std::frexp(std::fabs(x), &e);
        s.exponent = e;
        return s;
    }

    static ScaledMagnitude one() { return {0.5, 1}; }

    bool is_zero() const { return mantissa == 0.0; }

    ScaledMagnitude& operator*=(double x) {
        int e = 0;
        double m = std::frexp(std::fabs(x), &e);
        mantissa *= m;
        exponent += e;
        normalize();
        return *this;
    }

    ScaledMagnitude& operator*=(const ScaledMagnitude& o) {
        mantissa *= o.mantissa;
        exponent += o.exponent;
        normalize();
        return *this;
    }

    /// log2 of the magnitude; -inf for zero.
    double log2_value() const {
        if (is_zero()) return -std::numeric_limits<double>::infinity();
        return std::log2(mantissa) + static_cast<double>(exponent);
    }

    /// Collapses to a double; may overflow/underflow if out of range.
    double to_double() const { return std::ldexp(mantissa, static_cast<int>(exponent)); }

    friend bool operator<(const ScaledMagnitude& a, const ScaledMagnitude& b) {
        if (a.is_zero()) return !b.is_zero();
        if (b.is_zero()) return false;
        if (a.exponent != b.exponent) return a.exponent < b.exponent;
        return a.mantissa < b.mantissa;
    }

private:
    void normalize() {
        if (mantissa == 0.0) {
            exponent = 0;
            return;
        }
        int e = 0;
        mantissa = std::frexp(mantissa, &e);
        exponent += e;
    }
};

}  // namespace bh
