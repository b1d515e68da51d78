#pragma once

#include <cmath>

namespace bh {

struct OpCounts {
    long long adds = 0;  // additions and subtractions
    long long muls = 0;
    long long divs = 0;

    long long total() const { return adds + muls + divs; }
    long long mul_add() const { return adds + muls; }

    void reset() { adds = muls = divs = 0; }
};

inline thread_local OpCounts g_op_counts;

/// double wrapper whose arithmetic bumps thread-local counters. Drop-in
/// scalar for the templated kernels when measuring operation counts.
struct Counted {
    double v = 0.0;

    Counted() = default;
    Counted(double x) : v(x) {}
    Counted(int x) : v(x) {}

    friend Counted operator+(Counted a, Counted b) { ++g_op_counts.adds; return {a.v + b.v}; }
    friend Counted operator-(Counted a, Counted b) { ++g_op_counts.adds; return {a.v - b.v}; }
    friend Counted operator*(Counted a, Counted b) { ++g_op_counts.muls; return {a.v * b.v}; }
    friend Counted operator/(Counted a, Counted b) { ++g_op_counts.divs; return {a.v / b.v}; }
    friend Counted operator-(Counted a) { return {-a.v}; }

    Counted& operator+=(Counted o) { *this = *this + o; return *this; }
    Counted& operator-=(Counted o) { *this = *this - o; return *this; }
    Counted& operator*=(Counted o) { *this = *this * o; return *this; }
    Counted& operator/=(Counted o) { *this = *this / o; return *this; }

    friend bool operator==(Counted a, Counted b) { return a.v == b.v; }
    friend bool operator!=(Counted a, Counted b) { return a.v != b.v; }
    friend bool operator<(Counted a, Counted b) { return a.v < b.v; }
};

inline bool is_finite_value(double x) { return std::isfinite(x); }
inline bool is_finite_value(Counted x) { return std::isfinite(x.v); }

inline double as_double(double x) { return x; }
inline double as_double(Counted x) { return x.v; }

}  // namespace bh
