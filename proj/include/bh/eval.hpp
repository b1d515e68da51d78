#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "bh/core.hpp"
#include "bh/errors.hpp"
#include "bh/opcount.hpp"

namespace bh {

enum class Form { First = 1, Second = 2 };

namespace detail {

/// g_{k,q} = sum_{s+r=q} c_{k,s} w_{k,r}: coefficients of the truncated
/// product W_k(z) * (Taylor data), independent of the evaluation point.
template <class T>
Table<T> data_weight_convolution(const Table<T>& w, const Table<T>& c) {
    Table<T> g(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
        std::size_t n = w[k].size();
        g[k].resize(n);
        for (std::size_t q = 0; q < n; ++q) {
            T acc(0);
            for (std::size_t s = 0; s <= q; ++s) acc = acc + c[k][s] * w[k][q - s];
            g[k][q] = acc;
        }
    }
    return g;
}

/// sum_q coeffs_q (z-z_k)^{-(n-q)}, Horner in 1/(z-z_k) from the highest
/// negative power down.
template <class T>
T reciprocal_horner(std::span<const T> coeffs, const T& invd) {
    T acc(0);
    for (std::size_t q = 0; q < coeffs.size(); ++q)
        acc = (q == 0) ? coeffs[q] : coeffs[q] + acc * invd;
    return acc * invd;
}

template <class T>
T pi_star(std::span<const T> points, std::span<const int> mults, const T& z) {
    T p(1);
    for (std::size_t k = 0; k < points.size(); ++k)
        for (int i = 0; i < mults[k]; ++i) p = p * (z - points[k]);
    return p;
}

/// First form with precomputed convolution g: pi*(z) sum_k T_k.
template <class T>
T eval_first_pre(std::span<const T> points, std::span<const int> mults, const Table<T>& g,
                 const Table<T>& c, const T& z) {
    for (std::size_t k = 0; k < points.size(); ++k)
        if (z == points[k]) return c[k][0];
    T sum(0);
    for (std::size_t k = 0; k < points.size(); ++k) {
        T invd = T(1) / (z - points[k]);
        sum = sum + reciprocal_horner(std::span<const T>(g[k]), invd);
    }
    return pi_star(points, mults, z) * sum;
}

/// Second form with precomputed convolution g: a quotient, no pi*.
template <class T>
T eval_second_pre(std::span<const T> points, const Table<T>& w, const Table<T>& g,
                  const Table<T>& c, const T& z) {
    for (std::size_t k = 0; k < points.size(); ++k)
        if (z == points[k]) return c[k][0];
    T num(0), den(0);
    for (std::size_t k = 0; k < points.size(); ++k) {
        T invd = T(1) / (z - points[k]);
        num = num + reciprocal_horner(std::span<const T>(g[k]), invd);
        den = den + reciprocal_horner(std::span<const T>(w[k]), invd);
    }
    if (den == T(0)) throw ZeroDenominatorError("second form denominator vanished");
    return num / den;
}

template <class T>
T eval_first(std::span<const T> points, std::span<const int> mults, const Table<T>& w,
             const Table<T>& c, const T& z) {
    return eval_first_pre(points, mults, data_weight_convolution(w, c), c, z);
}

// ---- compensated (double-double) path for the second form ------------
//
// Near a node of high multiplicity, the inner Horner sums run through
// intermediate terms that can exceed the final value by ten orders of
// magnitude and cancel; plain double accumulation then leaks roughly
// u * (peak/result) into the interpolant, which is visible exactly at
// the endpoints. The weights themselves are fine (the second form is
// insensitive to their rounding), so carrying the evaluation sums in
// double-double arithmetic restores full accuracy.

struct DD {
    double hi = 0.0;
    double lo = 0.0;
};

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) {  // assumes |a| >= |b|
    double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD dd_add(const DD& a, const DD& b) {
    DD s = two_sum(a.hi, b.hi);
    return quick_two_sum(s.hi, s.lo + a.lo + b.lo);
}

inline DD dd_add(const DD& a, double b) {
    DD s = two_sum(a.hi, b);
    return quick_two_sum(s.hi, s.lo + a.lo);
}

inline DD dd_mul(const DD& a, const DD& b) {
    DD p = two_prod(a.hi, b.hi);
    return quick_two_sum(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

inline DD dd_div(const DD& n, const DD& d) {
    double q1 = n.hi / d.hi;
    DD r = dd_add(n, dd_mul({-q1, 0.0}, d));
    return quick_two_sum(q1, r.hi / d.hi);
}

/// Convolution g_{k,q} with the products and sums kept in double-double.
inline Table<DD> data_weight_convolution_dd(const Table<double>& w, const Table<double>& c) {
    Table<DD> g(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
        std::size_t n = w[k].size();
        g[k].resize(n);
        for (std::size_t q = 0; q < n; ++q) {
            DD acc{0.0, 0.0};
            for (std::size_t s = 0; s <= q; ++s) acc = dd_add(acc, two_prod(c[k][s], w[k][q - s]));
            g[k][q] = acc;
        }
    }
    return g;
}

inline DD reciprocal_horner_dd(std::span<const double> coeffs, const DD& invd) {
    DD acc{0.0, 0.0};
    for (std::size_t q = 0; q < coeffs.size(); ++q)
        acc = (q == 0) ? DD{coeffs[q], 0.0} : dd_add(dd_mul(acc, invd), coeffs[q]);
    return dd_mul(acc, invd);
}

inline DD reciprocal_horner_dd(std::span<const DD> coeffs, const DD& invd) {
    DD acc{0.0, 0.0};
    for (std::size_t q = 0; q < coeffs.size(); ++q)
        acc = (q == 0) ? coeffs[q] : dd_add(dd_mul(acc, invd), coeffs[q]);
    return dd_mul(acc, invd);
}

inline double eval_second_dd(std::span<const double> points, const Table<double>& w,
                             const Table<DD>& g, const Table<double>& c, double z) {
    for (std::size_t k = 0; k < points.size(); ++k)
        if (z == points[k]) return c[k][0];
    DD num{0.0, 0.0}, den{0.0, 0.0};
    for (std::size_t k = 0; k < points.size(); ++k) {
        DD dist = two_sum(z, -points[k]);  // keeps the subtraction residual
        DD invd = dd_div({1.0, 0.0}, dist);
        num = dd_add(num, reciprocal_horner_dd(std::span<const DD>(g[k]), invd));
        den = dd_add(den, reciprocal_horner_dd(std::span<const double>(w[k]), invd));
    }
    if (den.hi == 0.0) throw ZeroDenominatorError("second form denominator vanished");
    return dd_div(num, den).hi;
}

template <class T>
T eval_second(std::span<const T> points, std::span<const int> mults, const Table<T>& w,
              const Table<T>& c, const T& z) {
    (void)mults;
    return eval_second_pre(points, w, data_weight_convolution(w, c), c, z);
}

}  // namespace detail

/// pi*(z) = prod_k (z - z_k)^{n_k}, factors in grid order.
inline double prefactor_pi_star(const Grid& grid, double z) {
    return detail::pi_star<double>(grid.points, grid.mults, z);
}

/// First barycentric form. Returns c_{k,0} when z hits a grid point.
inline double eval_first_form(const Grid& grid, const WeightTable& weights,
                              const HermiteData& data, double z) {
    require_aligned(grid, weights, "weights");
    require_aligned(grid, data, "data");
    double v = detail::eval_first<double>(grid.points, grid.mults, weights, data,
                                          canonicalize_point(z));
    if (!std::isfinite(v))
        throw NonFiniteResultError("first form not finite at z=" + std::to_string(z));
    return v;
}

/// Second barycentric form. Requires w_{k,0} != 0 for every k. The
/// inner sums are compensated so that clustered high-multiplicity nodes
/// do not contaminate the result through intermediate cancellation.
inline double eval_second_form(const Grid& grid, const WeightTable& weights,
                               const HermiteData& data, double z) {
    require_aligned(grid, weights, "weights");
    require_aligned(grid, data, "data");
    return detail::eval_second_dd(grid.points, weights,
                                  detail::data_weight_convolution_dd(weights, data), data,
                                  canonicalize_point(z));
}

struct EvalSample {
    double z = 0.0;
    double value = 0.0;
    bool ok = true;
};

/// Batch evaluation; per-point numerical failures are flagged, not
/// thrown. The data-weight convolution is shared across points.
inline std::vector<EvalSample> sample_interpolant(const Grid& grid, const WeightTable& weights,
                                                  const HermiteData& data,
                                                  std::span<const double> zs, Form form) {
    require_aligned(grid, weights, "weights");
    require_aligned(grid, data, "data");
    Table<double> g;
    Table<detail::DD> gdd;
    if (form == Form::First)
        g = detail::data_weight_convolution(weights, data);
    else
        gdd = detail::data_weight_convolution_dd(weights, data);
    std::vector<EvalSample> out;
    out.reserve(zs.size());
    for (double z : zs) {
        EvalSample s;
        s.z = z;
        double zc = canonicalize_point(z);
        try {
            if (form == Form::First) {
                s.value = detail::eval_first_pre<double>(grid.points, grid.mults, g, data, zc);
                if (!std::isfinite(s.value))
                    throw NonFiniteResultError("first form not finite");
            } else {
                s.value = detail::eval_second_dd(grid.points, weights, gdd, data, zc);
            }
        } catch (const NumericError&) {
            s.ok = false;
            s.value = std::numeric_limits<double>::quiet_NaN();
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace bh
