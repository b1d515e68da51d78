#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bh/core.hpp"
#include "bh/errors.hpp"
#include "bh/eval.hpp"
#include "bh/rational.hpp"

namespace bh {

/// Grid over exact rationals. Binary64 nodes are reinterpreted as exact
/// rationals, so the oracle answers what the floating grid should give.
struct RationalGrid {
    std::vector<Rational> points;
    std::vector<int> mults;

    std::size_t K() const { return points.size(); }
    std::size_t N() const {
        std::size_t n = 0;
        for (int m : mults) n += static_cast<std::size_t>(m);
        return n;
    }
};

inline RationalGrid validate_rational_grid(std::vector<Rational> points, std::vector<int> mults) {
    if (points.empty()) throw EmptyGridError("rational grid has no points");
    if (points.size() != mults.size())
        throw ShapeMismatchError("points and mults differ in length");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (mults[i] < 1) throw NonPositiveMultiplicityError("multiplicity at index " +
                                                             std::to_string(i + 1));
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw DuplicatePointError("duplicate rational grid point");
    }
    return {std::move(points), std::move(mults)};
}

inline RationalGrid to_rational_grid(const Grid& grid) {
    std::vector<Rational> pts;
    pts.reserve(grid.K());
    for (double z : grid.points) pts.emplace_back(z);
    return {std::move(pts), grid.mults};
}

inline Table<Rational> to_rational_table(const Table<double>& t) {
    Table<Rational> out(t.size());
    for (std::size_t k = 0; k < t.size(); ++k)
        out[k].assign(t[k].begin(), t[k].end());
    return out;
}

namespace detail {

/// Truncated power series over the rationals, coefficients ascending.
using RSeries = std::vector<Rational>;

/// a *= (c0 + t), truncated to the existing length.
inline void series_mul_linear(RSeries& a, const Rational& c0) {
    for (std::size_t d = a.size(); d-- > 0;) {
        a[d] *= c0;
        if (d > 0) a[d] += a[d - 1];
    }
}

inline RSeries series_mul(const RSeries& a, const RSeries& b, std::size_t m) {
    RSeries out(m + 1, Rational(0));
    for (std::size_t i = 0; i <= m && i < a.size(); ++i)
        for (std::size_t j = 0; i + j <= m && j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

/// 1/a truncated at order m; a[0] must be nonzero.
inline RSeries series_inverse(const RSeries& a, std::size_t m) {
    if (a.empty() || a[0] == 0)
        throw ZeroDenominatorError("series_inverse: zero leading coefficient");
    RSeries out(m + 1, Rational(0));
    out[0] = Rational(1) / a[0];
    for (std::size_t r = 1; r <= m; ++r) {
        Rational acc(0);
        for (std::size_t s = 1; s <= r && s < a.size(); ++s) acc += a[s] * out[r - s];
        out[r] = -acc / a[0];
    }
    return out;
}

inline RSeries series_div(const RSeries& num, const RSeries& den, std::size_t m) {
    return series_mul(num, series_inverse(den, m), m);
}

/// Series of pi_k(z) = prod_{j != k} (z - z_j)^{n_j} about z_center,
/// truncated at order m. Pass k = npos to keep every factor (pi*).
inline RSeries pi_k_series(const RationalGrid& g, std::size_t k, const Rational& z_center,
                           std::size_t m) {
    RSeries s(m + 1, Rational(0));
    s[0] = 1;
    for (std::size_t j = 0; j < g.K(); ++j) {
        if (j == k) continue;
        Rational c0 = z_center - g.points[j];
        for (int i = 0; i < g.mults[j]; ++i) series_mul_linear(s, c0);
    }
    return s;
}

}  // namespace detail

/// Exact barycentric weights, one series inversion of pi_k about z_k per
/// point. This route never touches power sums or Newton identities.
inline Table<Rational> exact_weights(const RationalGrid& grid) {
    Table<Rational> w(grid.K());
    for (std::size_t k = 0; k < grid.K(); ++k) {
        auto m = static_cast<std::size_t>(grid.mults[k] - 1);
        detail::RSeries pik = detail::pi_k_series(grid, k, grid.points[k], m);
        w[k] = detail::series_inverse(pik, m);
    }
    return w;
}

/// Exact first-form evaluation of the interpolant at z.
inline Rational exact_interpolant_eval(const RationalGrid& grid, const Table<Rational>& data,
                                       const Rational& z) {
    Table<Rational> w = exact_weights(grid);
    return detail::eval_first<Rational>(grid.points, grid.mults, w, data, z);
}

/// Exact Taylor coefficients, through order m, of the second barycentric
/// form about grid point kappa (1-based), for arbitrary weights with
/// w_{k,0} != 0. Realizes the Schneider-Werner robustness check.
inline std::vector<Rational> exact_second_form_series(const RationalGrid& grid,
                                                      const Table<Rational>& weights,
                                                      const Table<Rational>& data,
                                                      std::size_t kappa, int m) {
    if (kappa < 1 || kappa > grid.K())
        throw IndexOutOfRangeError("exact_second_form_series: kappa=" + std::to_string(kappa));
    if (m < 0 || m >= grid.mults[kappa - 1])
        throw PreconditionError("exact_second_form_series: need 0 <= m < n_kappa");
    for (std::size_t k = 0; k < grid.K(); ++k)
        if (weights[k].empty() || weights[k][0] == 0)
            throw ZeroDenominatorError("second form requires w_{k,0} != 0");
    auto ord = static_cast<std::size_t>(m);
    const Rational& center = grid.points[kappa - 1];
    detail::RSeries num(ord + 1, Rational(0));
    detail::RSeries den(ord + 1, Rational(0));
    for (std::size_t k = 0; k < grid.K(); ++k) {
        auto n = static_cast<std::size_t>(grid.mults[k]);
        detail::RSeries pik = detail::pi_k_series(grid, k, center, ord);
        // W_k and the data-weight convolution G_k as series in z - z_k,
        // rebased to the expansion center via linear-factor products
        detail::RSeries Wk(ord + 1, Rational(0)), Gk(ord + 1, Rational(0));
        Rational shift = center - grid.points[k];  // (z - z_k) = shift + t
        for (std::size_t q = 0; q < n; ++q) {
            Rational g(0);
            for (std::size_t s = 0; s <= q; ++s) g += data[k][s] * weights[k][q - s];
            // add w_{k,q} (shift + t)^q and g (shift + t)^q
            detail::RSeries mono(std::min(q, ord) + 1, Rational(0));
            mono[0] = 1;
            for (std::size_t i = 0; i < q; ++i) detail::series_mul_linear(mono, shift);
            for (std::size_t d = 0; d < mono.size(); ++d) {
                Wk[d] += weights[k][q] * mono[d];
                Gk[d] += g * mono[d];
            }
        }
        detail::RSeries piWk = detail::series_mul(pik, Wk, ord);
        detail::RSeries piGk = detail::series_mul(pik, Gk, ord);
        for (std::size_t d = 0; d <= ord; ++d) {
            den[d] += piWk[d];
            num[d] += piGk[d];
        }
    }
    return detail::series_div(num, den, ord);
}

struct RelErrorReport {
    Table<double> values;               // relative error, or absolute where flagged
    Table<unsigned char> absolute_flag; // 1 where the exact entry is zero
    double max_relative = 0.0;
};

/// Entrywise |computed - exact| / |exact|, measured in exact arithmetic
/// and rounded only for reporting. Zero exact entries are reported as
/// absolute errors and flagged.
inline RelErrorReport relative_errors(const WeightTable& computed, const Table<Rational>& exact) {
    if (computed.size() != exact.size()) throw ShapeMismatchError("relative_errors: row count");
    RelErrorReport rep;
    rep.values.resize(computed.size());
    rep.absolute_flag.resize(computed.size());
    for (std::size_t k = 0; k < computed.size(); ++k) {
        if (computed[k].size() != exact[k].size())
            throw ShapeMismatchError("relative_errors: row " + std::to_string(k + 1));
        rep.values[k].resize(computed[k].size());
        rep.absolute_flag[k].assign(computed[k].size(), 0);
        for (std::size_t r = 0; r < computed[k].size(); ++r) {
            Rational diff = rational_abs(Rational(computed[k][r]) - exact[k][r]);
            if (exact[k][r] == 0) {
                rep.values[k][r] = rational_to_double(diff);
                rep.absolute_flag[k][r] = 1;
            } else {
                double rel = rational_to_double(diff / rational_abs(exact[k][r]));
                rep.values[k][r] = rel;
                if (rel > rep.max_relative) rep.max_relative = rel;
            }
        }
    }
    return rep;
}

struct GammaBound {
    long long n = 0;
    double u = 0x1p-53;
    double value = 0.0;
};

/// gamma_n = n u / (1 - n u), u = 2^-53; requires n u < 1.
inline GammaBound gamma_bound(long long n) {
    if (n < 0) throw PreconditionError("gamma_bound: n must be nonnegative");
    GammaBound g;
    g.n = n;
    double nu = static_cast<double>(n) * g.u;
    if (nu >= 1.0) throw PreconditionError("gamma_bound: n*u must be < 1");
    g.value = nu / (1.0 - nu);
    return g;
}

}  // namespace bh
