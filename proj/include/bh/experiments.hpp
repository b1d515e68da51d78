#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "bh/core.hpp"
#include "bh/errors.hpp"
#include "bh/eval.hpp"
#include "bh/functions.hpp"
#include "bh/grids.hpp"
#include "bh/oracle.hpp"
#include "bh/update.hpp"
#include "bh/weights.hpp"

namespace bh {

struct FpDiagnostics {
    bool subnormals_ok = false;
    bool division_ok = false;
};

/// Verifies that subnormals survive (no flush-to-zero) and that division
/// rounds correctly. Run before any experiment; the intermediates of
/// this method routinely dip into the subnormal range.
inline FpDiagnostics check_fp_environment() {
    FpDiagnostics d;
    volatile double smallest = std::numeric_limits<double>::min();
    volatile double half = smallest / 2.0;
    d.subnormals_ok = (half != 0.0) && (half != smallest) && (half * 2.0 == smallest);
    volatile double one = 1.0, three = 3.0;
    d.division_ok = (one / three == 0x1.5555555555555p-2);
    if (!d.subnormals_ok)
        throw FlushToZeroError(
            "flush-to-zero detected: subnormals do not survive; disable FTZ/DAZ "
            "(e.g. build without -ffast-math, use no-ftz / fp-model strict)");
    if (!d.division_ok)
        throw FlushToZeroError("division is not correctly rounded; use strict IEEE division");
    return d;
}

/// samples uniform points on [-1,1]; endpoints are always present.
inline std::vector<double> sample_points(int samples) {
    std::vector<double> xs;
    if (samples < 2) return {-1.0, 1.0};
    xs.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i)
        xs.push_back(-1.0 + 2.0 * i / (samples - 1));
    xs.front() = -1.0;
    xs.back() = 1.0;
    return xs;
}

/// Scaled (sigma), optionally Leja-ordered Chebyshev grid with Taylor
/// data from taylor(z, r) sampled on the unscaled nodes.
template <class TaylorFn>
std::pair<Grid, HermiteData> build_problem(int K, int n, TaylorFn&& taylor, double sigma,
                                           bool leja) {
    std::vector<double> pts = chebyshev_points(K);
    HermiteData data(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
        data[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r)
            data[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)] =
                taylor(pts[static_cast<std::size_t>(k)], r);
    }
    Grid grid = validate_grid(std::move(pts), std::vector<int>(static_cast<std::size_t>(K), n));
    auto [sgrid, sdata] = scale_problem(grid, data, sigma);
    if (leja) {
        std::vector<std::size_t> perm = leja_order(sgrid.points);
        return apply_permutation(sgrid, sdata, perm);
    }
    return {std::move(sgrid), std::move(sdata)};
}

struct InterpErrorRow {
    double x = 0.0;       // sample point in [-1,1]
    double error = 0.0;   // |pi(sigma x) - f(x)|
    bool ok = true;
};

struct InterpErrorSummary {
    std::vector<InterpErrorRow> rows;
    double sup_error = 0.0;
    double interior_max = 0.0;     // over |x| <= 0.99
    double interior_median = 0.0;  // over |x| <= 0.99
    double endpoint_max = 0.0;     // at x = +-1
};

template <class TargetFn>
InterpErrorSummary measure_interp_error(const Grid& grid, const WeightTable& w,
                                        const HermiteData& data, TargetFn&& f, Form form,
                                        int samples, double sigma) {
    std::vector<double> xs = sample_points(samples);
    std::vector<double> zs(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) zs[i] = sigma * xs[i];
    std::vector<EvalSample> vals = sample_interpolant(grid, w, data, zs, form);
    InterpErrorSummary out;
    std::vector<double> interior;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        InterpErrorRow row;
        row.x = xs[i];
        row.ok = vals[i].ok;
        row.error = vals[i].ok ? std::fabs(vals[i].value - f(xs[i]))
                               : std::numeric_limits<double>::quiet_NaN();
        out.rows.push_back(row);
        if (!row.ok) continue;
        out.sup_error = std::max(out.sup_error, row.error);
        if (std::fabs(xs[i]) >= 1.0)
            out.endpoint_max = std::max(out.endpoint_max, row.error);
        else if (std::fabs(xs[i]) <= 0.99) {
            out.interior_max = std::max(out.interior_max, row.error);
            interior.push_back(row.error);
        }
    }
    if (!interior.empty()) {
        auto mid = interior.begin() + static_cast<std::ptrdiff_t>(interior.size() / 2);
        std::nth_element(interior.begin(), mid, interior.end());
        out.interior_median = *mid;
    }
    return out;
}

/// Runge interpolation experiment: sigma = 2, Leja by default.
inline InterpErrorSummary run_runge_experiment(int K, int n, Form form, int samples,
                                               bool leja = true) {
    auto [grid, data] = build_problem(K, n, runge_taylor, 2.0, leja);
    auto [w, cache] = hermite_weights(grid);
    auto runge = [](double x) { return 1.0 / (1.0 + x * x); };
    return measure_interp_error(grid, w, data, runge, form, samples, 2.0);
}

/// Hat-function experiment, same pipeline.
inline InterpErrorSummary run_hat_experiment(int K, int n, Form form, int samples,
                                             bool leja = true) {
    auto [grid, data] = build_problem(K, n, hat_taylor, 2.0, leja);
    auto [w, cache] = hermite_weights(grid);
    auto hat = [](double x) { return 1.0 - std::fabs(x); };
    return measure_interp_error(grid, w, data, hat, form, samples, 2.0);
}

struct WeightErrorResult {
    Grid grid;
    WeightTable computed;
    RelErrorReport report;
};

/// Floating weights vs the exact-rational oracle on the sigma=2
/// Chebyshev grid (no Leja, matching the weight-display protocol).
inline WeightErrorResult weight_error_experiment(int K, int n) {
    auto [grid, data] = build_problem(K, n, [](double, int) { return 0.0; }, 2.0, false);
    auto [w, cache] = hermite_weights(grid);
    Table<Rational> exact = exact_weights(to_rational_grid(grid));
    RelErrorReport report = relative_errors(w, exact);
    return {std::move(grid), std::move(w), std::move(report)};
}

struct UpdateDemoRow {
    double zeta = 0.0;
    bool extended_existing = false;
    double max_rel_dev = 0.0;  // incremental vs from-scratch weights
    long long ops = 0;
    std::size_t N_after = 0;
};

/// Applies insertions one at a time, comparing each incremental state
/// against a from-scratch recomputation on the grown grid.
inline std::vector<UpdateDemoRow> run_update_demo(const Grid& grid,
                                                  const std::vector<double>& insertions) {
    InterpolationState st = make_state(grid);
    std::vector<UpdateDemoRow> rows;
    for (double zeta : insertions) {
        UpdateDemoRow row;
        row.zeta = zeta;
        row.extended_existing = find_point(state_grid(st), zeta) != npos;
        row.ops = count_add_data_ops(st, zeta).total();
        st = add_data(st, zeta);
        row.N_after = st.N();
        auto [scratch, cache] = hermite_weights(state_grid(st));
        double dev = 0.0;
        for (std::size_t k = 0; k < scratch.size(); ++k)
            for (std::size_t r = 0; r < scratch[k].size(); ++r) {
                double denom = std::fabs(scratch[k][r]);
                double d = std::fabs(st.weights[k][r] - scratch[k][r]);
                dev = std::max(dev, denom > 0.0 ? d / denom : d);
            }
        row.max_rel_dev = dev;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace bh
