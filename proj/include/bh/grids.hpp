#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "bh/core.hpp"
#include "bh/errors.hpp"
#include "bh/scaled.hpp"

namespace bh {

/// z_k = cos((2k-1) pi / 2K), k = 1..K, in that order.
inline std::vector<double> chebyshev_points(int K) {
    if (K < 1) throw PreconditionError("chebyshev_points: K must be >= 1");
    std::vector<double> z(static_cast<std::size_t>(K));
    for (int k = 1; k <= K; ++k)
        z[static_cast<std::size_t>(k - 1)] =
            std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * K));
    return z;
}

/// Points scaled by sigma, Taylor coefficients by sigma^-r: the data of
/// g(w) = f(w/sigma) on the stretched grid. sigma = 2 turns [-1,1] into
/// the capacity-1 interval [-2,2].
inline std::pair<Grid, HermiteData> scale_problem(const Grid& grid, const HermiteData& data,
                                                  double sigma) {
    if (!(sigma > 0.0)) throw PreconditionError("scale_problem: sigma must be positive");
    require_aligned(grid, data, "data");
    std::vector<double> pts(grid.K());
    for (std::size_t k = 0; k < grid.K(); ++k) pts[k] = sigma * grid.points[k];
    HermiteData scaled(data.size());
    for (std::size_t k = 0; k < data.size(); ++k) {
        scaled[k].resize(data[k].size());
        double pw = 1.0;
        for (std::size_t r = 0; r < data[k].size(); ++r) {
            scaled[k][r] = data[k][r] / pw;
            pw *= sigma;
        }
    }
    return {validate_grid(std::move(pts), grid.mults), std::move(scaled)};
}

/// Greedy Leja permutation: start with the largest |z|, then repeatedly
/// pick the point maximizing the product of distances to those already
/// chosen. Ties go to the smallest original index. Distance products are
/// accumulated with exponent tracking so the ordering itself cannot
/// over/underflow.
inline std::vector<std::size_t> leja_order(std::span<const double> points) {
    std::size_t K = points.size();
    std::vector<std::size_t> order;
    order.reserve(K);
    if (K == 0) return order;
    std::vector<bool> used(K, false);
    std::vector<ScaledMagnitude> prod(K, ScaledMagnitude::one());

    std::size_t best = 0;
    for (std::size_t j = 1; j < K; ++j)
        if (std::fabs(points[j]) > std::fabs(points[best])) best = j;
    order.push_back(best);
    used[best] = true;

    while (order.size() < K) {
        std::size_t last = order.back();
        std::size_t pick = npos;
        for (std::size_t j = 0; j < K; ++j) {
            if (used[j]) continue;
            prod[j] *= (points[j] - points[last]);
            if (pick == npos || prod[pick] < prod[j]) pick = j;
        }
        order.push_back(pick);
        used[pick] = true;
    }
    return order;
}

/// Reorder grid points and data rows by perm (a bijection on 0..K-1;
/// output position i takes input row perm[i]).
inline std::pair<Grid, HermiteData> apply_permutation(const Grid& grid, const HermiteData& data,
                                                      std::span<const std::size_t> perm) {
    require_aligned(grid, data, "data");
    if (perm.size() != grid.K()) throw InvalidPermutationError("permutation length mismatch");
    std::vector<bool> seen(grid.K(), false);
    for (std::size_t i : perm) {
        if (i >= grid.K() || seen[i]) throw InvalidPermutationError("not a bijection");
        seen[i] = true;
    }
    std::vector<double> pts(grid.K());
    std::vector<int> mults(grid.K());
    HermiteData rows(grid.K());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        pts[i] = grid.points[perm[i]];
        mults[i] = grid.mults[perm[i]];
        rows[i] = data[perm[i]];
    }
    return {validate_grid(std::move(pts), std::move(mults)), std::move(rows)};
}

}  // namespace bh
