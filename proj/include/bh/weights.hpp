#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bh/core.hpp"
#include "bh/errors.hpp"
#include "bh/opcount.hpp"
#include "bh/scaled.hpp"
#include "bh/symmfunc.hpp"

namespace bh {

/// prod_j z'_j^{n_j}, factors in index order, plain repeated
/// multiplication. Empty input gives 1.
template <class T>
T find_pi(std::span<const T> zprime, std::span<const int> mults) {
    if (zprime.size() != mults.size())
        throw ShapeMismatchError("find_pi: zprime/mults length mismatch");
    T pi(1);
    for (std::size_t j = 0; j < zprime.size(); ++j) {
        for (int i = 0; i < mults[j]; ++i) pi = pi * zprime[j];
    }
    return pi;
}

namespace detail {

/// Deleted-point difference list for point k (0-based): z_k - z_j for
/// j < k ascending, then j > k ascending, with the matching mults.
template <class T>
void difference_list(std::span<const T> points, std::span<const int> mults, std::size_t k,
                     std::vector<T>& zprime, std::vector<int>& mprime) {
    zprime.clear();
    mprime.clear();
    zprime.reserve(points.size() - 1);
    mprime.reserve(points.size() - 1);
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (j == k) continue;
        zprime.push_back(points[k] - points[j]);
        mprime.push_back(mults[j]);
    }
}

/// log2 magnitude of prod z'^n computed with exponent tracking, for the
/// over/underflow error message.
template <class T>
double product_log2(std::span<const T> zprime, std::span<const int> mults) {
    ScaledMagnitude acc = ScaledMagnitude::one();
    for (std::size_t j = 0; j < zprime.size(); ++j)
        for (int i = 0; i < mults[j]; ++i) acc *= as_double(zprime[j]);
    return acc.log2_value();
}

template <class T>
T prefactor_C(std::span<const T> zprime, std::span<const int> mprime, std::size_t k_display) {
    T pi = find_pi(zprime, mprime);
    if (pi == T(0))
        throw OverflowToInfError("prefactor C at k=" + std::to_string(k_display) +
                                 " overflows (difference product underflowed; log2|prod| ~ " +
                                 std::to_string(product_log2(zprime, mprime)) + ")");
    T C = T(1) / pi;
    if (!is_finite_value(C))
        throw OverflowToInfError("prefactor C at k=" + std::to_string(k_display) +
                                 " is not finite (log2|prod| ~ " +
                                 std::to_string(product_log2(zprime, mprime)) + ")");
    if (C == T(0))
        throw UnderflowToZeroError("prefactor C at k=" + std::to_string(k_display) +
                                   " underflows to zero (log2|prod| ~ " +
                                   std::to_string(product_log2(zprime, mprime)) + ")");
    return C;
}

/// Algorithm body for one grid point: returns the weight row and fills
/// the cache entry.
template <class T>
std::vector<T> weights_row(std::span<const T> points, std::span<const int> mults, std::size_t k,
                           CacheEntry<T>& entry) {
    int n = mults[k];
    std::vector<T> zprime;
    std::vector<int> mprime;
    difference_list(points, mults, k, zprime, mprime);
    std::vector<T> zetas = n_invert_list(std::span<const T>(zprime));
    std::vector<T> P = power_sums(std::span<const T>(zetas), std::span<const int>(mprime), n - 1);
    std::vector<T> I = inverse_poly(std::span<const T>(P));
    T C = prefactor_C(std::span<const T>(zprime), std::span<const int>(mprime), k + 1);
    std::vector<T> row(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) row[static_cast<std::size_t>(r)] = C * I[static_cast<std::size_t>(r)];
    entry.C = C;
    entry.P = std::move(P);
    entry.I = std::move(I);
    return row;
}

template <class T>
std::pair<Table<T>, Cache<T>> hermite_weights(std::span<const T> points,
                                              std::span<const int> mults) {
    Table<T> w(points.size());
    Cache<T> cache(points.size());
    for (std::size_t k = 0; k < points.size(); ++k)
        w[k] = weights_row(points, mults, k, cache[k]);
    return {std::move(w), std::move(cache)};
}

}  // namespace detail

/// C_k = prod_{j != k} (z_k - z_j)^{-n_j}; k is 1-based.
inline double prefactor_C(const Grid& grid, std::size_t k) {
    if (k < 1 || k > grid.K()) throw IndexOutOfRangeError("prefactor_C: k=" + std::to_string(k));
    std::vector<double> zprime;
    std::vector<int> mprime;
    detail::difference_list<double>(grid.points, grid.mults, k - 1, zprime, mprime);
    return detail::prefactor_C<double>(zprime, mprime, k);
}

/// Full weight table and intermediate cache for a validated grid.
inline std::pair<WeightTable, IntermediateCache> hermite_weights(const Grid& grid) {
    return detail::hermite_weights<double>(grid.points, grid.mults);
}

/// Operation counts from an instrumented run of hermite_weights.
inline OpCounts count_ops(const Grid& grid) {
    std::vector<Counted> points(grid.points.begin(), grid.points.end());
    OpCounts saved = g_op_counts;
    g_op_counts.reset();
    detail::hermite_weights<Counted>(points, grid.mults);
    OpCounts measured = g_op_counts;
    g_op_counts = saved;
    return measured;
}

}  // namespace bh
