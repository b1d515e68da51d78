#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "bh/errors.hpp"

namespace bh {

/// Ragged table aligned with a grid: one row per grid point, row k of
/// length n_k. Used for Taylor data and for barycentric weights.
template <class T>
using Table = std::vector<std::vector<T>>;

using HermiteData = Table<double>;
using WeightTable = Table<double>;

/// -0.0 and +0.0 denote the same grid point.
inline double canonicalize_point(double z) { return z == 0.0 ? 0.0 : z; }

/// Distinct interpolation points with per-point derivative counts.
/// Construct through validate_grid; the fields are then immutable.
struct Grid {
    std::vector<double> points;  // z_1..z_K, pairwise distinct
    std::vector<int> mults;      // n_1..n_K, all >= 1
    std::size_t N = 0;           // n_1 + ... + n_K

    std::size_t K() const { return points.size(); }
};

inline Grid validate_grid(std::vector<double> points, std::vector<int> mults) {
    if (points.empty()) throw EmptyGridError("grid has no points");
    if (points.size() != mults.size())
        throw ShapeMismatchError("points and mults differ in length");
    Grid g;
    g.points.reserve(points.size());
    for (double z : points) {
        if (!std::isfinite(z))
            throw NonFinitePointError("grid point is not finite: " + std::to_string(z));
        g.points.push_back(canonicalize_point(z));
    }
    for (std::size_t k = 0; k < mults.size(); ++k) {
        if (mults[k] < 1)
            throw NonPositiveMultiplicityError("multiplicity " + std::to_string(mults[k]) +
                                               " at point index " + std::to_string(k + 1));
    }
    std::vector<double> sorted = g.points;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end())
        throw DuplicatePointError("duplicate grid point " + std::to_string(*dup));
    g.mults = std::move(mults);
    g.N = static_cast<std::size_t>(std::accumulate(g.mults.begin(), g.mults.end(), 0LL));
    return g;
}

/// Flat index of data item (k, r); k is 1-based, r is 0-based, matching
/// the usual w_{k,r} notation. Bijective onto 0..N-1.
inline std::size_t data_index(const Grid& grid, std::size_t k, int r) {
    if (k < 1 || k > grid.K())
        throw IndexOutOfRangeError("point index k=" + std::to_string(k));
    if (r < 0 || r >= grid.mults[k - 1])
        throw IndexOutOfRangeError("derivative index r=" + std::to_string(r) +
                                   " at k=" + std::to_string(k));
    std::size_t base = 0;
    for (std::size_t j = 0; j + 1 < k; ++j) base += static_cast<std::size_t>(grid.mults[j]);
    return base + static_cast<std::size_t>(r);
}

/// Throws unless the table has one row per grid point with row lengths
/// equal to the multiplicities.
template <class T>
void require_aligned(const Grid& grid, const Table<T>& table, const char* what) {
    if (table.size() != grid.K())
        throw ShapeMismatchError(std::string(what) + ": row count mismatch");
    for (std::size_t k = 0; k < grid.K(); ++k) {
        if (table[k].size() != static_cast<std::size_t>(grid.mults[k]))
            throw ShapeMismatchError(std::string(what) + ": row " + std::to_string(k + 1) +
                                     " length mismatch");
    }
}

/// Per-point intermediates from the weight computation: the prefactor
/// C_k, power sums P_1..P_{n_k-1} and series coefficients I_0..I_{n_k-1}
/// (I_0 = 1). Storing these is what makes O(N) updates possible.
template <class T>
struct CacheEntry {
    T C;
    std::vector<T> P;  // P_1..P_{n_k-1}
    std::vector<T> I;  // I_0..I_{n_k-1}, I[0] == 1
};

template <class T>
using Cache = std::vector<CacheEntry<T>>;

using IntermediateCache = Cache<double>;

template <class T>
void require_cache_aligned(const Grid& grid, const Cache<T>& cache) {
    if (cache.size() != grid.K())
        throw ShapeMismatchError("cache: entry count mismatch");
    for (std::size_t k = 0; k < grid.K(); ++k) {
        auto n = static_cast<std::size_t>(grid.mults[k]);
        if (cache[k].P.size() != n - 1 || cache[k].I.size() != n)
            throw ShapeMismatchError("cache: entry " + std::to_string(k + 1) + " shape mismatch");
        if (!(cache[k].I[0] == T(1)))
            throw ShapeMismatchError("cache: entry " + std::to_string(k + 1) + " has I_0 != 1");
    }
}

/// Index of the grid point equal to z, or npos.
inline std::size_t find_point(const Grid& grid, double z) {
    double zc = canonicalize_point(z);
    for (std::size_t k = 0; k < grid.K(); ++k)
        if (grid.points[k] == zc) return k;
    return static_cast<std::size_t>(-1);
}

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

}  // namespace bh
