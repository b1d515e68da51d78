#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bh/core.hpp"
#include "bh/errors.hpp"
#include "bh/opcount.hpp"
#include "bh/rational.hpp"
#include "bh/weights.hpp"

namespace bh {

inline double canonicalize_scalar(double z) { return canonicalize_point(z); }
inline Counted canonicalize_scalar(Counted z) { return Counted(canonicalize_point(z.v)); }
inline const Rational& canonicalize_scalar(const Rational& z) { return z; }

/// Grid, weights and intermediate cache travelling together so that new
/// data items can be absorbed in O(N). Treat as immutable; add_data
/// returns a new state.
template <class T>
struct State {
    std::vector<T> points;
    std::vector<int> mults;
    Table<T> weights;
    Cache<T> cache;

    std::size_t K() const { return points.size(); }
    std::size_t N() const {
        std::size_t n = 0;
        for (int m : mults) n += static_cast<std::size_t>(m);
        return n;
    }
};

using InterpolationState = State<double>;

/// Forward substitution of the bidiagonal system (eq. of the weight
/// update): w'_0 = w_0/d, w'_r = (w_r - w'_{r-1})/d with d = z_k - zeta.
template <class T>
std::vector<T> shift_weights_row(std::span<const T> row, const T& d) {
    if (d == T(0)) throw DivisionByZeroError("shift_weights_row: d = 0");
    std::vector<T> out(row.size());
    if (row.empty()) return out;
    out[0] = row[0] / d;
    for (std::size_t r = 1; r < row.size(); ++r) out[r] = (row[r] - out[r - 1]) / d;
    return out;
}

/// Absorb one more element 1/(zeta - z_k) into the cache entry of a
/// point with z_k != zeta. Two operations per updated scalar.
template <class T>
CacheEntry<T> update_cache_entry(const CacheEntry<T>& entry, const T& z_k, const T& zeta) {
    if (z_k == zeta) throw DivisionByZeroError("update_cache_entry: zeta equals z_k");
    CacheEntry<T> out;
    T inv = T(1) / (zeta - z_k);
    out.C = entry.C / (z_k - zeta);
    out.P.resize(entry.P.size());
    T pw(1);
    for (std::size_t r = 0; r < entry.P.size(); ++r) {
        pw = pw * inv;
        out.P[r] = entry.P[r] + pw;
    }
    out.I.resize(entry.I.size());
    out.I[0] = T(1);
    for (std::size_t r = 1; r < entry.I.size(); ++r)
        out.I[r] = entry.I[r] + out.I[r - 1] * inv;
    return out;
}

namespace detail {

/// Weight of a fresh simple point: prod_j (zeta - z_j)^{-n_j}.
template <class T>
T new_point_weight(std::span<const T> points, std::span<const int> mults, const T& zeta) {
    std::vector<T> zprime(points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (points[j] == zeta)
            throw DuplicatePointError("new_point_weight: zeta is an existing grid point");
        zprime[j] = zeta - points[j];
    }
    return prefactor_C<T>(zprime, mults, points.size() + 1);
}

/// New weight and extended cache entry when one more derivative is
/// prescribed at existing point kappa (0-based). The multiset A_kappa
/// is unchanged; only P_{n} and I_{n} are generated.
template <class T>
std::pair<T, CacheEntry<T>> extend_entry(const State<T>& st, std::size_t kappa) {
    int n = st.mults[kappa];
    const CacheEntry<T>& e = st.cache[kappa];
    // P_n = sum_{j != kappa} n_j (z_j - z_kappa)^{-n}, directly in O(K)
    T Pn(0);
    for (std::size_t j = 0; j < st.points.size(); ++j) {
        if (j == kappa) continue;
        T inv = T(1) / (st.points[j] - st.points[kappa]);
        T p(1);
        for (int i = 0; i < n; ++i) p = p * inv;
        Pn = Pn + T(st.mults[j]) * p;
    }
    // I_n = (1/n) sum_{s=1..n} P_s I_{n-s}
    T acc(0);
    for (int s = 1; s <= n; ++s) {
        const T& Ps = (s == n) ? Pn : e.P[static_cast<std::size_t>(s - 1)];
        acc = acc + Ps * e.I[static_cast<std::size_t>(n - s)];
    }
    T In = acc / T(n);
    CacheEntry<T> out = e;
    out.P.push_back(Pn);
    out.I.push_back(In);
    return {e.C * In, std::move(out)};
}

template <class T>
State<T> add_data(const State<T>& st, T zeta_in) {
    T zeta = canonicalize_scalar(zeta_in);
    std::size_t kappa = npos;
    for (std::size_t k = 0; k < st.points.size(); ++k)
        if (st.points[k] == zeta) { kappa = k; break; }

    State<T> out;
    out.points = st.points;
    out.mults = st.mults;
    out.weights.resize(st.weights.size());
    out.cache.resize(st.cache.size());
    for (std::size_t k = 0; k < st.points.size(); ++k) {
        if (k == kappa) continue;
        T d = st.points[k] - zeta;
        out.weights[k] = shift_weights_row(std::span<const T>(st.weights[k]), d);
        out.cache[k] = update_cache_entry(st.cache[k], st.points[k], zeta);
    }
    if (kappa == npos) {
        T w_new = new_point_weight<T>(st.points, st.mults, zeta);
        out.points.push_back(zeta);
        out.mults.push_back(1);
        out.weights.push_back({w_new});
        out.cache.push_back(CacheEntry<T>{w_new, {}, {T(1)}});
    } else {
        auto [w_new, entry] = extend_entry(st, kappa);
        out.weights[kappa] = st.weights[kappa];
        out.weights[kappa].push_back(w_new);
        out.cache[kappa] = std::move(entry);
        out.mults[kappa] += 1;
    }
    return out;
}

}  // namespace detail

/// Initial state from a from-scratch weight computation.
inline InterpolationState make_state(const Grid& grid) {
    auto [w, cache] = hermite_weights(grid);
    return {grid.points, grid.mults, std::move(w), std::move(cache)};
}

inline Grid state_grid(const InterpolationState& st) {
    return validate_grid(st.points, st.mults);
}

inline double new_point_weight(const Grid& grid, double zeta) {
    return detail::new_point_weight<double>(grid.points, grid.mults, canonicalize_point(zeta));
}

/// kappa is 1-based, matching w_{kappa,r} notation.
inline std::pair<double, CacheEntry<double>> extend_existing_point(const InterpolationState& st,
                                                                   std::size_t kappa) {
    if (kappa < 1 || kappa > st.K())
        throw IndexOutOfRangeError("extend_existing_point: kappa=" + std::to_string(kappa));
    return detail::extend_entry(st, kappa - 1);
}

/// One new data item at zeta: a function value at a new point, or the
/// next derivative at an existing point. O(N) + O(K).
inline InterpolationState add_data(const InterpolationState& st, double zeta) {
    return detail::add_data(st, zeta);
}

/// Operation counts of a single add_data call, from an instrumented run.
inline OpCounts count_add_data_ops(const InterpolationState& st, double zeta) {
    State<Counted> cst;
    cst.points.assign(st.points.begin(), st.points.end());
    cst.mults = st.mults;
    cst.weights.resize(st.weights.size());
    cst.cache.resize(st.cache.size());
    for (std::size_t k = 0; k < st.weights.size(); ++k) {
        cst.weights[k].assign(st.weights[k].begin(), st.weights[k].end());
        cst.cache[k].C = st.cache[k].C;
        cst.cache[k].P.assign(st.cache[k].P.begin(), st.cache[k].P.end());
        cst.cache[k].I.assign(st.cache[k].I.begin(), st.cache[k].I.end());
    }
    OpCounts saved = g_op_counts;
    g_op_counts.reset();
    detail::add_data<Counted>(cst, Counted(zeta));
    OpCounts measured = g_op_counts;
    g_op_counts = saved;
    return measured;
}

}  // namespace bh
