#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bh/errors.hpp"
#include "bh/rational.hpp"

namespace bh {

/// zeta_j = -1/z'_j elementwise. The inputs are deleted-point differences
/// z_k - z_j, so a zero input means a duplicate grid point upstream.
template <class T>
std::vector<T> n_invert_list(std::span<const T> zprime) {
    std::vector<T> zetas;
    zetas.reserve(zprime.size());
    for (const T& z : zprime) {
        if (z == T(0)) throw DivisionByZeroError("zero difference in n_invert_list");
        zetas.push_back(T(-1) / z);
    }
    return zetas;
}

/// Inverse power sums P_r = sum_j n_j zeta_j^r for r = 1..m, via the
/// running-product scheme: t_j starts at n_j and is multiplied by zeta_j
/// each round, then summed in index order.
template <class T>
std::vector<T> power_sums(std::span<const T> zetas, std::span<const int> mults, int m) {
    if (zetas.size() != mults.size())
        throw ShapeMismatchError("power_sums: zetas/mults length mismatch");
    std::vector<T> t(zetas.size());
    for (std::size_t j = 0; j < t.size(); ++j) t[j] = T(mults[j]);
    std::vector<T> P;
    P.reserve(static_cast<std::size_t>(m > 0 ? m : 0));
    for (int r = 1; r <= m; ++r) {
        T sum(0);
        for (std::size_t j = 0; j < t.size(); ++j) {
            t[j] = zetas[j] * t[j];
            if (j == 0)
                sum = t[j];
            else
                sum = sum + t[j];
        }
        P.push_back(sum);
    }
    return P;
}

/// Triangular recurrence: I_0 = 1, I_r = (1/r) sum_{s=1..r} P_s I_{r-s},
/// inner sum accumulated in increasing s. Returns I_0..I_m for m = |P|.
template <class T>
std::vector<T> inverse_poly(std::span<const T> P) {
    std::vector<T> I;
    I.reserve(P.size() + 1);
    I.push_back(T(1));
    for (std::size_t r = 1; r <= P.size(); ++r) {
        T sum = P[0] * I[r - 1];
        for (std::size_t s = 2; s <= r; ++s) sum = sum + P[s - 1] * I[r - s];
        I.push_back(sum / T(static_cast<int>(r)));
    }
    return I;
}

/// Runs the recurrence on scaled power sums P_r / s^r, returning the
/// scaled coefficients I_r / s^r. Diagnostic variant; s > 0.
template <class T>
std::vector<T> inverse_poly_scaled(std::span<const T> P, const T& s) {
    if (!(T(0) < s)) throw PreconditionError("inverse_poly_scaled: scale must be positive");
    std::vector<T> scaled(P.size());
    T spow(1);
    for (std::size_t r = 0; r < P.size(); ++r) {
        spow = spow * s;
        scaled[r] = P[r] / spow;
    }
    return inverse_poly(std::span<const T>(scaled));
}

/// Smallest power of two s >= 1 with |P_r| / s^r <= 1 for all r.
inline double choose_scale(std::span<const double> P) {
    int e = 0;
    for (std::size_t r = 1; r <= P.size(); ++r) {
        double mag = std::fabs(P[r - 1]);
        while (mag > std::ldexp(1.0, e * static_cast<int>(r))) ++e;
    }
    return std::ldexp(1.0, e);
}

/// Exact series coefficients of prod_i (1 - z/alpha_i)^{-n_i} through
/// order m, by truncated polynomial multiplication and long division.
/// Independent of the Newton-identity route.
inline std::vector<Rational> series_inverse_bruteforce(
    const std::vector<std::pair<Rational, int>>& alphas, int m) {
    std::vector<Rational> denom(static_cast<std::size_t>(m) + 1, Rational(0));
    denom[0] = 1;
    for (const auto& [alpha, mult] : alphas) {
        if (alpha == 0) throw DivisionByZeroError("series_inverse_bruteforce: alpha = 0");
        Rational c = Rational(-1) / alpha;  // factor is 1 + c z
        for (int i = 0; i < mult; ++i) {
            for (int d = m; d >= 1; --d) denom[d] += c * denom[d - 1];
        }
    }
    std::vector<Rational> inv(static_cast<std::size_t>(m) + 1, Rational(0));
    inv[0] = 1;  // denom[0] == 1 by construction
    for (int r = 1; r <= m; ++r) {
        Rational acc(0);
        for (int s = 1; s <= r; ++s) acc += denom[s] * inv[r - s];
        inv[r] = -acc;
    }
    return inv;
}

}  // namespace bh
