#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace bh {

/// Taylor coefficient f^(r)(z)/r! of the Runge function 1/(1+z^2),
/// via z - i = R e^{i theta}: c = (-1)^{r-1} R^{-(r+1)} sin((r+1) theta).
/// Stable for z in [-1, 1]; no factorials are formed.
inline double runge_taylor(double z, int r) {
    double R = std::sqrt(1.0 + z * z);
    double theta = std::atan2(-1.0, z);
    double sign = (r % 2 == 0) ? -1.0 : 1.0;
    return sign * std::pow(R, -(r + 1.0)) * std::sin((r + 1.0) * theta);
}

/// Taylor coefficients of the hat function 1 - |z|; f'(0) taken as 0.
inline double hat_taylor(double z, int r) {
    if (r == 0) return 1.0 - std::fabs(z);
    if (r == 1) return z > 0.0 ? -1.0 : (z < 0.0 ? 1.0 : 0.0);
    return 0.0;
}

/// Taylor coefficient p^(r)(z)/r! of the polynomial with monomial
/// coefficients coeffs (coeffs[i] multiplies z^i), by repeated synthetic
/// division: after r+1 Horner shifts the last remainder is the answer.
inline double poly_taylor(std::span<const double> coeffs, double z, int r) {
    std::vector<double> work(coeffs.begin(), coeffs.end());
    double remainder = 0.0;
    for (int pass = 0; pass <= r; ++pass) {
        if (work.empty()) return 0.0;
        double acc = work.back();
        for (std::size_t i = work.size() - 1; i-- > 0;) {
            double next = work[i] + acc * z;
            work[i] = acc;
            acc = next;
        }
        remainder = acc;
        work.pop_back();
    }
    return remainder;
}

}  // namespace bh
