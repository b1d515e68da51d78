#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "bh/eval.hpp"
#include "bh/functions.hpp"
#include "bh/grids.hpp"
#include "bh/weights.hpp"

using namespace bh;

TEST_CASE("runge_taylor examples") {
    CHECK(runge_taylor(0.0, 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(runge_taylor(1.0, 1) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(runge_taylor(0.0, 2) == doctest::Approx(-1.0).epsilon(1e-15));
    // f(1) = 1/2, f(0.5) = 0.8
    CHECK(runge_taylor(1.0, 0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(runge_taylor(0.5, 0) == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("runge_taylor matches finite differences") {
    // d/dz c_{r-1}(z) = r c_r(z)
    const double h = 1e-5;
    for (double z : {-0.9, 0.0, 0.7}) {
        for (int r = 1; r <= 4; ++r) {
            double fd = (runge_taylor(z + h, r - 1) - runge_taylor(z - h, r - 1)) / (2.0 * h);
            double exact = r * runge_taylor(z, r);
            CHECK(fd == doctest::Approx(exact).epsilon(1e-6));
        }
    }
}

TEST_CASE("runge_taylor parity") {
    for (double z : {0.1, 0.35, 0.99, 1.0}) {
        for (int r = 0; r <= 7; ++r) {
            double sign = (r % 2 == 0) ? 1.0 : -1.0;
            CHECK(runge_taylor(z, r) ==
                  doctest::Approx(sign * runge_taylor(-z, r)).epsilon(1e-13));
        }
    }
}

TEST_CASE("hat_taylor examples") {
    CHECK(hat_taylor(0.5, 0) == 0.5);
    CHECK(hat_taylor(-0.5, 1) == 1.0);
    CHECK(hat_taylor(0.3, 4) == 0.0);
    CHECK(hat_taylor(0.0, 1) == 0.0);  // sign(0) = 0 convention
    CHECK(hat_taylor(0.7, 1) == -1.0);
}

TEST_CASE("hat data on a symmetric grid gives an even interpolant") {
    auto pts = chebyshev_points(8);  // symmetric about 0
    for (auto& z : pts) z *= 2.0;
    Grid g = validate_grid(pts, std::vector<int>(8, 2));
    HermiteData d(8);
    for (std::size_t k = 0; k < 8; ++k)
        for (int r = 0; r < 2; ++r)
            d[k].push_back(hat_taylor(g.points[k] / 2.0, r) / std::pow(2.0, r));
    auto [w, cache] = hermite_weights(g);
    for (double x : {0.2, 0.55, 1.3, 1.9}) {
        double plus = eval_second_form(g, w, d, x);
        double minus = eval_second_form(g, w, d, -x);
        CHECK(plus == doctest::Approx(minus).epsilon(1e-11));
    }
}

TEST_CASE("poly_taylor examples") {
    std::vector<double> cubic = {0.0, 0.0, 0.0, 1.0};  // z^3
    CHECK(poly_taylor(cubic, 1.0, 1) == 3.0);
    CHECK(poly_taylor(cubic, -1.0, 0) == -1.0);
    std::vector<double> constant = {1.0};
    CHECK(poly_taylor(constant, 3.7, 1) == 0.0);
    CHECK(poly_taylor(constant, 3.7, 5) == 0.0);
}

TEST_CASE("poly_taylor full expansion of a quartic") {
    // p(z) = 2 - z + 3z^4 about z = 2: coefficients p^(r)(2)/r!
    std::vector<double> p = {2.0, -1.0, 0.0, 0.0, 3.0};
    CHECK(poly_taylor(p, 2.0, 0) == 48.0);
    CHECK(poly_taylor(p, 2.0, 1) == 95.0);    // -1 + 12 z^3
    CHECK(poly_taylor(p, 2.0, 2) == 72.0);    // 18 z^2
    CHECK(poly_taylor(p, 2.0, 3) == 24.0);    // 12 z
    CHECK(poly_taylor(p, 2.0, 4) == 3.0);
    CHECK(poly_taylor(p, 2.0, 5) == 0.0);
}
