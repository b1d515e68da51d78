#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "bh/eval.hpp"
#include "bh/functions.hpp"
#include "bh/grids.hpp"
#include "bh/oracle.hpp"
#include "bh/weights.hpp"

using namespace bh;

namespace {

// Eq.-(1) style golden grid {(-1,2),(1,2)} with z^3 data
struct GoldenProblem {
    Grid grid = validate_grid({-1.0, 1.0}, {2, 2});
    WeightTable weights = {{0.25, 0.25}, {0.25, -0.25}};
    HermiteData cubic = {{-1.0, 3.0}, {1.0, 3.0}};  // c = p^(r)(z)/r! for p = z^3
};

HermiteData poly_data(const Grid& g, std::span<const double> coeffs) {
    HermiteData data(g.K());
    for (std::size_t k = 0; k < g.K(); ++k) {
        data[k].resize(static_cast<std::size_t>(g.mults[k]));
        for (int r = 0; r < g.mults[k]; ++r)
            data[k][static_cast<std::size_t>(r)] = poly_taylor(coeffs, g.points[k], r);
    }
    return data;
}

}  // namespace

TEST_CASE("prefactor_pi_star") {
    Grid g = validate_grid({-1.0, 1.0}, {2, 2});
    CHECK(prefactor_pi_star(g, 0.0) == 1.0);
    CHECK(prefactor_pi_star(g, 2.0) == 9.0);
    Grid g2 = validate_grid({0.0}, {3});
    CHECK(prefactor_pi_star(g2, 2.0) == 8.0);
}

TEST_CASE("first form reproduces cubic data") {
    GoldenProblem p;
    CHECK(eval_first_form(p.grid, p.weights, p.cubic, 0.0) == doctest::Approx(0.0));
    CHECK(eval_first_form(p.grid, p.weights, p.cubic, 0.5) == doctest::Approx(0.125));
    CHECK(eval_first_form(p.grid, p.weights, p.cubic, 1.0) == 1.0);  // node short-circuit
}

TEST_CASE("second form reproduces cubic data") {
    GoldenProblem p;
    CHECK(eval_second_form(p.grid, p.weights, p.cubic, 2.0) == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(eval_second_form(p.grid, p.weights, p.cubic, -1.0) == -1.0);  // node short-circuit
    HermiteData constant = {{1.0, 0.0}, {1.0, 0.0}};
    CHECK(eval_second_form(p.grid, p.weights, constant, 0.3) ==
          doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("node short-circuit is bitwise") {
    GoldenProblem p;
    CHECK(eval_first_form(p.grid, p.weights, p.cubic, -1.0) == -1.0);
    CHECK(eval_second_form(p.grid, p.weights, p.cubic, 1.0) == 1.0);
    // -0.0 hits the node at 0
    Grid g = validate_grid({0.0, 1.0}, {1, 1});
    WeightTable w = {{-1.0}, {1.0}};
    HermiteData d = {{5.0}, {6.0}};
    CHECK(eval_first_form(g, w, d, -0.0) == 5.0);
}

TEST_CASE("sample_interpolant") {
    GoldenProblem p;
    std::vector<double> zs = {-1.0, 0.0, 1.0};
    auto out = sample_interpolant(p.grid, p.weights, p.cubic, zs, Form::Second);
    REQUIRE(out.size() == 3);
    CHECK(out[0].value == -1.0);
    CHECK(out[1].value == doctest::Approx(0.0));
    CHECK(out[2].value == 1.0);

    Grid g5 = validate_grid({-2.0, -1.0, 0.0, 1.0, 2.0}, {1, 1, 1, 1, 1});
    auto [w5, cache5] = hermite_weights(g5);
    HermiteData ones(5, {1.0});
    std::vector<double> zz = {-1.7, -0.3, 0.1, 0.9, 1.99};
    auto c = sample_interpolant(g5, w5, ones, zz, Form::Second);
    for (const auto& s : c) CHECK(s.value == doctest::Approx(1.0).epsilon(1e-13));

    auto empty = sample_interpolant(p.grid, p.weights, p.cubic, std::vector<double>{},
                                    Form::First);
    CHECK(empty.empty());
}

TEST_CASE("degree exactness for both forms") {
    auto pts = chebyshev_points(6);
    for (auto& z : pts) z *= 2.0;
    Grid g = validate_grid(pts, {2, 2, 2, 2, 2, 2});  // N = 12
    auto [w, cache] = hermite_weights(g);
    // random degree-11 polynomial
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::vector<double> p(12);
    for (auto& c : p) c = coeff(rng);
    HermiteData data = poly_data(g, p);
    std::uniform_real_distribution<double> unif(-2.0, 2.0);
    for (int t = 0; t < 16; ++t) {
        double z = unif(rng);
        double exact = poly_taylor(p, z, 0);
        CHECK(eval_first_form(g, w, data, z) ==
              doctest::Approx(exact).epsilon(1e-9));
        CHECK(eval_second_form(g, w, data, z) ==
              doctest::Approx(exact).epsilon(1e-9));
    }
}

TEST_CASE("degree exactness is exact in rational arithmetic") {
    RationalGrid rg{{Rational(-1), Rational(1), Rational(0)}, {2, 2, 1}};
    Table<Rational> w = exact_weights(rg);
    // p(z) = z^4 - 2z + 1; rows are p^(r)(z_k)/r!
    auto p_at = [](const Rational& z, int r) {
        std::vector<Rational> c = {1, -2, 0, 0, 1};
        // synthetic division in rationals
        Rational rem(0);
        for (int pass = 0; pass <= r; ++pass) {
            if (c.empty()) return Rational(0);
            Rational acc = c.back();
            for (std::size_t i = c.size() - 1; i-- > 0;) {
                Rational next = c[i] + acc * z;
                c[i] = acc;
                acc = next;
            }
            rem = acc;
            c.pop_back();
        }
        return rem;
    };
    Table<Rational> data(rg.K());
    for (std::size_t k = 0; k < rg.K(); ++k)
        for (int r = 0; r < rg.mults[k]; ++r) data[k].push_back(p_at(rg.points[k], r));
    for (long i = 2; i <= 17; i += 3) {
        Rational z(i, 7);
        CHECK(detail::eval_first<Rational>(rg.points, rg.mults, w, data, z) == p_at(z, 0));
        CHECK(detail::eval_second<Rational>(rg.points, rg.mults, w, data, z) == p_at(z, 0));
    }
}

TEST_CASE("forms agree at interior points") {
    auto pts = chebyshev_points(12);
    for (auto& z : pts) z *= 2.0;
    Grid g = validate_grid(pts, std::vector<int>(12, 3));
    auto [w, cache] = hermite_weights(g);
    HermiteData data(g.K());
    for (std::size_t k = 0; k < g.K(); ++k)
        for (int r = 0; r < g.mults[k]; ++r)
            data[k].push_back(runge_taylor(g.points[k] / 2.0, r) / std::pow(2.0, r));
    std::mt19937_64 rng(555);
    std::uniform_real_distribution<double> unif(-1.9, 1.9);
    for (int t = 0; t < 20; ++t) {
        double z = unif(rng);
        double f1 = eval_first_form(g, w, data, z);
        double f2 = eval_second_form(g, w, data, z);
        CHECK(f1 == doctest::Approx(f2).epsilon(1e-9));
    }
}

TEST_CASE("second form robustness under weight perturbation") {
    // exact-series route: perturbed weights still interpolate the data
    RationalGrid rg{{Rational(-1), Rational(1)}, {2, 2}};
    Table<Rational> w = exact_weights(rg);
    Table<Rational> data = {{Rational(-1), Rational(3)}, {Rational(1), Rational(3)}};
    w[0][1] += Rational(1, 10);  // perturb w_{1,1}, keep w_{k,0} != 0
    auto series = exact_second_form_series(rg, w, data, 1, 1);
    CHECK(series[0] == Rational(-1));
    CHECK(series[1] == Rational(3));

    // floating route: value converges to c_{k,0} as z -> z_k
    Grid g = validate_grid({-1.0, 1.0}, {2, 2});
    WeightTable fw = {{0.25 * 1.0003, 0.25 * (1 - 2e-4)}, {0.25 * (1 + 1e-4), -0.25}};
    HermiteData fd = {{-1.0, 3.0}, {1.0, 3.0}};
    double prev = 1e300;
    for (double eps : {1e-3, 1e-5, 1e-7}) {
        double dev = std::fabs(eval_second_form(g, fw, fd, 1.0 + eps) - 1.0);
        CHECK(dev < prev);
        prev = dev;
    }
    CHECK(prev < 1e-6);
}

TEST_CASE("second form reports a vanishing denominator") {
    Grid g = validate_grid({-1.0, 1.0}, {1, 1});
    WeightTable w = {{1.0}, {1.0}};  // contrived: denominator odd around 0
    HermiteData d = {{1.0}, {1.0}};
    CHECK_THROWS_AS(eval_second_form(g, w, d, 0.0), ZeroDenominatorError);
}

TEST_CASE("first form flags non-finite results") {
    // huge grid spread: pi* overflows
    Grid g = validate_grid({-1e200, 1e200}, {1, 1});
    WeightTable w = {{1.0}, {1.0}};
    HermiteData d = {{1.0}, {1.0}};
    CHECK_THROWS_AS(eval_first_form(g, w, d, 3e200), NonFiniteResultError);
    auto out = sample_interpolant(g, w, d, std::vector<double>{3e200}, Form::First);
    CHECK(!out[0].ok);
}
