#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "bh/grids.hpp"
#include "bh/scaled.hpp"

using namespace bh;

TEST_CASE("chebyshev_points") {
    auto one = chebyshev_points(1);
    CHECK(one == std::vector<double>{6.123233995736766e-17});  // cos(pi/2) rounds off zero

    auto two = chebyshev_points(2);
    CHECK(two[0] == doctest::Approx(0.7071067811865476).epsilon(1e-16));
    CHECK(two[1] == doctest::Approx(-0.7071067811865476).epsilon(1e-16));

    auto four = chebyshev_points(4);
    REQUIRE(four.size() == 4);
    CHECK(four[0] == doctest::Approx(-four[3]).epsilon(1e-15));
    CHECK(four[1] == doctest::Approx(-four[2]).epsilon(1e-15));
    CHECK(std::is_sorted(four.rbegin(), four.rend()));

    CHECK_THROWS_AS(chebyshev_points(0), PreconditionError);
}

TEST_CASE("scale_problem") {
    Grid g = validate_grid({-1.0, 1.0}, {2, 2});
    HermiteData d = {{1.0, 0.5}, {1.0, 0.5}};
    auto [g2, d2] = scale_problem(g, d, 2.0);
    CHECK(g2.points == std::vector<double>{-2.0, 2.0});
    CHECK(d2[0] == std::vector<double>{1.0, 0.25});

    auto [g1, d1] = scale_problem(g, d, 1.0);
    CHECK(g1.points == g.points);
    CHECK(d1 == d);

    CHECK_THROWS_AS(scale_problem(g, d, 0.0), PreconditionError);
    CHECK_THROWS_AS(scale_problem(g, d, -1.0), PreconditionError);
}

TEST_CASE("scale round-trips bitwise for power-of-two sigma") {
    Grid g = validate_grid(chebyshev_points(9), std::vector<int>(9, 3));
    HermiteData d(9, {1.0, 0.3, -0.7});
    auto [g2, d2] = scale_problem(g, d, 2.0);
    auto [g3, d3] = scale_problem(g2, d2, 0.5);
    CHECK(g3.points == g.points);
    CHECK(d3 == d);
}

TEST_CASE("leja_order examples") {
    std::vector<double> pts = {-2.0, -1.0, 0.0, 1.0, 2.0};
    auto perm = leja_order(pts);
    std::vector<double> ordered;
    for (std::size_t i : perm) ordered.push_back(pts[i]);
    CHECK(ordered == std::vector<double>{-2.0, 2.0, 0.0, -1.0, 1.0});

    std::vector<double> single = {5.0};
    CHECK(leja_order(single) == std::vector<std::size_t>{0});

    std::vector<double> pair = {1.0, -1.0};  // tie on |z|: smaller index first
    CHECK(leja_order(pair) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("leja_order is invariant under input permutation") {
    std::mt19937_64 rng(808);
    std::uniform_real_distribution<double> unif(-3.0, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> pts(12);
        for (auto& z : pts) z = unif(rng);  // tie-free with probability 1
        auto perm = leja_order(pts);
        std::vector<double> ordered;
        for (std::size_t i : perm) ordered.push_back(pts[i]);

        std::vector<double> shuffled = pts;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        auto perm2 = leja_order(shuffled);
        std::vector<double> ordered2;
        for (std::size_t i : perm2) ordered2.push_back(shuffled[i]);
        CHECK(ordered == ordered2);
    }
}

TEST_CASE("leja_order survives magnitudes that overflow naive products") {
    // |z| ~ 1e150: naive distance products overflow within a few steps
    std::vector<double> pts(64);
    for (std::size_t i = 0; i < pts.size(); ++i)
        pts[i] = (i % 2 == 0 ? 1.0 : -1.0) * 1e150 * (1.0 + 0.01 * static_cast<double>(i));
    auto perm = leja_order(pts);
    std::vector<bool> seen(pts.size(), false);
    for (std::size_t i : perm) {
        REQUIRE(i < pts.size());
        CHECK(!seen[i]);
        seen[i] = true;
    }
}

TEST_CASE("apply_permutation") {
    Grid g = validate_grid({-1.0, 1.0}, {2, 1});
    HermiteData d = {{1.0, 2.0}, {3.0}};
    std::vector<std::size_t> ident = {0, 1};
    auto [gi, di] = apply_permutation(g, d, ident);
    CHECK(gi.points == g.points);
    CHECK(di == d);

    std::vector<std::size_t> swap = {1, 0};
    auto [gs, ds] = apply_permutation(g, d, swap);
    CHECK(gs.points == std::vector<double>{1.0, -1.0});
    CHECK(gs.mults == std::vector<int>{1, 2});
    CHECK(ds[0] == std::vector<double>{3.0});

    std::vector<std::size_t> bad = {0, 0};
    CHECK_THROWS_AS(apply_permutation(g, d, bad), InvalidPermutationError);
    std::vector<std::size_t> shortp = {0};
    CHECK_THROWS_AS(apply_permutation(g, d, shortp), InvalidPermutationError);
}

TEST_CASE("capacity sanity on the scaled Chebyshev grid") {
    // geometric-mean distance (prod |zbar - z_k|)^{1/K} near 1 for K = 256
    const int K = 256;
    auto pts = chebyshev_points(K);
    for (auto& z : pts) z *= 2.0;
    for (double zbar : {0.0, 1.0, 2.0}) {
        ScaledMagnitude prod = ScaledMagnitude::one();
        for (double z : pts) prod *= (zbar - z);
        double gm = std::exp2(prod.log2_value() / K);
        CHECK(gm >= 0.8);
        CHECK(gm <= 1.25);
    }
}
