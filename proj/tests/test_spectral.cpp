#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "nlkg/quadrature.hpp"
#include "nlkg/spectral.hpp"
#include "oracles.hpp"

using namespace nlkg;

namespace {
constexpr double sqrt2 = std::numbers::sqrt2;
constexpr double pi = std::numbers::pi;
}

TEST_CASE("mode values and orthonormality") {
    CHECK(std::abs(mode_value(1, pi / 2.0) - sqrt2) <= 1e-15);
    CHECK(mode_value(3, 0.0) == 0.0);
    CHECK(std::abs(mode_value(2, pi / 4.0) - sqrt2) <= 1e-14);

    for (int n = 1; n <= 4; ++n) {
        for (int m = 1; m <= 4; ++m) {
            const double overlap = integrate_function(
                [n, m](double xi) { return mode_value(n, xi) * mode_value(m, xi) / pi; },
                0.0, pi, 2048);
            CHECK(std::abs(overlap - (n == m ? 1.0 : 0.0)) <= 1e-10);
        }
    }

    CHECK_THROWS_AS((void)mode_value(0, 1.0), std::domain_error);
    CHECK_THROWS_AS((void)mode_value(1, -0.1), std::domain_error);
    CHECK_THROWS_AS((void)mode_value(1, pi + 0.1), std::domain_error);
}

TEST_CASE("coupling closed form matches hand values") {
    CHECK(coupling(1, 1, 1, 1) == 1.5);
    CHECK(coupling(3, 1, 1, 1) == -0.5);
    CHECK(coupling(1, 2, 3, 4) == 0.5);   // frozen from the quadrature oracle
    CHECK(coupling(1, 1, 3, 3) == 1.0);
    CHECK_THROWS_AS((void)coupling(0, 1, 1, 1), std::domain_error);
}

TEST_CASE("coupling is totally symmetric and half-integer") {
    std::mt19937 gen(11);
    std::uniform_int_distribution<int> pick(1, 9);
    for (int trial = 0; trial < 50; ++trial) {
        std::array<int, 4> idx{pick(gen), pick(gen), pick(gen), pick(gen)};
        const double base = coupling(idx[0], idx[1], idx[2], idx[3]);
        std::array<int, 4> perm = idx;
        std::sort(perm.begin(), perm.end());
        do {
            CHECK(coupling(perm[0], perm[1], perm[2], perm[3]) == base);
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(std::abs(base * 2.0 - std::round(base * 2.0)) == 0.0);
    }
}

TEST_CASE("coupling equals quadrature of the mode product, selection rule") {
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; m <= 5; ++m)
            for (int p = 1; p <= 5; ++p)
                for (int q = 1; q <= 5; ++q) {
                    const double closed = coupling(n, m, p, q);
                    CHECK(std::abs(closed - oracles::coupling_by_quadrature(n, m, p, q)) <= 1e-10);
                    bool balanced = false;
                    for (int s1 : {-1, 1})
                        for (int s2 : {-1, 1})
                            for (int s3 : {-1, 1}) {
                                balanced = balanced || (n + s1 * m + s2 * p + s3 * q == 0);
                            }
                    if (!balanced) CHECK(closed == 0.0);
                }
}

TEST_CASE("coupling table caches the closed form") {
    const CouplingTable table(6);
    for (int n = 1; n <= 6; ++n)
        for (int q = 1; q <= 6; ++q) {
            CHECK(table(n, 2, 3, q) == coupling(n, 2, 3, q));
        }
    CHECK_THROWS_AS((void)table(7, 1, 1, 1), std::domain_error);
}

TEST_CASE("cube_modes expands single-mode cubes exactly") {
    const std::array<double, 2> a{1.0, 0.0};
    const std::vector<double> w = cube_modes(a);
    REQUIRE(w.size() == 6);
    CHECK(w[0] == 1.5);
    CHECK(w[1] == 0.0);
    CHECK(w[2] == -0.5);
    CHECK(w[3] == 0.0);
    CHECK(w[4] == 0.0);
    CHECK(w[5] == 0.0);
}

TEST_CASE("cube_modes agrees with the coupling triple sum") {
    std::mt19937 gen(3);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    for (int n_modes : {2, 4, 5}) {
        std::vector<double> a(n_modes);
        for (double& x : a) x = coeff(gen);
        const std::vector<double> w = cube_modes(a);
        for (int q = 1; q <= 3 * n_modes; ++q) {
            double direct = 0.0;
            for (int n = 1; n <= n_modes; ++n)
                for (int m = 1; m <= n_modes; ++m)
                    for (int p = 1; p <= n_modes; ++p) {
                        direct += coupling(n, m, p, q) * a[n - 1] * a[m - 1] * a[p - 1];
                    }
            CHECK(std::abs(w[q - 1] - direct) <= 1e-12);
        }
    }
}

TEST_CASE("projection of pure modes and the zero function") {
    GridFunction u = synthesize(std::array<double, 2>{0.0, 1.0}, 257);
    const std::vector<double> a = project(u, 4);
    CHECK(std::abs(a[0]) <= 1e-10);
    CHECK(std::abs(a[1] - 1.0) <= 1e-10);
    CHECK(std::abs(a[2]) <= 1e-10);
    CHECK(std::abs(a[3]) <= 1e-10);

    GridFunction zero;
    zero.xi = uniform_grid(129);
    zero.values.assign(129, 0.0);
    for (double x : project(zero, 8)) CHECK(x == 0.0);

    GridFunction coarse;
    coarse.xi = uniform_grid(17);
    coarse.values.assign(17, 0.0);
    CHECK_THROWS_AS((void)project(coarse, 4), std::invalid_argument);
}

TEST_CASE("synthesis hits the quarter points and the boundary exactly") {
    const GridFunction u = synthesize(std::array<double, 1>{1.0}, 5);
    REQUIRE(u.values.size() == 5);
    CHECK(u.values[0] == 0.0);
    CHECK(std::abs(u.values[1] - 1.0) <= 1e-15);
    CHECK(std::abs(u.values[2] - sqrt2) <= 1e-15);
    CHECK(std::abs(u.values[3] - 1.0) <= 1e-15);
    CHECK(u.values[4] == 0.0);

    const GridFunction z = synthesize(std::array<double, 3>{0.0, 0.0, 0.0}, 33);
    for (double v : z.values) CHECK(v == 0.0);
}

TEST_CASE("project(synthesize(a)) round trip") {
    std::mt19937 gen(21);
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> a(12);
        for (double& x : a) x = coeff(gen);
        const std::vector<double> back = project(synthesize(a, 513), 12);
        for (int n = 0; n < 12; ++n) CHECK(std::abs(back[n] - a[n]) <= 1e-10);
    }
}
