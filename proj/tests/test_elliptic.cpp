#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nlkg/elliptic.hpp"
#include "oracles.hpp"

using namespace nlkg;

TEST_CASE("K at the endpoints and against the defining integral") {
    CHECK(complete_elliptic_k(0.0) == std::numbers::pi / 2.0);

    // Frozen from the quadrature oracle of the defining integral.
    const double k_half_sqrt2 = complete_elliptic_k(1.0 / std::numbers::sqrt2);
    CHECK(std::abs(k_half_sqrt2 - 1.8540746773013719) <= 1e-13);
    CHECK(std::abs(k_half_sqrt2 - oracles::complete_elliptic_k(1.0 / std::numbers::sqrt2)) <= 1e-12);

    for (double k : {0.1, 0.3, 0.6, 0.9, 0.99, 0.993}) {
        CHECK(std::abs(complete_elliptic_k(k) - oracles::complete_elliptic_k(k)) <=
              1e-12 * complete_elliptic_k(k));
    }
}

TEST_CASE("K(0.993) sits on the lambda=-10 matching curve") {
    const double lhs = std::sqrt(10.0 / (1.0 + 0.993 * 0.993));
    const double rhs = 2.0 * complete_elliptic_k(0.993) / std::numbers::pi;
    CHECK(std::abs(lhs - rhs) <= 1e-2);
}

TEST_CASE("K is increasing and tends to pi/2 from above") {
    double prev = complete_elliptic_k(0.0);
    for (double k = 0.05; k < 1.0 - 1e-6; k += 0.05) {
        const double cur = complete_elliptic_k(k);
        CHECK(cur > prev);
        prev = cur;
    }
    CHECK(complete_elliptic_k(1e-8) - std::numbers::pi / 2.0 >= 0.0);
    CHECK(complete_elliptic_k(1e-8) - std::numbers::pi / 2.0 <= 1e-15);
}

TEST_CASE("modulus domain") {
    CHECK_THROWS_AS((void)complete_elliptic_k(-0.1), std::domain_error);
    CHECK_THROWS_AS((void)complete_elliptic_k(1.0), std::domain_error);
    CHECK_THROWS_AS((void)complete_elliptic_k(1.0 - 1e-13), std::domain_error);
    CHECK_THROWS_AS((void)complete_elliptic_k(std::nan("")), std::domain_error);
    CHECK_THROWS_AS((void)jacobi_sn(0.5, 1.1), std::domain_error);
    CHECK_THROWS_AS((void)jacobi_cn(0.5, -0.2), std::domain_error);

    const EllipticModulus em = EllipticModulus::from_k(0.7);
    CHECK(std::abs(em.k_prime * em.k_prime + em.k * em.k - 1.0) <= 1e-15);
    CHECK_THROWS_AS((void)EllipticModulus::from_k(1.0), std::domain_error);
}

TEST_CASE("k = 0 degenerates to circular functions") {
    for (double u : {0.3, 1.0, 2.5}) {
        CHECK(std::abs(jacobi_sn(u, 0.0) - std::sin(u)) <= 1e-13);
        CHECK(std::abs(jacobi_cn(u, 0.0) - std::cos(u)) <= 1e-13);
        CHECK(jacobi_dn(u, 0.0) == 1.0);
    }
}

TEST_CASE("real zeros of sn and cn") {
    const double kk = complete_elliptic_k(0.7);
    for (int n = 1; n <= 3; ++n) {
        CHECK(std::abs(jacobi_sn(2.0 * n * kk, 0.7)) <= 1e-12);
    }
    const double kk8 = complete_elliptic_k(0.8);
    for (int n = 0; n <= 2; ++n) {
        CHECK(std::abs(jacobi_cn((2.0 * n + 1.0) * kk8, 0.8)) <= 1e-12);
    }
}

TEST_CASE("values against inversion of the defining integrals") {
    // Frozen from the inversion oracles before implementation.
    CHECK(std::abs(jacobi_sn(1.0, 0.5) - 0.8226355781298623) <= 1e-12);
    CHECK(std::abs(jacobi_sn(1.0, 0.5) - oracles::sn_by_inversion(1.0, 0.5)) <= 1e-11);

    CHECK(std::abs(jacobi_cn(0.7, 0.9) - 0.7908841911731904) <= 1e-12);
    CHECK(std::abs(jacobi_cn(0.7, 0.9) - oracles::cn_by_inversion(0.7, 0.9)) <= 1e-11);

    CHECK(std::abs(jacobi_sn(1.3, 0.7) - 0.9214672225114198) <= 1e-12);
    CHECK(std::abs(jacobi_cn(1.3, 0.7) - 0.3884561208644931) <= 1e-12);
    CHECK(std::abs(jacobi_dn(1.3, 0.7) - 0.7641597328701469) <= 1e-12);
}

TEST_CASE("pythagorean identities on a (u, k) grid") {
    for (double k : {0.0, 0.2, 0.5, 0.7, 0.9, 0.99}) {
        for (double u = -6.0; u <= 6.0; u += 0.37) {
            const auto j = jacobi_elliptic(u, k);
            CHECK(std::abs(j.sn * j.sn + j.cn * j.cn - 1.0) <= 1e-12);
            CHECK(std::abs(j.dn * j.dn + k * k * j.sn * j.sn - 1.0) <= 1e-12);
            CHECK(std::abs(j.sn) <= 1.0 + 1e-15);
        }
    }
}

TEST_CASE("second-derivative identities by central differences") {
    const double h = 1e-4;
    for (double k : {0.3, 0.7, 0.95}) {
        const double k2 = k * k;
        for (double u = 0.1; u <= 5.0; u += 0.53) {
            const double s0 = jacobi_sn(u, k);
            const double spp = (jacobi_sn(u + h, k) - 2.0 * s0 + jacobi_sn(u - h, k)) / (h * h);
            CHECK(std::abs(spp + (1.0 + k2) * s0 - 2.0 * k2 * s0 * s0 * s0) <= 1e-5);

            const double c0 = jacobi_cn(u, k);
            const double cpp = (jacobi_cn(u + h, k) - 2.0 * c0 + jacobi_cn(u - h, k)) / (h * h);
            CHECK(std::abs(cpp - (2.0 * k2 - 1.0) * c0 + 2.0 * k2 * c0 * c0 * c0) <= 1e-5);
        }
    }
}

TEST_CASE("periodicity sn(u + 4K) = sn(u)") {
    for (double k : {0.2, 0.6, 0.9}) {
        const double period = 4.0 * complete_elliptic_k(k);
        for (double u = -2.0; u <= 2.0; u += 0.41) {
            CHECK(std::abs(jacobi_sn(u + period, k) - jacobi_sn(u, k)) <= 1e-11);
            CHECK(std::abs(jacobi_cn(u + period, k) - jacobi_cn(u, k)) <= 1e-11);
        }
    }
}
