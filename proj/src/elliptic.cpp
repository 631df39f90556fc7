#include "nlkg/elliptic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace nlkg {

namespace {

constexpr int max_agm_iterations = 32;

void check_modulus(double k) {
    if (!(k >= 0.0) || k >= max_elliptic_modulus) {
        throw std::domain_error("elliptic modulus must satisfy 0 <= k < 1 - 1e-12");
    }
}

// k' = sqrt(1 - k^2) without cancellation near k = 1.
double complement(double k) { return std::sqrt((1.0 - k) * (1.0 + k)); }

}  // namespace

EllipticModulus EllipticModulus::from_k(double k) {
    check_modulus(k);
    return {k, complement(k)};
}

double complete_elliptic_k(double k) {
    check_modulus(k);
    double a = 1.0;
    double b = complement(k);
    for (int i = 0; i < max_agm_iterations; ++i) {
        if (std::abs(a - b) <= 2.0 * std::numeric_limits<double>::epsilon() * a) break;
        const double mid = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = mid;
    }
    return std::numbers::pi / (2.0 * a);
}

JacobiValues jacobi_elliptic(double u, double k) {
    check_modulus(k);
    if (!std::isfinite(u)) {
        throw std::domain_error("jacobi argument must be finite");
    }
    if (k < 1e-10) {
        // Degenerates to circular functions; the O(k^2) correction is
        // below the accuracy target.
        const double s = std::sin(u);
        return {s, std::cos(u), std::sqrt(1.0 - k * k * s * s)};
    }

    std::array<double, max_agm_iterations + 1> a{};
    std::array<double, max_agm_iterations + 1> c{};
    a[0] = 1.0;
    c[0] = k;
    double b = complement(k);
    int n = 0;
    while (n < max_agm_iterations) {
        if (std::abs(c[n]) <= std::numeric_limits<double>::epsilon() * a[n]) break;
        a[n + 1] = 0.5 * (a[n] + b);
        c[n + 1] = 0.5 * (a[n] - b);
        b = std::sqrt(a[n] * b);
        ++n;
    }

    double phi = std::ldexp(a[n] * u, n);
    for (int i = n; i >= 1; --i) {
        const double t = std::clamp(c[i] / a[i] * std::sin(phi), -1.0, 1.0);
        phi = 0.5 * (phi + std::asin(t));
    }

    const double sn = std::sin(phi);
    const double cn = std::cos(phi);
    const double dn = std::sqrt(1.0 - k * k * sn * sn);
    return {sn, cn, dn};
}

double jacobi_sn(double u, double k) { return jacobi_elliptic(u, k).sn; }
double jacobi_cn(double u, double k) { return jacobi_elliptic(u, k).cn; }
double jacobi_dn(double u, double k) { return jacobi_elliptic(u, k).dn; }

}  // namespace nlkg
