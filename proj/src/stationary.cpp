#include "nlkg/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nlkg/elliptic.hpp"
#include "nlkg/quadrature.hpp"
#include "nlkg/spectral.hpp"

namespace nlkg {

namespace {

constexpr double sqrt2 = std::numbers::sqrt2;
constexpr double pi = std::numbers::pi;

// Left side of the matching condition; strictly decreasing in the modulus
// on the admissible interval for either sign of lambda.
double matching_lhs(double lambda, double k) {
    const double mag = std::abs(lambda);
    if (lambda < 0.0) return std::sqrt(mag / (1.0 + k * k));
    return std::sqrt(mag / (2.0 * k * k - 1.0));
}

double matching_residual(double lambda, int branch_n, double k) {
    return matching_lhs(lambda, k) - 2.0 * branch_n * complete_elliptic_k(k) / pi;
}

}  // namespace

std::string to_string(BranchKind kind) {
    return kind == BranchKind::sn ? "sn" : "cn";
}

BranchCount count_branches(double lambda) {
    if (!std::isfinite(lambda)) throw std::domain_error("lambda must be finite");
    if (lambda == 0.0) return {false, 0};
    if (lambda > 0.0) return {true, 0};
    const double mag = -lambda;
    // Branch n exists iff n^2 < |lambda| strictly; counting via the
    // integer comparison avoids sqrt rounding at perfect squares.
    int c = static_cast<int>(std::floor(std::sqrt(mag)));
    while (c >= 1 && static_cast<double>(c) * c >= mag) --c;
    while (static_cast<double>(c + 1) * (c + 1) < mag) ++c;
    return {false, std::max(c, 0)};
}

double solve_modulus(double lambda, int branch_n) {
    if (!std::isfinite(lambda) || lambda == 0.0) {
        throw std::domain_error("modulus solve requires lambda != 0");
    }
    if (branch_n < 1) throw std::domain_error("branch index must be >= 1");
    if (lambda < 0.0 &&
        static_cast<double>(branch_n) * branch_n >= std::abs(lambda)) {
        throw std::domain_error("no such branch: need branch_n^2 < |lambda| for lambda < 0");
    }

    const double eps = 1e-10;
    double lo = lambda < 0.0 ? eps : 1.0 / std::numbers::sqrt2 + eps;
    double hi = 1.0 - 2e-12;
    double flo = matching_residual(lambda, branch_n, lo);
    double fhi = matching_residual(lambda, branch_n, hi);
    if (!(flo > 0.0) || !(fhi < 0.0)) {
        throw std::domain_error("matching condition does not bracket a root; "
                                "modulus would fall outside the supported range");
    }

    // Bisection with secant refinement, run down to ulp-level interval
    // width; lhs decreasing and 2nK/pi increasing keep the bracket valid.
    double a = lo, b = hi, fa = flo, fb = fhi;
    for (int i = 0; i < 200; ++i) {
        double mid;
        if (i >= 20 && std::isfinite(fa) && std::isfinite(fb) && fa != fb) {
            mid = a + fa * (b - a) / (fa - fb);  // secant through the bracket
            const double margin = 0.01 * (b - a);
            if (!(mid > a + margin && mid < b - margin)) mid = 0.5 * (a + b);
        } else {
            mid = 0.5 * (a + b);
        }
        if (!(mid > a && mid < b)) break;  // interval exhausted
        const double fm = matching_residual(lambda, branch_n, mid);
        if (fm > 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
            fb = fm;
        }
    }
    return 0.5 * (a + b);
}

StationaryBranch build_branch(double lambda, int branch_n) {
    StationaryBranch b;
    b.lambda = lambda;
    b.branch_n = branch_n;
    b.kind = lambda < 0.0 ? BranchKind::sn : BranchKind::cn;
    b.modulus = solve_modulus(lambda, branch_n);
    const double kk = complete_elliptic_k(b.modulus);
    b.wavenumber = 2.0 * branch_n * kk / pi;
    b.amplitude = b.wavenumber * b.modulus;
    b.phase = b.kind == BranchKind::sn ? 0.0 : kk;
    b.orientation = 1.0;
    // Orient so the fundamental coefficient is positive: probe the first
    // antinode xi = pi / (2 branch_n), where the raw wave is extremal.
    const double probe = b.value(pi / (2.0 * branch_n));
    if (probe < 0.0) b.orientation = -1.0;
    return b;
}

double StationaryBranch::value(double xi) const {
    const double u = wavenumber * xi + phase;
    const double w = kind == BranchKind::sn ? jacobi_sn(u, modulus) : jacobi_cn(u, modulus);
    return orientation * sqrt2 * amplitude * w;
}

double StationaryBranch::derivative(double xi) const {
    const auto j = jacobi_elliptic(wavenumber * xi + phase, modulus);
    const double w = kind == BranchKind::sn ? j.cn * j.dn : -j.sn * j.dn;
    return orientation * sqrt2 * amplitude * wavenumber * w;
}

std::vector<double> branch_coefficients(const StationaryBranch& b, int n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    const std::size_t panels = std::max<std::size_t>(8192, 8 * static_cast<std::size_t>(n_max));
    GridFunction u;
    u.xi = uniform_grid(panels + 1);
    u.values.resize(u.xi.size());
    for (std::size_t j = 0; j < u.xi.size(); ++j) u.values[j] = b.value(u.xi[j]);
    return project(u, n_max);
}

double branch_energy(const StationaryBranch& b) {
    constexpr std::size_t panels = 8192;
    const double mag = std::abs(b.lambda);
    const double sgn = b.lambda < 0.0 ? -1.0 : 1.0;
    const double gradient_term = integrate_function(
        [&b](double xi) {
            const double d = b.derivative(xi);
            return d * d;
        },
        0.0, pi, panels);
    const double potential_term = integrate_function(
        [&b, mag](double xi) {
            const double u = b.value(xi);
            const double w = u * u - mag;
            return w * w;
        },
        0.0, pi, panels);
    return gradient_term / (2.0 * pi) - sgn * potential_term / (4.0 * pi);
}

std::vector<StationarySolution> enumerate_solutions(double lambda, int max_count,
                                                    int n_max) {
    if (max_count < 1) throw std::invalid_argument("max_count must be >= 1");
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    std::vector<StationarySolution> out;
    const BranchCount bc = count_branches(lambda);
    int n_branches = 0;
    if (lambda < 0.0) {
        n_branches = std::min(bc.count, max_count + 4);
    } else if (lambda > 0.0) {
        // Unbounded family: a few extra candidates cover non-monotone
        // energy ordering near the head of the list.
        n_branches = max_count + 4;
    }
    for (int n = 1; n <= n_branches; ++n) {
        StationarySolution s;
        s.branch = build_branch(lambda, n);
        s.energy = branch_energy(s.branch);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        const double ax = std::abs(x.energy), ay = std::abs(y.energy);
        if (ax != ay) return ax < ay;
        return x.branch.branch_n < y.branch.branch_n;
    });
    if (static_cast<int>(out.size()) > max_count) out.resize(max_count);
    if (lambda < 0.0 && static_cast<int>(out.size()) > bc.count) out.resize(bc.count);
    for (auto& s : out) s.coefficients = branch_coefficients(s.branch, n_max);
    return out;
}

}  // namespace nlkg
