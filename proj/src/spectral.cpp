#include "nlkg/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nlkg/quadrature.hpp"

namespace nlkg {

namespace {

constexpr double sqrt2 = std::numbers::sqrt2;

void check_index(int n) {
    if (n < 1) throw std::domain_error("mode index must be >= 1");
}

}  // namespace

std::vector<double> uniform_grid(std::size_t points) {
    if (points < 2) throw std::invalid_argument("grid needs at least 2 points");
    std::vector<double> xi(points);
    const double h = std::numbers::pi / static_cast<double>(points - 1);
    for (std::size_t j = 0; j < points; ++j) xi[j] = h * static_cast<double>(j);
    xi.back() = std::numbers::pi;
    return xi;
}

double mode_value(int n, double xi) {
    check_index(n);
    if (!(xi >= 0.0 && xi <= std::numbers::pi)) {
        throw std::domain_error("xi must lie in [0, pi]");
    }
    return sqrt2 * std::sin(n * xi);
}

double coupling(int n, int m, int p, int q) {
    check_index(n);
    check_index(m);
    check_index(p);
    check_index(q);
    const auto c = [](int j) { return j == 0 ? 1.0 : 0.5; };
    const auto delta = [](int x, int y) { return x == y ? 1.0 : 0.0; };
    const int d = std::abs(n - m);
    const int s = n + m;
    const int pd = std::abs(p - q);
    const int ps = p + q;
    return c(d) * (delta(d, pd) - delta(d, ps)) - c(s) * (delta(s, pd) - delta(s, ps));
}

CouplingTable::CouplingTable(int max_index) : max_index_(max_index) {
    if (max_index < 1) throw std::invalid_argument("max_index must be >= 1");
    const std::size_t nn = static_cast<std::size_t>(max_index);
    values_.resize(nn * nn * nn * nn);
    std::size_t idx = 0;
    for (int n = 1; n <= max_index; ++n)
        for (int m = 1; m <= max_index; ++m)
            for (int p = 1; p <= max_index; ++p)
                for (int q = 1; q <= max_index; ++q) values_[idx++] = coupling(n, m, p, q);
}

double CouplingTable::operator()(int n, int m, int p, int q) const {
    if (n < 1 || m < 1 || p < 1 || q < 1 || n > max_index_ || m > max_index_ ||
        p > max_index_ || q > max_index_) {
        throw std::domain_error("coupling table index out of range");
    }
    const std::size_t nn = static_cast<std::size_t>(max_index_);
    return values_[((static_cast<std::size_t>(n - 1) * nn + (m - 1)) * nn + (p - 1)) * nn +
                   (q - 1)];
}

std::vector<double> cube_modes(std::span<const double> a) {
    const int n_modes = static_cast<int>(a.size());
    std::vector<double> w(static_cast<std::size_t>(3 * n_modes), 0.0);
    const auto add = [&w](int j, double v) {
        if (j > 0) {
            w[static_cast<std::size_t>(j - 1)] += v;
        } else if (j < 0) {
            w[static_cast<std::size_t>(-j - 1)] -= v;
        }
    };
    // sin(n)sin(m)sin(p) splits into the four harmonics n-m+p, m-n+p,
    // n+m-p (weight +1/2 each) and n+m+p (weight -1/2); negative indices
    // fold back with a sign flip.
    for (int n = 1; n <= n_modes; ++n) {
        const double an = a[static_cast<std::size_t>(n - 1)];
        if (an == 0.0) continue;
        for (int m = 1; m <= n_modes; ++m) {
            const double anm = an * a[static_cast<std::size_t>(m - 1)];
            if (anm == 0.0) continue;
            for (int p = 1; p <= n_modes; ++p) {
                const double t = 0.5 * anm * a[static_cast<std::size_t>(p - 1)];
                if (t == 0.0) continue;
                add(n - m + p, t);
                add(m - n + p, t);
                add(n + m - p, t);
                add(n + m + p, -t);
            }
        }
    }
    return w;
}

std::vector<double> project(const GridFunction& u, int n_modes) {
    if (n_modes < 1) throw std::invalid_argument("n_modes must be >= 1");
    if (u.xi.size() != u.values.size() || u.points() < 2) {
        throw std::invalid_argument("grid function samples are inconsistent");
    }
    if (u.panels() < static_cast<std::size_t>(8 * n_modes)) {
        throw std::invalid_argument("grid resolution too low: need >= 8 panels per mode");
    }
    const double h = std::numbers::pi / static_cast<double>(u.panels());
    std::vector<double> coeffs(static_cast<std::size_t>(n_modes));
    std::vector<double> integrand(u.points());
    for (int n = 1; n <= n_modes; ++n) {
        for (std::size_t j = 0; j < u.points(); ++j) {
            integrand[j] = u.values[j] * sqrt2 * std::sin(n * u.xi[j]);
        }
        coeffs[static_cast<std::size_t>(n - 1)] = integrate_samples(integrand, h) / std::numbers::pi;
    }
    return coeffs;
}

GridFunction synthesize(std::span<const double> a, std::size_t points) {
    GridFunction u;
    u.xi = uniform_grid(points);
    u.values.assign(points, 0.0);
    for (std::size_t j = 1; j + 1 < points; ++j) {
        double acc = 0.0;
        for (std::size_t n = 0; n < a.size(); ++n) {
            acc += a[n] * std::sin(static_cast<double>(n + 1) * u.xi[j]);
        }
        u.values[j] = sqrt2 * acc;
    }
    // Dirichlet endpoints are exact by construction.
    return u;
}

}  // namespace nlkg
