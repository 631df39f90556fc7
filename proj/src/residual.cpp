#include "nlkg/residual.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nlkg/quadrature.hpp"

namespace nlkg {

std::size_t default_residual_points(int n_modes) {
    return static_cast<std::size_t>(32 * n_modes) + 1;
}

GridFunction local_residual(const StateVector& s, std::size_t points,
                            double lambda) {
    (void)lambda;  // the tail of the cubic expansion carries no lambda
    const int n_modes = s.modes();
    if (n_modes < 1) throw std::invalid_argument("state must have at least one mode");
    if (points < 2 || points - 1 < static_cast<std::size_t>(24 * n_modes)) {
        throw std::invalid_argument("residual grid too coarse: need >= 8 panels per harmonic up to 3N");
    }
    const std::vector<double> w = cube_modes(s.positions);

    GridFunction r;
    r.xi = uniform_grid(points);
    r.values.assign(points, 0.0);
    for (std::size_t j = 1; j + 1 < points; ++j) {
        double tail = 0.0;
        for (int q = n_modes + 1; q <= 3 * n_modes; ++q) {
            tail += w[static_cast<std::size_t>(q - 1)] * std::sin(q * r.xi[j]);
        }
        r.values[j] = std::abs(std::numbers::sqrt2 * tail);
    }
    return r;
}

double total_residual(const StateVector& s, std::size_t points, double lambda) {
    const GridFunction r = local_residual(s, points, lambda);
    const double h = std::numbers::pi / static_cast<double>(r.panels());
    return integrate_samples(r.values, h) / std::numbers::pi;
}

ResidualReport compute_residual(const StateVector& s, std::size_t points,
                                double lambda) {
    ResidualReport report;
    report.local = local_residual(s, points, lambda);
    const double h = std::numbers::pi / static_cast<double>(report.local.panels());
    report.total = integrate_samples(report.local.values, h) / std::numbers::pi;
    report.tau = s.tau;
    report.n_modes = s.modes();
    return report;
}

}  // namespace nlkg
