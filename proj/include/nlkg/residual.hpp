#ifndef NLKG_RESIDUAL_HPP
#define NLKG_RESIDUAL_HPP

#include <cstddef>

#include "nlkg/dynamics.hpp"
#include "nlkg/spectral.hpp"

namespace nlkg {

/// Galerkin truncation error of a state: local samples of
/// R^(N)(xi) = |sum_{q=N+1}^{3N} w_q sqrt(2) sin(q xi)|, the part of the
/// cubic nonlinearity falling outside the retained modes, and its mean
/// Rbar^(N) = (1/pi) int R^(N) dxi. Independent of lambda.
struct ResidualReport {
    GridFunction local;
    double total = 0.0;
    double tau = 0.0;
    int n_modes = 0;
};

/// Grid points used by default: resolves the 3N-th harmonic with margin.
std::size_t default_residual_points(int n_modes);

/// Requires (points - 1) >= 24 * N panels; lambda is accepted for interface
/// symmetry but does not enter the formula.
GridFunction local_residual(const StateVector& s, std::size_t points,
                            double lambda);

double total_residual(const StateVector& s, std::size_t points, double lambda);

ResidualReport compute_residual(const StateVector& s, std::size_t points,
                                double lambda);

}  // namespace nlkg

#endif
