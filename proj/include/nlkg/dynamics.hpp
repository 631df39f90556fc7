#ifndef NLKG_DYNAMICS_HPP
#define NLKG_DYNAMICS_HPP

#include <stdexcept>
#include <vector>

#include "nlkg/spectral.hpp"

namespace nlkg {

/// Positions and velocities of the truncated N-particle system at time tau.
struct StateVector {
    std::vector<double> positions;   // A_1..A_N
    std::vector<double> velocities;  // dA_1/dtau .. dA_N/dtau
    double tau = 0.0;

    int modes() const { return static_cast<int>(positions.size()); }
};

StateVector make_state(std::vector<double> positions, double tau = 0.0);

struct Trajectory {
    std::vector<StateVector> samples;
    std::vector<double> hamiltonian_series;  // aligned with samples
    double dt = 0.0;
};

/// Thrown when the integration leaves the trusted range (|A_n| > 1e8 or
/// non-finite values); relevant for lambda > 0 where the Hamiltonian is
/// unbounded from below.
class DivergenceError : public std::runtime_error {
  public:
    DivergenceError(const std::string& what, double tau)
        : std::runtime_error(what), tau_(tau) {}
    double tau() const { return tau_; }

  private:
    double tau_;
};

/// Truncated potential
/// U = 1/2 sum (n^2+lambda) A_n^2 - sgn(lambda)/4 sum D A^4 - sgn(lambda)/4 lambda^2.
double potential_energy(const StateVector& s, double lambda);

/// Acceleration of each particle,
/// F_n = -(n^2+lambda) A_n + sgn(lambda) sum_{mpq} D_nmpq A_m A_p A_q,
/// identical to -dU/dA_n.
std::vector<double> force(const StateVector& s, double lambda);

/// H = 1/2 sum V_n^2 + U.
double hamiltonian(const StateVector& s, double lambda);

/// Fixed-step second-order symplectic leapfrog (half-drift, kick,
/// half-drift; one force evaluation per step). Samples the state and the
/// Hamiltonian every sample_every steps plus the initial and final states.
Trajectory integrate(const StateVector& s0, double lambda, double tau_end,
                     double dt, int sample_every = 1);

/// Initial data for the Cauchy problem: projects sampled field and
/// velocity profiles onto the first n_modes modes, tau = 0.
StateVector cauchy_from_field(const GridFunction& u0, const GridFunction& v0,
                              int n_modes);

}  // namespace nlkg

#endif
