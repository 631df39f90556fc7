#include "nlkg/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace nlkg {

namespace {

constexpr double divergence_bound = 1e8;

double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

void check_state(const StateVector& s) {
    if (s.positions.empty() || s.positions.size() != s.velocities.size()) {
        throw std::invalid_argument("state needs matching nonempty positions and velocities");
    }
}

bool in_range(const std::vector<double>& a) {
    for (double x : a) {
        if (!std::isfinite(x) || std::abs(x) > divergence_bound) return false;
    }
    return true;
}

}  // namespace

StateVector make_state(std::vector<double> positions, double tau) {
    StateVector s;
    s.velocities.assign(positions.size(), 0.0);
    s.positions = std::move(positions);
    s.tau = tau;
    return s;
}

double potential_energy(const StateVector& s, double lambda) {
    check_state(s);
    const int n_modes = s.modes();
    const double sgn = sign_of(lambda);
    const std::vector<double> w = cube_modes(s.positions);
    double quadratic = 0.0;
    double quartic = 0.0;
    for (int n = 1; n <= n_modes; ++n) {
        const double an = s.positions[static_cast<std::size_t>(n - 1)];
        quadratic += (static_cast<double>(n) * n + lambda) * an * an;
        quartic += an * w[static_cast<std::size_t>(n - 1)];
    }
    return 0.5 * quadratic - 0.25 * sgn * quartic - 0.25 * sgn * lambda * lambda;
}

std::vector<double> force(const StateVector& s, double lambda) {
    check_state(s);
    const int n_modes = s.modes();
    const double sgn = sign_of(lambda);
    const std::vector<double> w = cube_modes(s.positions);
    std::vector<double> f(static_cast<std::size_t>(n_modes));
    for (int n = 1; n <= n_modes; ++n) {
        f[static_cast<std::size_t>(n - 1)] =
            -(static_cast<double>(n) * n + lambda) * s.positions[static_cast<std::size_t>(n - 1)] +
            sgn * w[static_cast<std::size_t>(n - 1)];
    }
    return f;
}

double hamiltonian(const StateVector& s, double lambda) {
    check_state(s);
    double kinetic = 0.0;
    for (double v : s.velocities) kinetic += v * v;
    return 0.5 * kinetic + potential_energy(s, lambda);
}

Trajectory integrate(const StateVector& s0, double lambda, double tau_end,
                     double dt, int sample_every) {
    check_state(s0);
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (!(tau_end > s0.tau)) throw std::invalid_argument("tau_end must exceed the initial tau");
    if (sample_every < 1) throw std::invalid_argument("sample_every must be >= 1");
    if (!in_range(s0.positions) || !in_range(s0.velocities)) {
        throw DivergenceError("initial state outside the trusted range", s0.tau);
    }

    const long long steps = std::llround((tau_end - s0.tau) / dt);

    Trajectory traj;
    traj.dt = dt;
    StateVector s = s0;
    traj.samples.push_back(s);
    traj.hamiltonian_series.push_back(hamiltonian(s, lambda));

    const int n_modes = s.modes();
    for (long long step = 1; step <= steps; ++step) {
        for (int i = 0; i < n_modes; ++i) {
            s.positions[static_cast<std::size_t>(i)] +=
                0.5 * dt * s.velocities[static_cast<std::size_t>(i)];
        }
        const std::vector<double> f = force(s, lambda);
        for (int i = 0; i < n_modes; ++i) {
            s.velocities[static_cast<std::size_t>(i)] += dt * f[static_cast<std::size_t>(i)];
            s.positions[static_cast<std::size_t>(i)] +=
                0.5 * dt * s.velocities[static_cast<std::size_t>(i)];
        }
        s.tau = s0.tau + dt * static_cast<double>(step);
        if (!in_range(s.positions) || !in_range(s.velocities)) {
            throw DivergenceError("trajectory diverged (|A_n| > 1e8 or non-finite)", s.tau);
        }
        if (step % sample_every == 0 || step == steps) {
            traj.samples.push_back(s);
            traj.hamiltonian_series.push_back(hamiltonian(s, lambda));
        }
    }
    return traj;
}

StateVector cauchy_from_field(const GridFunction& u0, const GridFunction& v0,
                              int n_modes) {
    if (u0.points() != v0.points()) {
        throw std::invalid_argument("position and velocity grids must match");
    }
    StateVector s;
    s.positions = project(u0, n_modes);
    s.velocities = project(v0, n_modes);
    s.tau = 0.0;
    return s;
}

}  // namespace nlkg
