#include "nlkg/critical.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include "nlkg/dynamics.hpp"
#include "nlkg/spectral.hpp"
#include "nlkg/stationary.hpp"

namespace nlkg {

namespace {

constexpr double gradient_tolerance = 1e-10;
constexpr double newton_target = 1e-12;
constexpr double duplicate_distance = 1e-6;
constexpr double eigenvalue_tolerance = 1e-8;
constexpr double sign_threshold = 1e-8;

double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// splitmix64; keeps multistart draws identical across platforms.
class DeterministicRng {
  public:
    explicit DeterministicRng(std::uint64_t seed) : state_(seed) {}

    double uniform(double lo, double hi) {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        z = z ^ (z >> 31);
        return lo + (hi - lo) * (static_cast<double>(z >> 11) * 0x1.0p-53);
    }

  private:
    std::uint64_t state_;
};

Eigen::VectorXd gradient(const Eigen::VectorXd& x, double lambda) {
    StateVector s = make_state(std::vector<double>(x.data(), x.data() + x.size()));
    const std::vector<double> f = force(s, lambda);
    Eigen::VectorXd g(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) g[i] = -f[static_cast<std::size_t>(i)];
    return g;
}

std::optional<Eigen::VectorXd> newton_solve(Eigen::VectorXd x, double lambda,
                                            int max_iterations) {
    for (int it = 0; it < max_iterations; ++it) {
        Eigen::VectorXd g = gradient(x, lambda);
        if (!g.allFinite()) return std::nullopt;
        if (g.lpNorm<Eigen::Infinity>() < newton_target) break;

        const Eigen::MatrixXd h =
            hessian(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())), lambda);
        Eigen::VectorXd d;
        Eigen::LDLT<Eigen::MatrixXd> ldlt(h);
        bool use_newton = ldlt.info() == Eigen::Success;
        if (use_newton) {
            const Eigen::VectorXd diag = ldlt.vectorD().cwiseAbs();
            const double dmax = diag.maxCoeff();
            const double dmin = diag.minCoeff();
            if (!(dmin > 0.0) || dmax / dmin > 1e12) use_newton = false;  // near-singular
        }
        if (use_newton) {
            d = ldlt.solve(-g);
            if (!d.allFinite()) use_newton = false;
        }
        if (!use_newton) d = -g;

        const double phi0 = g.squaredNorm();
        double t = 1.0;
        Eigen::VectorXd trial;
        for (int ls = 0; ls < 60; ++ls) {
            trial = x + t * d;
            const Eigen::VectorXd gt = gradient(trial, lambda);
            if (gt.allFinite() && gt.squaredNorm() < phi0) break;
            t *= 0.5;
        }
        x = x + t * d;
    }
    if (gradient(x, lambda).lpNorm<Eigen::Infinity>() > gradient_tolerance) return std::nullopt;
    return x;
}

void normalize_sign(std::vector<double>& a) {
    for (double x : a) {
        if (std::abs(x) > sign_threshold) {
            if (x < 0.0) {
                for (double& y : a) y = -y;
            }
            return;
        }
    }
}

double distance(const std::vector<double>& a, const std::vector<double>& b) {
    double d2 = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        d2 += d * d;
    }
    return std::sqrt(d2);
}

PointKind classify_eigenvalues(const std::vector<double>& eigs) {
    bool any_small = false, any_pos = false, any_neg = false;
    for (double e : eigs) {
        if (std::abs(e) <= eigenvalue_tolerance) {
            any_small = true;
        } else if (e > 0.0) {
            any_pos = true;
        } else {
            any_neg = true;
        }
    }
    if (any_small) return PointKind::degenerate;
    if (any_pos && any_neg) return PointKind::saddle;
    return any_pos ? PointKind::minimum : PointKind::maximum;
}

}  // namespace

std::string to_string(PointKind kind) {
    switch (kind) {
        case PointKind::minimum: return "minimum";
        case PointKind::maximum: return "maximum";
        case PointKind::saddle: return "saddle";
        case PointKind::degenerate: return "degenerate";
    }
    return "unknown";
}

Eigen::MatrixXd hessian(std::span<const double> a, double lambda) {
    const int n_modes = static_cast<int>(a.size());
    const double sgn = sign_of(lambda);
    Eigen::MatrixXd h(n_modes, n_modes);
    for (int n = 1; n <= n_modes; ++n) {
        for (int k = n; k <= n_modes; ++k) {
            // For fixed (n,k,p), the coupling vanishes except at a handful
            // of q values given by the delta constraints.
            const int d = std::abs(n - k);
            const int sum = n + k;
            double pair_sum = 0.0;
            for (int p = 1; p <= n_modes; ++p) {
                const double ap = a[static_cast<std::size_t>(p - 1)];
                if (ap == 0.0) continue;
                std::array<int, 6> candidates = {p + d, p - d, d - p, p + sum, p - sum, sum - p};
                std::sort(candidates.begin(), candidates.end());
                int prev = 0;
                for (int q : candidates) {
                    if (q < 1 || q > n_modes || q == prev) continue;
                    prev = q;
                    pair_sum += coupling(n, k, p, q) * ap * a[static_cast<std::size_t>(q - 1)];
                }
            }
            double value = -3.0 * sgn * pair_sum;
            if (n == k) value += static_cast<double>(n) * n + lambda;
            h(n - 1, k - 1) = value;
            h(k - 1, n - 1) = value;
        }
    }
    return h;
}

std::vector<double> single_mode_seed(int n, double lambda, int n_modes) {
    if (n < 1 || n > n_modes) throw std::invalid_argument("mode index out of range");
    std::vector<double> a(static_cast<std::size_t>(n_modes), 0.0);
    const double stiffness = sign_of(lambda) * (static_cast<double>(n) * n + lambda);
    if (stiffness > 0.0) {
        a[static_cast<std::size_t>(n - 1)] = std::sqrt(2.0 / 3.0 * stiffness);
    }
    return a;
}

CriticalPoint classify_point(std::vector<double> coordinates, double lambda) {
    CriticalPoint p;
    const Eigen::MatrixXd h =
        hessian(std::span<const double>(coordinates.data(), coordinates.size()), lambda);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    p.hessian_eigenvalues.assign(solver.eigenvalues().data(),
                                 solver.eigenvalues().data() + solver.eigenvalues().size());
    p.kind = classify_eigenvalues(p.hessian_eigenvalues);
    p.potential = potential_energy(make_state(coordinates), lambda);
    p.coordinates = std::move(coordinates);
    return p;
}

std::vector<CriticalPoint> find_critical_points(int n_modes, double lambda,
                                                int max_points,
                                                const SearchOptions& options) {
    if (n_modes < 1) throw std::invalid_argument("n_modes must be >= 1");
    if (max_points < 1) throw std::invalid_argument("max_points must be >= 1");

    std::vector<std::vector<double>> seeds;
    for (int n = 1; n <= n_modes; ++n) {
        std::vector<double> s = single_mode_seed(n, lambda, n_modes);
        bool nonzero = false;
        for (double x : s) nonzero = nonzero || x != 0.0;
        if (nonzero) seeds.push_back(std::move(s));
    }
    if (lambda != 0.0) {
        const BranchCount bc = count_branches(lambda);
        const int n_exact = bc.unbounded ? std::min(n_modes, max_points + 4) : bc.count;
        for (int n = 1; n <= n_exact; ++n) {
            seeds.push_back(branch_coefficients(build_branch(lambda, n), n_modes));
        }
    }
    DeterministicRng rng(options.seed);
    for (int draw = 0; draw < options.random_starts; ++draw) {
        std::vector<double> s(static_cast<std::size_t>(n_modes));
        for (double& x : s) x = rng.uniform(-options.box, options.box);
        seeds.push_back(std::move(s));
    }

    std::vector<std::vector<double>> points;
    for (const auto& seed : seeds) {
        Eigen::VectorXd x0 = Eigen::Map<const Eigen::VectorXd>(seed.data(), seed.size());
        const auto solved = newton_solve(x0, lambda, options.max_newton_iterations);
        if (!solved) continue;
        std::vector<double> a(solved->data(), solved->data() + solved->size());
        normalize_sign(a);
        double norm = 0.0;
        for (double x : a) norm = std::max(norm, std::abs(x));
        if (norm < duplicate_distance) continue;  // trivial point, reported separately
        bool duplicate = false;
        for (const auto& p : points) duplicate = duplicate || distance(a, p) < duplicate_distance;
        if (!duplicate) points.push_back(std::move(a));
    }

    std::vector<CriticalPoint> out;
    out.reserve(points.size());
    for (auto& a : points) out.push_back(classify_point(std::move(a), lambda));
    std::sort(out.begin(), out.end(), [](const CriticalPoint& x, const CriticalPoint& y) {
        const double ax = std::abs(x.potential), ay = std::abs(y.potential);
        if (ax != ay) return ax < ay;
        return x.coordinates < y.coordinates;
    });
    if (static_cast<int>(out.size()) > max_points) out.resize(static_cast<std::size_t>(max_points));
    for (std::size_t i = 0; i < out.size(); ++i) out[i].label = static_cast<int>(i) + 1;
    return out;
}

std::vector<std::vector<double>> landscape_grid(double lambda,
                                                std::pair<double, double> a1_range,
                                                std::pair<double, double> a3_range,
                                                int resolution) {
    if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");
    std::vector<std::vector<double>> grid(static_cast<std::size_t>(resolution));
    const double h1 = (a1_range.second - a1_range.first) / (resolution - 1);
    const double h3 = (a3_range.second - a3_range.first) / (resolution - 1);
    for (int i = 0; i < resolution; ++i) {
        auto& row = grid[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(resolution));
        const double a1 = a1_range.first + h1 * i;
        for (int j = 0; j < resolution; ++j) {
            const double a3 = a3_range.first + h3 * j;
            row[static_cast<std::size_t>(j)] =
                potential_energy(make_state({a1, 0.0, a3}), lambda);
        }
    }
    return grid;
}

}  // namespace nlkg
