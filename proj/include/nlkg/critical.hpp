#ifndef NLKG_CRITICAL_HPP
#define NLKG_CRITICAL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace nlkg {

enum class PointKind { minimum, maximum, saddle, degenerate };

std::string to_string(PointKind kind);

struct CriticalPoint {
    std::vector<double> coordinates;
    double potential = 0.0;
    PointKind kind = PointKind::degenerate;
    std::vector<double> hessian_eigenvalues;  // ascending
    int label = 0;                            // 1-based energy-order index
};

/// Analytic Hessian of the truncated potential,
/// H_nk = (n^2+lambda) d_nk - 3 sgn(lambda) sum_{pq} D_nkpq A_p A_q.
Eigen::MatrixXd hessian(std::span<const double> a, double lambda);

/// Single-mode stationary seed: A_n = sqrt(2/3 * sgn(lambda) * (n^2+lambda))
/// when the single-mode condition (n^2+lambda) A = sgn(lambda) 3/2 A^3 has a
/// real nonzero root, the zero vector otherwise.
std::vector<double> single_mode_seed(int n, double lambda, int n_modes);

struct SearchOptions {
    int random_starts = 200;
    std::uint64_t seed = 12345;
    double box = 3.0;  // multistart draws are uniform in [-box, box]^N
    int max_newton_iterations = 120;
};

/// Multistart Newton search for critical points of U^(N). Points are
/// sign-normalized (first nonzero coordinate positive), deduplicated,
/// sorted by ascending |U| and labeled; the trivial point is excluded.
std::vector<CriticalPoint> find_critical_points(int n_modes, double lambda,
                                                int max_points,
                                                const SearchOptions& options = {});

/// Builds a classified CriticalPoint record from given coordinates
/// (used for the separately reported trivial point).
CriticalPoint classify_point(std::vector<double> coordinates, double lambda);

/// U^(3) sampled over an (A_1, A_3) rectangle with A_2 = 0; entry [i][j]
/// corresponds to (a1_range first..second by row i, a3_range by column j).
std::vector<std::vector<double>> landscape_grid(double lambda,
                                                std::pair<double, double> a1_range,
                                                std::pair<double, double> a3_range,
                                                int resolution);

}  // namespace nlkg

#endif
