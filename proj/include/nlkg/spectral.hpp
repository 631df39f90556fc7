#ifndef NLKG_SPECTRAL_HPP
#define NLKG_SPECTRAL_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace nlkg {

/// A real function sampled on a uniform grid of the dimensionless
/// coordinate xi in [0, pi]. Values hold the dimensionless field
/// sqrt(ell) * phi.
struct GridFunction {
    std::vector<double> xi;
    std::vector<double> values;

    std::size_t points() const { return xi.size(); }
    std::size_t panels() const { return xi.size() - 1; }
};

/// Uniform nodes on [0, pi], endpoints included.
std::vector<double> uniform_grid(std::size_t points);

/// Dimensionless Dirichlet mode sqrt(2) * sin(n * xi), n >= 1.
/// xi outside [0, pi] is rejected with std::domain_error.
double mode_value(int n, double xi);

/// Closed form of the quartic coupling tensor
///   D_nmpq = c(|n-m|) (d_{|n-m|,|p-q|} - d_{|n-m|,p+q})
///          - c(n+m)  (d_{n+m,|p-q|}  - d_{n+m,p+q}),
/// with c(0) = 1 and c(j) = 1/2 for j >= 1. Totally symmetric; values are
/// half-integers. Indices must be >= 1.
double coupling(int n, int m, int p, int q);

/// Dense cache of coupling values for all indices <= max_index. The closed
/// form remains the source of truth; this only trades memory for lookups.
class CouplingTable {
  public:
    explicit CouplingTable(int max_index);

    double operator()(int n, int m, int p, int q) const;
    int max_index() const { return max_index_; }

  private:
    int max_index_;
    std::vector<double> values_;
};

/// Exact expansion of the pointwise cube of the synthesized field:
/// given coefficients a_1..a_N of u = sum a_n sqrt(2) sin(n xi), returns
/// w_1..w_{3N} with u^3 = sum w_q sqrt(2) sin(q xi). Equivalently,
/// w_q = sum_{nmp} D_nmpq a_n a_m a_p restricted to indices <= N.
std::vector<double> cube_modes(std::span<const double> a);

/// Fourier-sine projection a_n = (1/pi) * integral of u * sqrt(2) sin(n xi),
/// n = 1..n_modes, by composite Simpson. Requires panels >= 8 * n_modes.
std::vector<double> project(const GridFunction& u, int n_modes);

/// Evaluates u(xi) = sum a_n sqrt(2) sin(n xi) on a uniform grid.
/// Endpoint values are exactly zero (Dirichlet).
GridFunction synthesize(std::span<const double> a, std::size_t points);

}  // namespace nlkg

#endif
