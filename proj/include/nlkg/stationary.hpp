#ifndef NLKG_STATIONARY_HPP
#define NLKG_STATIONARY_HPP

#include <string>
#include <vector>

namespace nlkg {

enum class BranchKind { sn, cn };

std::string to_string(BranchKind kind);

/// One exact stationary solution of the dimensionless equation
/// u'' - lambda u + sgn(lambda) u^3 = 0 with u(0) = u(pi) = 0:
///   sn kind (lambda < 0):  u = s * sqrt(2) k1 sn(k2 xi, k4)
///   cn kind (lambda > 0):  u = s * sqrt(2) q1 cn(q2 xi + K(q4), q4)
/// The orientation s = +-1 makes the first nonzero Fourier coefficient
/// positive; branch_n is the integer of the matching condition
/// wavenumber = 2 n K(modulus) / pi.
struct StationaryBranch {
    double lambda = 0.0;
    int branch_n = 0;
    BranchKind kind = BranchKind::sn;
    double modulus = 0.0;     // k4 or q4
    double wavenumber = 0.0;  // k2 or q2
    double amplitude = 0.0;   // k1 or q1, kept positive
    double phase = 0.0;       // k3 = 0 or q3 = K(q4)
    double orientation = 1.0;

    double value(double xi) const;
    double derivative(double xi) const;
};

/// Number of distinct nontrivial stationary solutions. Finite for
/// lambda < 0 (branch n exists iff n^2 < |lambda| strictly), zero for
/// lambda = 0, unbounded for lambda > 0.
struct BranchCount {
    bool unbounded = false;
    int count = 0;
};

BranchCount count_branches(double lambda);

/// Solves the matching condition for the elliptic modulus of branch n:
///   sqrt(|lambda|/(1+k^2))   = 2 n K(k)/pi   (lambda < 0, k in (0,1))
///   sqrt(|lambda|/(2q^2-1))  = 2 n K(q)/pi   (lambda > 0, q in (1/sqrt2,1))
/// Throws std::domain_error when the branch does not exist.
double solve_modulus(double lambda, int branch_n);

StationaryBranch build_branch(double lambda, int branch_n);

/// Fourier-sine coefficients of the branch solution, modes 1..n_max.
std::vector<double> branch_coefficients(const StationaryBranch& b, int n_max);

/// Dimensionless energy ell^2 H / (pi^2 a^2), by quadrature of
/// (1/2pi) int u'^2 - (sgn(lambda)/4pi) int (u^2 - |lambda|)^2.
double branch_energy(const StationaryBranch& b);

struct StationarySolution {
    StationaryBranch branch;
    std::vector<double> coefficients;
    double energy = 0.0;
};

/// Up to max_count branches sorted by ascending |energy| (ties by
/// branch_n). Empty when no branches exist.
std::vector<StationarySolution> enumerate_solutions(double lambda,
                                                    int max_count,
                                                    int n_max);

}  // namespace nlkg

#endif
