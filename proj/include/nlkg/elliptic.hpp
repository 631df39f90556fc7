#ifndef NLKG_ELLIPTIC_HPP
#define NLKG_ELLIPTIC_HPP

namespace nlkg {

// Jacobi elliptic kernel. Real arguments only; the modulus must satisfy
// 0 <= k < 1 - 1e-12 (values closer to 1 are rejected rather than handled
// by logarithmic asymptotics). Accuracy target is 1e-12 relative.

/// Largest accepted modulus.
inline constexpr double max_elliptic_modulus = 1.0 - 1e-12;

/// Modulus k together with the complementary modulus k' = sqrt(1 - k^2).
struct EllipticModulus {
    double k = 0.0;
    double k_prime = 1.0;

    /// Validates the range and computes k' without cancellation.
    static EllipticModulus from_k(double k);
};

/// Complete elliptic integral of the first kind,
/// K(k) = integral of dt / sqrt((1-t^2)(1-k^2 t^2)) over [0, 1],
/// evaluated by the arithmetic-geometric mean.
double complete_elliptic_k(double k);

struct JacobiValues {
    double sn;
    double cn;
    double dn;
};

/// sn, cn, dn at argument u, computed with the AGM phase recursion
/// (descending Landen ladder).
JacobiValues jacobi_elliptic(double u, double k);

double jacobi_sn(double u, double k);
double jacobi_cn(double u, double k);
double jacobi_dn(double u, double k);

}  // namespace nlkg

#endif
