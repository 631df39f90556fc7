#ifndef NLKG_PARAMS_HPP
#define NLKG_PARAMS_HPP

namespace nlkg {

/// Physical parameters of the field theory: nonlinearity strength beta,
/// potential minimum phi0 and domain length ell, in natural units (c = 1).
struct PhysicalParams {
    double beta = 0.0;
    double phi0 = 0.0;
    double ell = 0.0;
};

/// The single free parameter of the dimensionless theory,
/// lambda = -beta * phi0^2 * ell^2 / pi^2, together with its sign.
struct DimensionlessParams {
    double lambda = 0.0;
    int sign_lambda = 0;
};

/// Maps physical parameters to the dimensionless parameter lambda.
/// Requires ell > 0 and beta != 0; throws std::domain_error otherwise.
DimensionlessParams nondimensionalize(const PhysicalParams& p);

/// Field-amplitude scale a = pi / sqrt(ell * |beta|), so that physical
/// Fourier amplitudes are B_n = a * A_n. Throws on beta = 0 or ell <= 0.
double scale_amplitude(const PhysicalParams& p);

/// Wraps a directly supplied lambda (lambda = 0 selects linear dynamics).
DimensionlessParams dimensionless_from_lambda(double lambda);

/// Inverts the nondimensionalization for given phi0 > 0 and ell > 0.
double beta_from_lambda(double lambda, double phi0, double ell);

}  // namespace nlkg

#endif
