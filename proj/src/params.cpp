#include "nlkg/params.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nlkg {

namespace {

void validate(const PhysicalParams& p) {
    if (!std::isfinite(p.beta) || !std::isfinite(p.phi0) || !std::isfinite(p.ell)) {
        throw std::domain_error("physical parameters must be finite");
    }
    if (p.ell <= 0.0) {
        throw std::domain_error("domain length ell must be positive");
    }
    if (p.beta == 0.0) {
        throw std::domain_error("beta = 0 admits no amplitude scale; supply lambda directly");
    }
    if (p.phi0 < 0.0) {
        throw std::domain_error("phi0 must be nonnegative");
    }
}

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

DimensionlessParams nondimensionalize(const PhysicalParams& p) {
    validate(p);
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double lambda = -p.beta * p.phi0 * p.phi0 * p.ell * p.ell / pi2;
    return {lambda, sign_of(lambda)};
}

double scale_amplitude(const PhysicalParams& p) {
    validate(p);
    return std::numbers::pi / std::sqrt(p.ell * std::abs(p.beta));
}

DimensionlessParams dimensionless_from_lambda(double lambda) {
    if (!std::isfinite(lambda)) {
        throw std::domain_error("lambda must be finite");
    }
    return {lambda, sign_of(lambda)};
}

double beta_from_lambda(double lambda, double phi0, double ell) {
    if (phi0 <= 0.0 || ell <= 0.0) {
        throw std::domain_error("beta reconstruction requires phi0 > 0 and ell > 0");
    }
    const double pi2 = std::numbers::pi * std::numbers::pi;
    return -lambda * pi2 / (phi0 * phi0 * ell * ell);
}

}  // namespace nlkg
