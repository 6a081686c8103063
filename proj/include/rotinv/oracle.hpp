#pragma once

#include "rotinv/cartesian.hpp"
#include "rotinv/invariant.hpp"

#include <array>
#include <complex>

namespace rotinv {

/// Ground-truth construction straight from the defining three-harmonic
/// contraction: sum over projections of 3-j * C^j_mu(r1) C^k_nu(r2) C^l_rho(r3)
/// with rho = -mu-nu. Exact; valid for any triangle-valid label order.
CartesianPoly definition_invariant(const InvariantSpec& spec);

// Jacobi polynomial P_n^(alpha,beta)(x) by the binomial-sum formula.
double jacobi(int n, int alpha, int beta, double x);

/// Shape of a three-vector configuration in lengths and angles: squared
/// lengths, pairwise angles, and the azimuth phi of r3 about r1 measured from
/// the r1-r2 plane (signed; fixes the sign of the pseudo-scalar).
struct SphericalConfig {
    double xi1 = 0, xi2 = 0, xi3 = 0;
    double theta12 = 0, theta13 = 0, theta23 = 0;
    double phi = 0;

    double zeta() const;
};

// Throws std::invalid_argument on a zero vector, DegenerateGeometry when r1,r2
// (or r1,r3) are collinear and phi is undefined.
SphericalConfig config_from_vectors(const std::array<double, 3>& r1, const std::array<double, 3>& r2,
                                    const std::array<double, 3>& r3, double tolerance = 1e-12);

// Floating-point evaluation through the angle-variable representation.
// Throws DegenerateGeometry when sin(theta12)*sin(theta13) < tolerance.
std::complex<double> appendix_eval(const InvariantSpec& spec, const SphericalConfig& cfg,
                                   double tolerance = 1e-12);

}  // namespace rotinv
