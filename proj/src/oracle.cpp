#include "rotinv/oracle.hpp"

#include "rotinv/errors.hpp"
#include "rotinv/solid.hpp"
#include "rotinv/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rotinv {

CartesianPoly definition_invariant(const InvariantSpec& spec) {
    CartesianPoly total;
    for (long mu = -spec.j; mu <= spec.j; ++mu) {
        for (long nu = -spec.k; nu <= spec.k; ++nu) {
            long rho = -mu - nu;
            if (std::abs(rho) > spec.l) continue;
            SurdSum w = wigner3j(spec.j, spec.k, spec.l, mu, nu, rho);
            if (w.is_zero()) continue;
            CartesianPoly product = racah_solid_harmonic(static_cast<int>(spec.j), static_cast<int>(mu), 1) *
                                    racah_solid_harmonic(static_cast<int>(spec.k), static_cast<int>(nu), 2);
            product = product * racah_solid_harmonic(static_cast<int>(spec.l), static_cast<int>(rho), 3);
            total += product.scaled(ComplexSurd(w));
        }
    }
    return total;
}

double jacobi(int n, int alpha, int beta, double x) {
    if (n < 0) throw std::invalid_argument("jacobi: negative degree");
    // The binomial sum cancels badly in floating point; a double is a dyadic
    // rational, so run the sum exactly and round once at the end.
    Rational xr(x);
    Rational sum = 0;
    for (int m = 0; m <= n; ++m) {
        Rational term(binomial(n + alpha, m) * binomial(n + beta, n - m));
        term *= rational_pow(xr - 1, n - m) * rational_pow(xr + 1, m);
        sum += term;
    }
    return (sum / rational_pow(2, n)).convert_to<double>();
}

double SphericalConfig::zeta() const {
    return std::sqrt(xi1 * xi2 * xi3) * std::sin(theta12) * std::sin(theta13) * std::sin(phi);
}

namespace {

double dot(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double triple(const std::array<double, 3>& a, const std::array<double, 3>& b,
              const std::array<double, 3>& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

double clamp_cos(double c) {
    return std::clamp(c, -1.0, 1.0);
}

}  // namespace

SphericalConfig config_from_vectors(const std::array<double, 3>& r1, const std::array<double, 3>& r2,
                                    const std::array<double, 3>& r3, double tolerance) {
    SphericalConfig cfg;
    cfg.xi1 = dot(r1, r1);
    cfg.xi2 = dot(r2, r2);
    cfg.xi3 = dot(r3, r3);
    if (cfg.xi1 == 0 || cfg.xi2 == 0 || cfg.xi3 == 0)
        throw std::invalid_argument("config_from_vectors: zero-length vector");

    double c12 = clamp_cos(dot(r1, r2) / std::sqrt(cfg.xi1 * cfg.xi2));
    double c13 = clamp_cos(dot(r1, r3) / std::sqrt(cfg.xi1 * cfg.xi3));
    double c23 = clamp_cos(dot(r2, r3) / std::sqrt(cfg.xi2 * cfg.xi3));
    cfg.theta12 = std::acos(c12);
    cfg.theta13 = std::acos(c13);
    cfg.theta23 = std::acos(c23);

    double s12 = std::sin(cfg.theta12);
    double s13 = std::sin(cfg.theta13);
    if (s12 < tolerance || s13 < tolerance)
        throw DegenerateGeometry("config_from_vectors: r1 collinear with r2 or r3, phi undefined");

    double cphi = clamp_cos((c23 - c12 * c13) / (s12 * s13));
    // sin(phi) signed so the angle form reproduces the signed triple product.
    double sphi = triple(r1, r2, r3) / (std::sqrt(cfg.xi1 * cfg.xi2 * cfg.xi3) * s12 * s13);
    cfg.phi = std::atan2(sphi, cphi);
    return cfg;
}

std::complex<double> appendix_eval(const InvariantSpec& spec, const SphericalConfig& cfg,
                                   double tolerance) {
    const long j = spec.j, k = spec.k, l = spec.l;
    const double c12 = std::cos(cfg.theta12), c13 = std::cos(cfg.theta13), c23 = std::cos(cfg.theta23);
    const double s12 = std::sin(cfg.theta12), s13 = std::sin(cfg.theta13);
    if (s12 * s13 < tolerance)
        throw DegenerateGeometry("appendix_eval: near-collinear configuration, phi ill-conditioned");

    const bool even = !spec.odd();
    const double cross = c23 - c12 * c13;          // sin12 sin13 cos(phi)
    const double sin_sq = (1 - c12 * c12) * (1 - c13 * c13);

    double sum = 0.0;
    for (long nu = -k; nu <= k; ++nu) {
        if (std::abs(nu) > l) continue;
        SurdSum w3 = wigner3j(j, k, l, 0, nu, -nu);
        if (w3.is_zero()) continue;
        long anu = std::abs(nu);
        double coef = w3.to_double() *
                      std::sqrt(Rational(factorial(k - nu) * factorial(k + nu) * factorial(l - nu) *
                                         factorial(l + nu))
                                    .convert_to<double>()) /
                      std::pow(4.0, static_cast<double>(anu));
        if (nu % 2) coef = -coef;
        coef *= jacobi(static_cast<int>(k - anu), static_cast<int>(anu), static_cast<int>(anu), c12) *
                jacobi(static_cast<int>(l - anu), static_cast<int>(anu), static_cast<int>(anu), c13);

        double inner = 0.0;
        if (even) {
            for (long r = 0; 2 * r <= anu; ++r)
                for (long s = 0; s <= r; ++s) {
                    double t = binomial(anu, 2 * r).convert_to<double>() *
                               binomial(r, s).convert_to<double>() *
                               std::pow(cross, static_cast<double>(anu - 2 * r + 2 * s)) *
                               std::pow(sin_sq, static_cast<double>(r - s));
                    inner += ((r + s) % 2) ? -t : t;
                }
        } else {
            if (nu == 0) continue;  // sign(0) = 0: no sine component
            for (long r = 0; 2 * r + 1 <= anu; ++r)
                for (long s = 0; s <= r; ++s) {
                    double t = binomial(anu, 2 * r + 1).convert_to<double>() *
                               binomial(r, s).convert_to<double>() *
                               std::pow(cross, static_cast<double>(anu - 1 - 2 * r + 2 * s)) *
                               std::pow(sin_sq, static_cast<double>(r - s));
                    inner += ((r + s) % 2) ? -t : t;
                }
            if (nu < 0) inner = -inner;
        }
        sum += coef * inner;
    }

    double kl = (factorial(k) * factorial(l)).convert_to<double>();
    if (even) {
        double scale = std::sqrt(std::pow(cfg.xi1, static_cast<double>(j)) *
                                 std::pow(cfg.xi2, static_cast<double>(k)) *
                                 std::pow(cfg.xi3, static_cast<double>(l)));
        return {scale * sum / kl, 0.0};
    }
    double scale = std::sqrt(std::pow(cfg.xi1, static_cast<double>(j - 1)) *
                             std::pow(cfg.xi2, static_cast<double>(k - 1)) *
                             std::pow(cfg.xi3, static_cast<double>(l - 1)));
    return {0.0, -cfg.zeta() * scale * sum / kl};
}

}  // namespace rotinv
