#pragma once

#include "rotinv/cartesian.hpp"
#include "rotinv/coeffs.hpp"
#include "rotinv/surd.hpp"

#include <array>
#include <complex>
#include <map>
#include <string>

namespace rotinv {

/// Validated invariant label (j,k,l); triangle rule holds. For canonical order
/// j <= k <= l the underlying coefficient query is (j, k, n) for even parity
/// and (j-1, k-1, n) for odd parity.
struct InvariantSpec {
    long j = 0, k = 0, l = 0;

    InvariantSpec() = default;
    InvariantSpec(long j_, long k_, long l_);  // throws on triangle violation

    bool odd() const { return (j + k + l) % 2 != 0; }
    bool canonical() const { return j <= k && k <= l; }
    long canonical_n() const;         // requires canonical()
    CoeffQuery coeff_query() const;   // requires canonical()
    std::string label() const;        // "I(j,k,l)"

    friend auto operator<=>(const InvariantSpec&, const InvariantSpec&) = default;
};

// Exponents of (xi1, xi2, xi3, eta1, eta2, eta3).
using ScalarMonomial = std::array<int, 6>;
using ScalarPoly = std::map<ScalarMonomial, Rational>;

struct Canonicalization {
    InvariantSpec spec;               // sorted labels
    std::array<int, 3> permutation;   // requested slot i carries canonical slot permutation[i-1]
    int sign = 1;                     // (-1)^(j+k+l) per transposition; +1 for even parity
};

Canonicalization canonicalize(long j, long k, long l);

/// Invariant assembled as prefactor * (i zeta)^odd * polynomial in the six
/// scalar invariants, with rational polynomial coefficients normalized so they
/// sum to the coefficient of the all-eta monomial pattern's seed (sum = 1).
class InvariantPoly {
  public:
    InvariantSpec spec;
    SurdSum prefactor;   // single surd term
    bool imaginary = false;
    int zeta_power = 0;  // 0 or 1
    ScalarPoly poly;

    // Full coefficient of each scalar monomial: prefactor * i^imaginary * rational.
    std::map<ScalarMonomial, ComplexSurd> coefficient_map() const;

    friend bool operator==(const InvariantPoly&, const InvariantPoly&) = default;
};

InvariantPoly assemble_even(const CoeffQuery& q, const CoeffTable& table);
InvariantPoly assemble_odd(const CoeffQuery& q, const CoeffTable& table);

// Any triangle-valid order: canonical assembly from the closed-form table,
// then slot relabeling.
InvariantPoly assemble(long j, long k, long l);

// Exact expansion to the nine Cartesian components (zeta expanded as the
// signed 3x3 determinant).
CartesianPoly to_cartesian(const InvariantPoly& inv);

// zeta^2 - (xi1 xi2 xi3 - xi1 eta1^2 - xi2 eta2^2 - xi3 eta3^2 + 2 eta1 eta2 eta3)
// expanded to Cartesian form; identically zero.
CartesianPoly zeta_squared_identity_residual();

using Vec3Rat = std::array<Rational, 3>;

// Exact evaluation through scalar products (no Cartesian expansion).
ComplexSurd evaluate(const InvariantPoly& inv, const Vec3Rat& r1, const Vec3Rat& r2, const Vec3Rat& r3);

std::complex<double> evaluate_double(const InvariantPoly& inv, const std::array<double, 3>& r1,
                                     const std::array<double, 3>& r2, const std::array<double, 3>& r3);

enum class RenderFormat { text, latex, json };
RenderFormat parse_render_format(const std::string& name);  // throws on unknown format

// Deterministic rendering; `json` carries the document schema
// {"j","k","l","parity","prefactor":{"coef","radicand"},"imaginary","zeta","terms":[...]}.
std::string render(const InvariantPoly& inv, RenderFormat format);

}  // namespace rotinv
