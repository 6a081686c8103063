#pragma once

#include "rotinv/surd.hpp"

#include <array>
#include <map>
#include <optional>

namespace rotinv {

// Exponents of (x1,y1,z1, x2,y2,z2, x3,y3,z3).
using Mono9 = std::array<int, 9>;

// Total degree of `m` in the components of vector `slot` (1..3).
int vector_degree(const Mono9& m, int slot);

/// Sparse polynomial in the nine Cartesian components with exact complex-surd
/// coefficients. Canonical map representation: no zero coefficients stored.
class CartesianPoly {
  public:
    CartesianPoly() = default;

    static CartesianPoly constant(const ComplexSurd& c);
    static CartesianPoly monomial(const Mono9& m, const ComplexSurd& c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Mono9, ComplexSurd>& terms() const { return terms_; }

    void add_term(const Mono9& m, const ComplexSurd& c);

    CartesianPoly& operator+=(const CartesianPoly& o);
    CartesianPoly& operator-=(const CartesianPoly& o);
    friend CartesianPoly operator+(CartesianPoly a, const CartesianPoly& b) { return a += b; }
    friend CartesianPoly operator-(CartesianPoly a, const CartesianPoly& b) { return a -= b; }
    friend CartesianPoly operator*(const CartesianPoly& a, const CartesianPoly& b);
    friend bool operator==(const CartesianPoly& a, const CartesianPoly& b) = default;

    CartesianPoly scaled(const ComplexSurd& c) const;
    CartesianPoly conjugated() const;

    // Per-vector degrees if homogeneous in each vector, nullopt otherwise.
    // The zero polynomial reports {0,0,0}.
    std::optional<std::array<int, 3>> homogeneous_degrees() const;

    ComplexSurd evaluate(const std::array<Rational, 9>& point) const;

  private:
    std::map<Mono9, ComplexSurd> terms_;
};

// d2/dx^2 + d2/dy^2 + d2/dz^2 in the components of vector `slot` (1..3), exact.
CartesianPoly laplacian(const CartesianPoly& p, int slot);

}  // namespace rotinv
