#include "rotinv/cartesian.hpp"

#include <stdexcept>

namespace rotinv {

int vector_degree(const Mono9& m, int slot) {
    int base = 3 * (slot - 1);
    return m[base] + m[base + 1] + m[base + 2];
}

CartesianPoly CartesianPoly::constant(const ComplexSurd& c) {
    return monomial(Mono9{}, c);
}

CartesianPoly CartesianPoly::monomial(const Mono9& m, const ComplexSurd& c) {
    CartesianPoly p;
    p.add_term(m, c);
    return p;
}

void CartesianPoly::add_term(const Mono9& m, const ComplexSurd& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CartesianPoly& CartesianPoly::operator+=(const CartesianPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

CartesianPoly& CartesianPoly::operator-=(const CartesianPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

CartesianPoly operator*(const CartesianPoly& a, const CartesianPoly& b) {
    CartesianPoly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Mono9 m;
            for (int i = 0; i < 9; ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

CartesianPoly CartesianPoly::scaled(const ComplexSurd& c) const {
    CartesianPoly out;
    if (c.is_zero()) return out;
    for (const auto& [m, coef] : terms_) out.add_term(m, coef * c);
    return out;
}

CartesianPoly CartesianPoly::conjugated() const {
    CartesianPoly out;
    for (const auto& [m, coef] : terms_) out.terms_.emplace(m, coef.conjugate());
    return out;
}

std::optional<std::array<int, 3>> CartesianPoly::homogeneous_degrees() const {
    std::array<int, 3> deg{0, 0, 0};
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::array<int, 3> d{vector_degree(m, 1), vector_degree(m, 2), vector_degree(m, 3)};
        if (first) {
            deg = d;
            first = false;
        } else if (d != deg) {
            return std::nullopt;
        }
    }
    return deg;
}

ComplexSurd CartesianPoly::evaluate(const std::array<Rational, 9>& point) const {
    ComplexSurd total;
    for (const auto& [m, c] : terms_) {
        Rational v = 1;
        for (int i = 0; i < 9; ++i)
            if (m[i]) v *= rational_pow(point[i], m[i]);
        ComplexSurd t = c;
        t.re *= v;
        t.im *= v;
        total += t;
    }
    return total;
}

CartesianPoly laplacian(const CartesianPoly& p, int slot) {
    if (slot < 1 || slot > 3) throw std::invalid_argument("laplacian: slot must be 1..3");
    CartesianPoly out;
    int base = 3 * (slot - 1);
    for (const auto& [m, c] : p.terms()) {
        for (int i = base; i < base + 3; ++i) {
            int e = m[i];
            if (e < 2) continue;
            Mono9 d = m;
            d[i] = e - 2;
            ComplexSurd coef = c;
            Rational factor(static_cast<long>(e) * (e - 1));
            coef.re *= factor;
            coef.im *= factor;
            out.add_term(d, coef);
        }
    }
    return out;
}

}  // namespace rotinv
