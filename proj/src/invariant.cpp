#include "rotinv/invariant.hpp"

#include "rotinv/wigner.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rotinv {

InvariantSpec::InvariantSpec(long j_, long k_, long l_) : j(j_), k(k_), l(l_) {
    if (j < 0 || k < 0 || l < 0 || !triangle_ok(j, k, l))
        throw std::invalid_argument("InvariantSpec: triangle rule violated for (" + std::to_string(j_) + "," +
                                    std::to_string(k_) + "," + std::to_string(l_) + ")");
}

long InvariantSpec::canonical_n() const {
    if (!canonical()) throw std::logic_error("InvariantSpec::canonical_n: labels not sorted");
    return odd() ? (j + k - l - 1) / 2 : (j + k - l) / 2;
}

CoeffQuery InvariantSpec::coeff_query() const {
    long n = canonical_n();
    return odd() ? CoeffQuery{j - 1, k - 1, n} : CoeffQuery{j, k, n};
}

std::string InvariantSpec::label() const {
    return "I(" + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) + ")";
}

Canonicalization canonicalize(long j, long k, long l) {
    InvariantSpec requested(j, k, l);
    std::array<long, 3> labels{j, k, l};
    std::array<int, 3> perm{1, 2, 3};
    int swaps = 0;
    // Stable three-element sort by explicit transpositions.
    auto swap_slots = [&](int a, int b) {
        std::swap(labels[a], labels[b]);
        std::swap(perm[a], perm[b]);
        ++swaps;
    };
    if (labels[0] > labels[1]) swap_slots(0, 1);
    if (labels[1] > labels[2]) swap_slots(1, 2);
    if (labels[0] > labels[1]) swap_slots(0, 1);

    Canonicalization out;
    out.spec = InvariantSpec(labels[0], labels[1], labels[2]);
    // perm now maps canonical slot -> requested slot; invert for the contract
    // "requested slot i carries canonical slot permutation[i-1]".
    for (int i = 0; i < 3; ++i) out.permutation[perm[i] - 1] = i + 1;
    out.sign = requested.odd() && (swaps % 2) ? -1 : 1;
    return out;
}

namespace {

ScalarMonomial scalar_monomial(const CoeffQuery& q, const CoeffIndex& idx) {
    const auto [a, b, c] = idx;
    return ScalarMonomial{static_cast<int>(a),
                          static_cast<int>(c),
                          static_cast<int>(a + b + c - q.n),
                          static_cast<int>(q.k - 2 * c - b),
                          static_cast<int>(q.j - 2 * a - b),
                          static_cast<int>(b)};
}

InvariantPoly assemble_common(const CoeffQuery& q, const CoeffTable& table, CoeffKind kind) {
    validate_query(q);
    if (table.kind != kind) throw std::invalid_argument("assemble: table kind mismatch");
    if (table.query != q) throw std::invalid_argument("assemble: table query mismatch");

    Rational norm = table.sum();
    if (norm == 0) throw std::logic_error("assemble: vanishing table sum contradicts uniqueness");

    InvariantPoly inv;
    if (kind == CoeffKind::even) {
        inv.spec = InvariantSpec(q.j, q.k, q.j + q.k - 2 * q.n);
        inv.prefactor = wigner3j(q.j, q.k, inv.spec.l, 0, 0, 0);
        inv.imaginary = false;
        inv.zeta_power = 0;
    } else {
        inv.spec = InvariantSpec(q.j + 1, q.k + 1, q.j + q.k - 2 * q.n + 1);
        SurdSum root = SurdSum::term(Rational(1, 2), factorial(q.j + 2) * factorial(q.k + 2) /
                                                         (factorial(q.j) * factorial(q.k)));
        inv.prefactor = root * wigner3j(q.j + 1, q.k + 1, inv.spec.l, 1, -1, 0);
        inv.imaginary = true;
        inv.zeta_power = 1;
    }
    if (inv.prefactor.is_zero() || inv.prefactor.term_count() != 1)
        throw std::logic_error("assemble: prefactor must be one nonzero surd term");

    for (const auto& [idx, value] : table.entries) {
        if (value == 0) continue;
        inv.poly.emplace(scalar_monomial(q, idx), value / norm);
    }
    return inv;
}

}  // namespace

std::map<ScalarMonomial, ComplexSurd> InvariantPoly::coefficient_map() const {
    std::map<ScalarMonomial, ComplexSurd> out;
    for (const auto& [mono, coef] : poly) {
        SurdSum v = prefactor * coef;
        out.emplace(mono, imaginary ? ComplexSurd(SurdSum(), v) : ComplexSurd(v));
    }
    return out;
}

InvariantPoly assemble_even(const CoeffQuery& q, const CoeffTable& table) {
    return assemble_common(q, table, CoeffKind::even);
}

InvariantPoly assemble_odd(const CoeffQuery& q, const CoeffTable& table) {
    return assemble_common(q, table, CoeffKind::odd);
}

InvariantPoly assemble(long j, long k, long l) {
    Canonicalization can = canonicalize(j, k, l);
    CoeffQuery q = can.spec.coeff_query();
    InvariantPoly inv = can.spec.odd() ? assemble_odd(q, table_odd_closed(q))
                                       : assemble_even(q, table_even_closed(q));
    if (can.permutation == std::array<int, 3>{1, 2, 3}) return inv;

    // Relabel slots: requested slot i carries canonical slot permutation[i-1].
    // The swap phase and the zeta sign flip cancel, so coefficients are kept.
    InvariantPoly out = inv;
    out.spec = InvariantSpec(j, k, l);
    out.poly.clear();
    for (const auto& [mono, coef] : inv.poly) {
        ScalarMonomial m{};
        for (int i = 0; i < 3; ++i) {
            m[i] = mono[can.permutation[i] - 1];
            m[3 + i] = mono[3 + can.permutation[i] - 1];
        }
        out.poly.emplace(m, coef);
    }
    return out;
}

namespace {

using RatPoly9 = std::map<Mono9, Rational>;

void rp_add(RatPoly9& p, const Mono9& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = p.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

RatPoly9 rp_mul(const RatPoly9& a, const RatPoly9& b) {
    RatPoly9 out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            Mono9 m;
            for (int i = 0; i < 9; ++i) m[i] = ma[i] + mb[i];
            rp_add(out, m, ca * cb);
        }
    }
    return out;
}

RatPoly9 rp_one() {
    return {{Mono9{}, Rational(1)}};
}

// xi_a = r_a . r_a and the cross dot products as 9-variable polynomials.
RatPoly9 scalar_basis(int which) {
    auto dot = [](int u, int v) {
        RatPoly9 p;
        for (int i = 0; i < 3; ++i) {
            Mono9 m{};
            m[3 * u + i] += 1;
            m[3 * v + i] += 1;
            rp_add(p, m, 1);
        }
        return p;
    };
    switch (which) {
        case 0: return dot(0, 0);
        case 1: return dot(1, 1);
        case 2: return dot(2, 2);
        case 3: return dot(1, 2);
        case 4: return dot(2, 0);
        default: return dot(0, 1);
    }
}

RatPoly9 zeta_poly() {
    // (r1 x r2) . r3 = det(r1; r2; r3): signed sum over component permutations.
    static constexpr int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                       {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    RatPoly9 p;
    for (int t = 0; t < 6; ++t) {
        Mono9 m{};
        m[0 + perm[t][0]] += 1;
        m[3 + perm[t][1]] += 1;
        m[6 + perm[t][2]] += 1;
        rp_add(p, m, t < 3 ? 1 : -1);
    }
    return p;
}

RatPoly9 expand_scalar_poly(const ScalarPoly& poly, int zeta_power) {
    // Cache powers of each scalar factor; exponents at desk scale are small.
    std::array<std::vector<RatPoly9>, 6> powers;
    auto power_of = [&](int which, int e) -> const RatPoly9& {
        auto& cache = powers[which];
        if (cache.empty()) cache.push_back(rp_one());
        while (static_cast<int>(cache.size()) <= e) cache.push_back(rp_mul(cache.back(), scalar_basis(which)));
        return cache[e];
    };

    RatPoly9 acc;
    for (const auto& [mono, coef] : poly) {
        RatPoly9 term = rp_one();
        for (int which = 0; which < 6; ++which)
            if (mono[which]) term = rp_mul(term, power_of(which, mono[which]));
        for (const auto& [m, c] : term) rp_add(acc, m, c * coef);
    }
    for (int z = 0; z < zeta_power; ++z) acc = rp_mul(acc, zeta_poly());
    return acc;
}

}  // namespace

CartesianPoly to_cartesian(const InvariantPoly& inv) {
    RatPoly9 expanded = expand_scalar_poly(inv.poly, inv.zeta_power);
    CartesianPoly out;
    for (const auto& [m, c] : expanded) {
        SurdSum v = inv.prefactor * c;
        out.add_term(m, inv.imaginary ? ComplexSurd(SurdSum(), v) : ComplexSurd(v));
    }
    return out;
}

CartesianPoly zeta_squared_identity_residual() {
    ScalarPoly rhs;
    auto put = [&](std::array<int, 6> e, long c) { rhs[e] = Rational(c); };
    put({1, 1, 1, 0, 0, 0}, 1);
    put({1, 0, 0, 2, 0, 0}, -1);
    put({0, 1, 0, 0, 2, 0}, -1);
    put({0, 0, 1, 0, 0, 2}, -1);
    put({0, 0, 0, 1, 1, 1}, 2);

    RatPoly9 z2 = rp_mul(zeta_poly(), zeta_poly());
    RatPoly9 rhs9 = expand_scalar_poly(rhs, 0);
    CartesianPoly out;
    for (const auto& [m, c] : z2) out.add_term(m, ComplexSurd(SurdSum(Rational(c))));
    for (const auto& [m, c] : rhs9) out.add_term(m, ComplexSurd(SurdSum(Rational(-c))));
    return out;
}

namespace {

Rational dot(const Vec3Rat& a, const Vec3Rat& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Rational triple_product(const Vec3Rat& a, const Vec3Rat& b, const Vec3Rat& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

}  // namespace

ComplexSurd evaluate(const InvariantPoly& inv, const Vec3Rat& r1, const Vec3Rat& r2, const Vec3Rat& r3) {
    std::array<Rational, 6> values{dot(r1, r1), dot(r2, r2), dot(r3, r3),
                                   dot(r2, r3), dot(r3, r1), dot(r1, r2)};
    Rational acc = 0;
    for (const auto& [mono, coef] : inv.poly) {
        Rational term = coef;
        for (int i = 0; i < 6; ++i)
            if (mono[i]) term *= rational_pow(values[i], mono[i]);
        acc += term;
    }
    if (inv.zeta_power) acc *= rational_pow(triple_product(r1, r2, r3), inv.zeta_power);
    SurdSum v = inv.prefactor * acc;
    return inv.imaginary ? ComplexSurd(SurdSum(), v) : ComplexSurd(v);
}

std::complex<double> evaluate_double(const InvariantPoly& inv, const std::array<double, 3>& r1,
                                     const std::array<double, 3>& r2, const std::array<double, 3>& r3) {
    auto ddot = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
        return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    };
    std::array<double, 6> values{ddot(r1, r1), ddot(r2, r2), ddot(r3, r3),
                                 ddot(r2, r3), ddot(r3, r1), ddot(r1, r2)};
    double acc = 0;
    for (const auto& [mono, coef] : inv.poly) {
        double term = coef.convert_to<double>();
        for (int i = 0; i < 6; ++i)
            for (int e = 0; e < mono[i]; ++e) term *= values[i];
        acc += term;
    }
    if (inv.zeta_power) {
        double z = r1[0] * (r2[1] * r3[2] - r2[2] * r3[1]) - r1[1] * (r2[0] * r3[2] - r2[2] * r3[0]) +
                   r1[2] * (r2[0] * r3[1] - r2[1] * r3[0]);
        for (int e = 0; e < inv.zeta_power; ++e) acc *= z;
    }
    double v = inv.prefactor.to_double() * acc;
    return inv.imaginary ? std::complex<double>(0.0, v) : std::complex<double>(v, 0.0);
}

}  // namespace rotinv
