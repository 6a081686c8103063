#include "rotinv/solid.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace rotinv {

namespace {

// i^t as a rational complex unit, t >= 0.
ComplexSurd i_power(int t) {
    switch (t & 3) {
        case 0: return {SurdSum(1), SurdSum()};
        case 1: return {SurdSum(), SurdSum(1)};
        case 2: return {SurdSum(-1), SurdSum()};
        default: return {SurdSum(), SurdSum(-1)};
    }
}

CartesianPoly build_nonneg(int l, int m, int slot) {
    int base = 3 * (slot - 1);
    CartesianPoly p;
    for (int k = 0; 2 * k <= l - m; ++k) {
        int px = m + k;       // power of (x+iy)
        int qx = k;           // power of (x-iy)
        int pz = l - m - 2 * k;
        Rational factor(1, (BigInt(1) << (m + 2 * k)) * factorial(m + k) * factorial(k) * factorial(pz));
        if ((m + k) % 2) factor = -factor;
        for (int u = 0; u <= px; ++u) {
            for (int v = 0; v <= qx; ++v) {
                ComplexSurd unit = i_power((px - u) + (qx - v));
                Rational coef = factor * Rational(binomial(px, u) * binomial(qx, v));
                if ((qx - v) % 2) coef = -coef;  // (-i)^(q-v) vs i^(q-v)
                Mono9 mono{};
                mono[base] = u + v;
                mono[base + 1] = (px - u) + (qx - v);
                mono[base + 2] = pz;
                unit.re *= coef;
                unit.im *= coef;
                p.add_term(mono, unit);
            }
        }
    }
    SurdSum norm = SurdSum::term(1, factorial(l + m) * factorial(l - m));
    return p.scaled(ComplexSurd(norm));
}

struct Cache {
    std::map<std::tuple<int, int, int>, CartesianPoly> polys;
    std::shared_mutex mutex;
};

Cache& cache() {
    static Cache c;
    return c;
}

}  // namespace

CartesianPoly racah_solid_harmonic(int l, int m, int slot) {
    if (l < 0) throw std::invalid_argument("racah_solid_harmonic: l must be non-negative");
    if (std::abs(m) > l) throw std::invalid_argument("racah_solid_harmonic: |m| > l");
    if (slot < 1 || slot > 3) throw std::invalid_argument("racah_solid_harmonic: slot must be 1..3");

    auto key = std::make_tuple(l, m, slot);
    {
        std::shared_lock lock(cache().mutex);
        auto it = cache().polys.find(key);
        if (it != cache().polys.end()) return it->second;
    }
    CartesianPoly p;
    if (m >= 0) {
        p = build_nonneg(l, m, slot);
    } else {
        p = build_nonneg(l, -m, slot).conjugated();
        if (m % 2) p = p.scaled(ComplexSurd(SurdSum(-1)));
    }
    {
        std::unique_lock lock(cache().mutex);
        cache().polys.emplace(key, p);
    }
    return p;
}

}  // namespace rotinv
