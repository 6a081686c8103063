#include "rotinv/wigner.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace rotinv {

bool triangle_ok(long j, long k, long l) {
    return std::abs(j - k) <= l && l <= j + k;
}

int wigner3j_permutation_phase(long j, long k, long l) {
    return (j + k + l) % 2 == 0 ? 1 : -1;
}

namespace {

using Key = std::array<long, 6>;

// Racah single-sum evaluation: phase * sqrt(triangle coefficient * projection
// factorials) * alternating rational sum. The radical stays isolated, so the
// result is a single surd term.
SurdSum eval_racah(long j1, long j2, long j3, long m1, long m2, long m3) {
    Rational delta(factorial(j1 + j2 - j3) * factorial(j1 - j2 + j3) * factorial(-j1 + j2 + j3),
                   factorial(j1 + j2 + j3 + 1));
    BigInt proj = factorial(j1 + m1) * factorial(j1 - m1) * factorial(j2 + m2) *
                  factorial(j2 - m2) * factorial(j3 + m3) * factorial(j3 - m3);

    long tmin = std::max({0L, j2 - j3 - m1, j1 - j3 + m2});
    long tmax = std::min({j1 + j2 - j3, j1 - m1, j2 + m2});
    Rational sum = 0;
    for (long t = tmin; t <= tmax; ++t) {
        BigInt den = factorial(t) * factorial(j1 + j2 - j3 - t) * factorial(j1 - m1 - t) *
                     factorial(j2 + m2 - t) * factorial(j3 - j2 + m1 + t) *
                     factorial(j3 - j1 - m2 + t);
        Rational term(1, den);
        if (t % 2) term = -term;
        sum += term;
    }
    if (sum == 0) return {};

    SurdSum root = SurdSum::sqrt_of(delta * Rational(proj));
    if ((j1 - j2 - m3) % 2) sum = -sum;
    return root * sum;
}

struct Memo {
    std::map<Key, SurdSum> values;
    std::shared_mutex mutex;
};

Memo& memo() {
    static Memo m;
    return m;
}

// Canonical memo key: lexicographic minimum over the 12 symmetry images
// (column permutations and global m negation). `flip` reports whether the
// chosen image differs from the input by an odd transform, which costs a
// factor (-1)^(j1+j2+j3).
Key canonical_key(const Key& in, bool& flip) {
    static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    static constexpr bool perm_odd[6] = {false, true, true, false, false, true};
    Key best = in;
    bool best_flip = false;
    bool have = false;
    for (int p = 0; p < 6; ++p) {
        for (int neg = 0; neg < 2; ++neg) {
            Key k;
            for (int i = 0; i < 3; ++i) {
                k[i] = in[perms[p][i]];
                k[3 + i] = neg ? -in[3 + perms[p][i]] : in[3 + perms[p][i]];
            }
            bool f = perm_odd[p] != (neg != 0);
            if (!have || k < best) {
                best = k;
                best_flip = f;
                have = true;
            }
        }
    }
    flip = best_flip;
    return best;
}

}  // namespace

SurdSum wigner3j(const ThreeJArgs& a) {
    if (a.j1 < 0 || a.j2 < 0 || a.j3 < 0) return {};
    if (a.m1 + a.m2 + a.m3 != 0) return {};
    if (!triangle_ok(a.j1, a.j2, a.j3)) return {};
    if (std::abs(a.m1) > a.j1 || std::abs(a.m2) > a.j2 || std::abs(a.m3) > a.j3) return {};

    bool flip = false;
    Key key = canonical_key({a.j1, a.j2, a.j3, a.m1, a.m2, a.m3}, flip);
    int phase = flip ? wigner3j_permutation_phase(a.j1, a.j2, a.j3) : 1;

    {
        std::shared_lock lock(memo().mutex);
        auto it = memo().values.find(key);
        if (it != memo().values.end()) return phase < 0 ? -it->second : it->second;
    }
    SurdSum value = eval_racah(key[0], key[1], key[2], key[3], key[4], key[5]);
    {
        std::unique_lock lock(memo().mutex);
        memo().values.emplace(key, value);
    }
    return phase < 0 ? -value : value;
}

SurdSum wigner3j(long j1, long j2, long j3, long m1, long m2, long m3) {
    return wigner3j(ThreeJArgs{j1, j2, j3, m1, m2, m3});
}

}  // namespace rotinv
