#include "rotinv/coeffs.hpp"

#include <algorithm>
#include <stdexcept>

namespace rotinv {

const char* to_string(CoeffKind kind) {
    return kind == CoeffKind::even ? "even" : "odd";
}

void validate_query(const CoeffQuery& q) {
    if (!(0 <= q.n && 2 * q.n <= q.j && q.j <= q.k))
        throw std::invalid_argument("CoeffQuery: need 0 <= 2n <= j <= k, got j=" + std::to_string(q.j) +
                                    " k=" + std::to_string(q.k) + " n=" + std::to_string(q.n));
}

std::vector<CoeffIndex> coeff_domain(const CoeffQuery& q) {
    std::vector<CoeffIndex> out;
    for (long a = 0; a <= q.j / 2; ++a)
        for (long b = 0; b <= q.j - 2 * a; ++b)
            for (long c = std::max(0L, q.n - a - b); c <= (q.k - b) / 2; ++c)
                out.push_back({a, b, c});
    return out;
}

bool in_coeff_domain(const CoeffQuery& q, const CoeffIndex& idx) {
    return 0 <= idx.a && idx.a <= q.j / 2 && 0 <= idx.b && idx.b <= q.j - 2 * idx.a &&
           std::max(0L, q.n - idx.a - idx.b) <= idx.c && idx.c <= (q.k - idx.b) / 2;
}

Rational CoeffTable::lookup(long a, long b, long c) const {
    auto it = entries.find(CoeffIndex{a, b, c});
    return it == entries.end() ? Rational(0) : it->second;
}

Rational CoeffTable::sum() const {
    Rational s = 0;
    for (const auto& [idx, v] : entries) s += v;
    return s;
}

namespace {

long lambda_of(const CoeffQuery& q) {
    return (q.j + q.k) / 2 - q.n;
}

// prod_{m=lo}^{lambda} 2m(2j+2k-4n-2m+plus); empty products are 1.
Rational stage_product(const CoeffQuery& q, long lo, int plus) {
    Rational r = 1;
    for (long m = lo; m <= lambda_of(q); ++m) r *= Rational(2 * m * (2 * q.j + 2 * q.k - 4 * q.n - 2 * m + plus));
    return r;
}

// Shared shape of g_function / f_function; `plus` selects the double-factorial
// family (+1 even, +3 odd).
Rational gf_function(const CoeffQuery& q, long a, long b, int plus) {
    if (a < 0 || b < 0 || a + b > q.n) return 0;
    const long j = q.j, k = q.k, n = q.n;
    Rational s = 0;
    for (long r = std::max(0L, 2 * a + b - n); r <= a; ++r) {
        Rational t(factorial(n), (BigInt(1) << (a - r)) * factorial(r) * factorial(a - r) * factorial(b));
        t *= Rational(factorial(j - 2 * a - b + r) * factorial(k - 2 * n + 2 * a + b),
                      factorial(n - 2 * a - b + r) * factorial(j - n) * factorial(k - 2 * n + 2 * a + b - r));
        t *= Rational(double_factorial(2 * j - 2 * a - 2 + plus) * double_factorial(2 * k - 2 * n + 4 * a + 2 * b - 2 * r - 2 + plus),
                      double_factorial(2 * j - 2 * n - 2 + plus) * double_factorial(2 * k - 2 * n - 2 + plus));
        if ((a + b + r) % 2) t = -t;
        s += t;
    }
    return s;
}

using GF = Rational (*)(const CoeffQuery&, long, long);

// Entry at (a, b, n-a-b) for 0 <= a <= n, 0 <= b <= n-a.
Rational region_diag(const CoeffQuery& q, long a, long b, GF gf, int plus) {
    return gf(q, a, b) *
           Rational(factorial(q.j - q.n) * factorial(q.k - q.n),
                    factorial(q.j - 2 * a - b) * factorial(q.k - 2 * q.n + 2 * a + b)) *
           stage_product(q, 1, plus);
}

// Entry at (a, b, n-a-b+c) for c >= 0 within the same (a,b) strip.
Rational region_above_diag(const CoeffQuery& q, long a, long b, long c, GF gf, int plus) {
    const long j = q.j, k = q.k, n = q.n;
    Rational sum = 0;
    for (long s = 0; s <= b; ++s) {
        for (long r = std::max(s, c - a); r <= c; ++r) {
            Rational t = gf(q, a - c + r, b - s);
            if (t == 0) continue;
            t *= Rational((BigInt(1) << s) * factorial(c) * factorial(j - n) * factorial(k - n),
                          factorial(c - r) * factorial(r - s) * factorial(s) * factorial(j - 2 * a - b) *
                              factorial(k - 2 * n + 2 * a + b - 2 * c));
            if (c % 2) t = -t;
            sum += t;
        }
    }
    return sum * stage_product(q, c + 1, plus);
}

// Entry at (a, n-a+b, c) for 0 <= a <= n, 0 <= b <= j-n-a.
Rational region_high_b(const CoeffQuery& q, long a, long b, long c, GF gf, int plus) {
    const long j = q.j, k = q.k, n = q.n;
    Rational sum = 0;
    for (long s = std::max(0L, b - a); s <= std::min(b + c, n - a + b); ++s) {
        for (long r = std::max(s, b + c - a); r <= std::min(s + c, b + c); ++r) {
            Rational t = gf(q, a - b - c + r, n - a + b - s);
            if (t == 0) continue;
            t *= Rational((BigInt(1) << s) * factorial(b + c), factorial(r - s) * factorial(s) * factorial(b + c - r));
            t *= Rational(factorial(j - n) * factorial(k - n),
                          factorial(j - n - a - b) * factorial(k - n + a - b - 2 * c));
            if ((b + c) % 2) t = -t;
            sum += t;
        }
    }
    return sum * stage_product(q, b + c + 1, plus);
}

// Entry at (n+a, b, c) for 0 <= a <= [j/2]-n.
Rational region_high_a(const CoeffQuery& q, long a, long b, long c, GF gf, int plus) {
    const long j = q.j, k = q.k, n = q.n;
    Rational sum = 0;
    for (long s = std::max(0L, b - n); s <= b; ++s) {
        for (long r = std::max(s, b + c - n); r <= s + c; ++r) {
            Rational t = gf(q, n - b - c + r, b - s);
            if (t == 0) continue;
            t *= Rational((BigInt(1) << s) * factorial(a + b + c),
                          factorial(r - s) * factorial(s) * factorial(a + b + c - r));
            t *= Rational(factorial(j - n) * factorial(k - n),
                          factorial(j - 2 * n - 2 * a - b) * factorial(k - 2 * c - b));
            if ((a + b + c) % 2) t = -t;
            sum += t;
        }
    }
    return sum * stage_product(q, a + b + c + 1, plus);
}

CoeffTable closed_table(const CoeffQuery& q, CoeffKind kind) {
    validate_query(q);
    GF gf = kind == CoeffKind::even ? &g_function : &f_function;
    int plus = kind == CoeffKind::even ? 1 : 3;
    CoeffTable t{q, kind, lambda_of(q), {}};
    for (const CoeffIndex& idx : coeff_domain(q)) {
        const auto [a, b, c] = idx;
        Rational v;
        if (a > q.n) {
            v = region_high_a(q, a - q.n, b, c, gf, plus);
        } else if (a + b > q.n) {
            v = region_high_b(q, a, b - (q.n - a), c, gf, plus);
        } else if (a + b + c == q.n) {
            v = region_diag(q, a, b, gf, plus);
        } else {
            v = region_above_diag(q, a, b, c - (q.n - a - b), gf, plus);
        }
        t.entries.emplace(idx, v);
    }
    return t;
}

Rational seed(const CoeffQuery& q, int plus) {
    validate_query(q);
    return Rational(factorial(q.k - q.n) * double_factorial(2 * q.j - 2 + plus),
                    factorial(q.k - 2 * q.n) * double_factorial(2 * q.j - 2 * q.n - 2 + plus)) *
           stage_product(q, 1, plus);
}

// The three recursion relations, substituting table entries (zero outside the
// domain). Relation 1 steps a, relation 2 steps c, relation 3 steps the
// anti-diagonal level a+b+c.
Rational residual(const CoeffTable& t, int rel, long a, long b, long c, int plus) {
    const long j = t.query.j, k = t.query.k, n = t.query.n;
    switch (rel) {
        case 1:
            return Rational(2 * a * (2 * j - 2 * a + plus)) * t.lookup(a, b, c) +
                   Rational((j - 2 * a - b + 2) * (j - 2 * a - b + 1)) * t.lookup(a - 1, b, c) +
                   Rational((b + 2) * (b + 1)) * t.lookup(a - 1, b + 2, c - 1) +
                   Rational(2 * (b + 1) * (j - 2 * a - b + 1)) * t.lookup(a - 1, b + 1, c);
        case 2:
            return Rational(2 * c * (2 * k - 2 * c + plus)) * t.lookup(a, b, c) +
                   Rational((k - 2 * c - b + 2) * (k - 2 * c - b + 1)) * t.lookup(a, b, c - 1) +
                   Rational((b + 2) * (b + 1)) * t.lookup(a - 1, b + 2, c - 1) +
                   Rational(2 * (b + 1) * (k - 2 * c - b + 1)) * t.lookup(a, b + 1, c - 1);
        case 3:
            return Rational(2 * (a + b + c - n) * (2 * k + 2 * j - 2 * a - 2 * b - 2 * c - 2 * n + plus)) *
                       t.lookup(a, b, c) +
                   Rational((k - 2 * c - b + 2) * (k - 2 * c - b + 1)) * t.lookup(a, b, c - 1) +
                   Rational((j - 2 * a - b + 2) * (j - 2 * a - b + 1)) * t.lookup(a - 1, b, c) +
                   Rational(2 * (k - 2 * c - b + 1) * (j - 2 * a - b + 1)) * t.lookup(a, b - 1, c);
        default:
            throw std::invalid_argument("recursion_residual: relation must be 1..3");
    }
}

CoeffTable recursive_table(const CoeffQuery& q, CoeffKind kind) {
    validate_query(q);
    int plus = kind == CoeffKind::even ? 1 : 3;
    const long j = q.j, k = q.k, n = q.n;
    CoeffTable t{q, kind, lambda_of(q), {}};
    auto pivot_check = [&](const Rational& lead, long a, long b, long c) {
        if (lead == 0)
            throw std::logic_error("recursive table: zero pivot at a=" + std::to_string(a) +
                                   " b=" + std::to_string(b) + " c=" + std::to_string(c));
    };

    t.entries[{0, 0, n}] = seed(q, plus);

    // Along the anti-diagonal a+b+c = n: grow b with relation 2 at a = 0, then
    // grow a with relation 1; each step has one unknown.
    for (long b = 0; b < n; ++b) {
        long c = n - b;
        Rational lead(2 * (b + 1) * (k - 2 * c - b + 1));
        pivot_check(lead, 0, b + 1, c - 1);
        t.entries[{0, b + 1, c - 1}] =
            -(Rational(2 * c * (2 * k - 2 * c + plus)) * t.lookup(0, b, c) +
              Rational((k - 2 * c - b + 2) * (k - 2 * c - b + 1)) * t.lookup(0, b, c - 1)) /
            lead;
    }
    for (long a = 1; a <= n; ++a) {
        for (long b = 0; b <= n - a; ++b) {
            long c = n - a - b;
            Rational lead(2 * a * (2 * j - 2 * a + plus));
            pivot_check(lead, a, b, c);
            t.entries[{a, b, c}] = -(Rational((j - 2 * a - b + 2) * (j - 2 * a - b + 1)) * t.lookup(a - 1, b, c) +
                                     Rational((b + 2) * (b + 1)) * t.lookup(a - 1, b + 2, c - 1) +
                                     Rational(2 * (b + 1) * (j - 2 * a - b + 1)) * t.lookup(a - 1, b + 1, c)) /
                                   lead;
        }
    }

    // Everything above the anti-diagonal comes from relation 3; the three
    // sweeps below visit indices so that the stepped entry is the only unknown.
    auto solve3 = [&](long a, long b, long c) {
        Rational lead(2 * (a + b + c - n) * (2 * k + 2 * j - 2 * a - 2 * b - 2 * c - 2 * n + plus));
        pivot_check(lead, a, b, c);
        t.entries[{a, b, c}] = -(Rational((k - 2 * c - b + 2) * (k - 2 * c - b + 1)) * t.lookup(a, b, c - 1) +
                                 Rational((j - 2 * a - b + 2) * (j - 2 * a - b + 1)) * t.lookup(a - 1, b, c) +
                                 Rational(2 * (k - 2 * c - b + 1) * (j - 2 * a - b + 1)) * t.lookup(a, b - 1, c)) /
                               lead;
    };
    for (long a = 0; a <= n; ++a)
        for (long b = 0; b <= n - a; ++b)
            for (long c = n - a - b + 1; c <= (k - b) / 2; ++c) solve3(a, b, c);
    for (long a = 0; a <= n; ++a)
        for (long b = n - a + 1; b <= j - 2 * a; ++b)
            for (long c = 0; c <= (k - b) / 2; ++c) solve3(a, b, c);
    for (long a = n + 1; a <= j / 2; ++a)
        for (long b = 0; b <= j - 2 * a; ++b)
            for (long c = 0; c <= (k - b) / 2; ++c) solve3(a, b, c);

    return t;
}

}  // namespace

Rational g_function(const CoeffQuery& q, long a, long b) {
    return gf_function(q, a, b, 1);
}

Rational f_function(const CoeffQuery& q, long a, long b) {
    return gf_function(q, a, b, 3);
}

Rational seed_even(const CoeffQuery& q) {
    return seed(q, 1);
}

Rational seed_odd(const CoeffQuery& q) {
    return seed(q, 3);
}

CoeffTable table_even_closed(const CoeffQuery& q) {
    return closed_table(q, CoeffKind::even);
}

CoeffTable table_odd_closed(const CoeffQuery& q) {
    return closed_table(q, CoeffKind::odd);
}

CoeffTable table_even_recursive(const CoeffQuery& q) {
    return recursive_table(q, CoeffKind::even);
}

CoeffTable table_odd_recursive(const CoeffQuery& q) {
    return recursive_table(q, CoeffKind::odd);
}

Rational recursion_residual(const CoeffTable& table, int rel, long a, long b, long c) {
    return residual(table, rel, a, b, c, table.kind == CoeffKind::even ? 1 : 3);
}

std::optional<Rational> closed_entry_via_region(const CoeffQuery& q, CoeffKind kind, int region,
                                                long a, long b, long c) {
    validate_query(q);
    if (!in_coeff_domain(q, CoeffIndex{a, b, c})) return std::nullopt;
    GF gf = kind == CoeffKind::even ? &g_function : &f_function;
    int plus = kind == CoeffKind::even ? 1 : 3;
    const long n = q.n;
    switch (region) {
        case 1:
            if (a > n || b > n - a || a + b + c != n) return std::nullopt;
            return region_diag(q, a, b, gf, plus);
        case 2:
            if (a > n || b > n - a || c < n - a - b) return std::nullopt;
            return region_above_diag(q, a, b, c - (n - a - b), gf, plus);
        case 3:
            if (a > n || b < n - a) return std::nullopt;
            return region_high_b(q, a, b - (n - a), c, gf, plus);
        case 4:
            if (a < n) return std::nullopt;
            return region_high_a(q, a - n, b, c, gf, plus);
        default:
            throw std::invalid_argument("closed_entry_via_region: region must be 1..4");
    }
}

}  // namespace rotinv
